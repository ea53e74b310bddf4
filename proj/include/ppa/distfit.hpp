#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2025-2026 The ppasim authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ppa/rng.hpp"

namespace ppa {

/// Shape parameters of a Beta(a, b) distribution; both strictly positive.
struct BetaParams {
  double a = 1.0;
  double b = 1.0;

  void validate() const;
  double mean() const noexcept { return a / (a + b); }
};

/// Probability observations prepared for the Beta likelihood. Raw values of
/// exactly 0 or 1 are clamped just inside the open interval (the
/// log-likelihood diverges at the boundary); anything outside [0, 1] is a
/// hard error, not clamped.
struct ProbSample {
  std::vector<double> values;
  std::size_t clamp_count = 0;

  static constexpr double kClampEps = 1e-9;
};

/// Throws std::invalid_argument on out-of-range or non-finite input, or on
/// fewer than 2 values.
ProbSample make_prob_sample(std::span<const double> raw);

/// Digamma psi(z) for z > 0, by upward recurrence to z >= 6 followed by the
/// asymptotic series. Absolute error below 1e-12 on [0.1, 100].
double digamma(double z);

/// Trigamma psi'(z) for z > 0, same recurrence-plus-series strategy.
double trigamma(double z);

/// Method-of-moments starting point for the MLE; shapes clamped below at 1e-3.
/// Throws std::invalid_argument when the sample variance is zero.
BetaParams moment_init(const ProbSample& sample);

/// Outcome of the Newton iteration on the Beta log-likelihood.
struct BetaFit {
  BetaParams params;
  int iterations = 0;
  double log_likelihood = 0.0;
  /// Per-observation score components psi(a+b) - psi(a) + mean(ln x) and
  /// psi(a+b) - psi(b) + mean(ln(1-x)); both vanish at the optimum.
  double grad_a = 0.0;
  double grad_b = 0.0;
};

/// Raised when the Newton iteration exhausts max_iterations; carries the last
/// iterate for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, BetaFit last)
      : std::runtime_error(what), last_iterate(last) {}
  BetaFit last_iterate;
};

/// Two-parameter maximum-likelihood fit of a Beta distribution.
///
/// Newton iterations from the moment estimate, with step halving to keep the
/// iterate in the positive orthant; stops when the score max-norm drops below
/// 1e-10 or the parameter step below 1e-12.
BetaFit beta_mle(const ProbSample& sample, int max_iterations = 200);

/// Beta log-likelihood, for reports and monotone-improvement checks.
double beta_log_likelihood(const ProbSample& sample, const BetaParams& params);

/// Gamma(shape, 1) variate by Marsaglia-Tsang squeeze rejection.
double gamma_sample(Rng& rng, double shape);

/// Beta(a, b) variate as Ga / (Ga + Gb) from two Gamma draws.
double beta_sample(Rng& rng, const BetaParams& params);

}  // namespace ppa
