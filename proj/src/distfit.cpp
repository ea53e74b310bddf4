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

#include "ppa/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ppa {

namespace {

// mean(ln x) and mean(ln(1-x)) accumulated in extended precision; the Newton
// stop criteria sit well below double noise on naive sums.
struct SufficientStats {
  double mean_log = 0.0;
  double mean_log1m = 0.0;
  std::size_t n = 0;
};

SufficientStats stats_of(const ProbSample& sample) {
  long double slog = 0.0L, slog1m = 0.0L;
  for (double x : sample.values) {
    slog += std::log(static_cast<long double>(x));
    slog1m += std::log1p(static_cast<long double>(-x));
  }
  const auto n = static_cast<long double>(sample.values.size());
  return {static_cast<double>(slog / n), static_cast<double>(slog1m / n),
          sample.values.size()};
}

}  // namespace

void BetaParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("BetaParams: shapes must be finite and > 0");
}

ProbSample make_prob_sample(std::span<const double> raw) {
  if (raw.size() < 2)
    throw std::invalid_argument("ProbSample: need at least 2 values");
  ProbSample s;
  s.values.reserve(raw.size());
  for (double x : raw) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
      throw std::invalid_argument("ProbSample: value out of range [0, 1]");
    const double clamped =
        std::clamp(x, ProbSample::kClampEps, 1.0 - ProbSample::kClampEps);
    if (clamped != x) ++s.clamp_count;
    s.values.push_back(clamped);
  }
  return s;
}

double digamma(double z) {
  if (!(z > 0.0))
    throw std::domain_error("digamma: argument must be > 0");
  double acc = 0.0;
  while (z < 6.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  // psi(z) ~ ln z - 1/(2z) - sum B_2k / (2k z^2k), truncated after z^-14;
  // with z >= 6 the first omitted term is below 2e-13.
  static const double coef[] = {-1.0 / 12.0,  1.0 / 120.0,     -1.0 / 252.0,
                                1.0 / 240.0,  -1.0 / 132.0,    691.0 / 32760.0,
                                -1.0 / 12.0};
  double series = 0.0;
  double pk = 1.0;
  for (double c : coef) {
    pk *= inv2;
    series += c * pk;
  }
  return acc + std::log(z) - 0.5 * inv + series;
}

double trigamma(double z) {
  if (!(z > 0.0))
    throw std::domain_error("trigamma: argument must be > 0");
  double acc = 0.0;
  while (z < 6.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  // psi'(z) ~ 1/z + 1/(2z^2) + sum B_2k / z^(2k+1), truncated after z^-15.
  static const double coef[] = {1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0,
                                -1.0 / 30.0, 5.0 / 66.0,      -691.0 / 2730.0,
                                7.0 / 6.0};
  double series = 0.0;
  double pk = inv;
  for (double c : coef) {
    pk *= inv2;
    series += c * pk;
  }
  return acc + inv + 0.5 * inv2 + series;
}

BetaParams moment_init(const ProbSample& sample) {
  const auto n = static_cast<double>(sample.values.size());
  if (n < 2)
    throw std::invalid_argument("moment_init: need at least 2 values");
  long double sum = 0.0L;
  for (double x : sample.values) sum += x;
  const double mean = static_cast<double>(sum / n);
  long double ss = 0.0L;
  for (double x : sample.values) {
    const long double d = x - mean;
    ss += d * d;
  }
  const double var = static_cast<double>(ss / (n - 1.0));
  if (var <= 0.0)
    throw std::invalid_argument("moment_init: degenerate sample (zero variance)");

  const double t = mean * (1.0 - mean) / var - 1.0;
  BetaParams init;
  init.a = std::max(mean * t, 1e-3);
  init.b = std::max((1.0 - mean) * t, 1e-3);
  return init;
}

double beta_log_likelihood(const ProbSample& sample, const BetaParams& params) {
  params.validate();
  const SufficientStats st = stats_of(sample);
  const auto n = static_cast<double>(st.n);
  return n * (std::lgamma(params.a + params.b) - std::lgamma(params.a) -
              std::lgamma(params.b) + (params.a - 1.0) * st.mean_log +
              (params.b - 1.0) * st.mean_log1m);
}

BetaFit beta_mle(const ProbSample& sample, int max_iterations) {
  const SufficientStats st = stats_of(sample);
  BetaParams theta = moment_init(sample);

  constexpr double kGradTol = 1e-10;
  constexpr double kStepTol = 1e-12;

  BetaFit fit;
  fit.params = theta;
  for (int iter = 0; iter <= max_iterations; ++iter) {
    // Score per observation; both components are exactly zero at the MLE.
    const double psi_ab = digamma(theta.a + theta.b);
    const double ga = psi_ab - digamma(theta.a) + st.mean_log;
    const double gb = psi_ab - digamma(theta.b) + st.mean_log1m;

    fit.params = theta;
    fit.iterations = iter;
    fit.grad_a = ga;
    fit.grad_b = gb;

    if (std::max(std::fabs(ga), std::fabs(gb)) < kGradTol) {
      fit.log_likelihood = beta_log_likelihood(sample, theta);
      return fit;
    }
    if (iter == max_iterations) break;

    const double tri_ab = trigamma(theta.a + theta.b);
    const double haa = tri_ab - trigamma(theta.a);
    const double hbb = tri_ab - trigamma(theta.b);
    const double hab = tri_ab;
    const double det = haa * hbb - hab * hab;
    double da = -(hbb * ga - hab * gb) / det;
    double db = -(haa * gb - hab * ga) / det;

    // Halve the Newton step until the iterate stays strictly positive.
    while (theta.a + da <= 0.0 || theta.b + db <= 0.0) {
      da *= 0.5;
      db *= 0.5;
    }
    theta.a += da;
    theta.b += db;

    if (std::max(std::fabs(da), std::fabs(db)) < kStepTol) {
      const double psi_ab2 = digamma(theta.a + theta.b);
      fit.params = theta;
      fit.iterations = iter + 1;
      fit.grad_a = psi_ab2 - digamma(theta.a) + st.mean_log;
      fit.grad_b = psi_ab2 - digamma(theta.b) + st.mean_log1m;
      fit.log_likelihood = beta_log_likelihood(sample, theta);
      return fit;
    }
  }

  fit.log_likelihood = beta_log_likelihood(sample, fit.params);
  throw ConvergenceError("beta_mle: Newton iteration did not converge", fit);
}

double gamma_sample(Rng& rng, double shape) {
  if (!(shape > 0.0))
    throw std::invalid_argument("gamma_sample: shape must be > 0");
  if (shape < 1.0) {
    // Boost to shape + 1 and scale back by U^(1/shape).
    const double g = gamma_sample(rng, shape + 1.0);
    double u = rng.next_unit();
    while (u <= 0.0) u = rng.next_unit();
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_unit();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (u > 0.0 &&
        std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

double beta_sample(Rng& rng, const BetaParams& params) {
  params.validate();
  const double ga = gamma_sample(rng, params.a);
  const double gb = gamma_sample(rng, params.b);
  double r = ga / (ga + gb);
  if (r <= 0.0) r = std::numeric_limits<double>::min();
  if (r >= 1.0) r = std::nextafter(1.0, 0.0);
  return r;
}

}  // namespace ppa
