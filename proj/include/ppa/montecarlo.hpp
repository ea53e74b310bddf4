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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/core.hpp"
#include "ppa/distfit.hpp"
#include "ppa/rng.hpp"

namespace ppa {

/// Distribution of attention probabilities in the sampled market.
struct PDistSpec {
  enum class Kind { Uniform01, Beta, Degenerate };

  Kind kind = Kind::Uniform01;
  BetaParams beta{1.0, 1.0};  ///< shapes, when kind == Beta
  double point = 1.0;         ///< mass point, when kind == Degenerate

  static PDistSpec uniform01();
  static PDistSpec beta_dist(double a, double b);
  static PDistSpec degenerate(double p0);

  double sample(Rng& rng) const;
  void validate() const;

  /// Compact tag used in flags and CSV: "uniform", "beta:a,b",
  /// "degenerate:p". Shape values round-trip exactly.
  std::string tag() const;
  static PDistSpec parse(std::string_view tag);
};

/// One Monte Carlo experiment: a (rho, alpha) grid over a common market.
///
/// rho mixes the valuation model per bidder: with probability rho the
/// valuation is tied to attention (v = 100 p), otherwise uniform on [0, 100].
/// alpha is the probability a bidder bids under framing.
struct SimConfig {
  MarketParams market{};
  PDistSpec p_dist{};
  std::vector<double> rho_grid{0.0};
  std::vector<double> alpha_grid{0.0};
  std::int64_t draws = 10000;
  std::uint64_t seed = 0;
  /// Worker-thread cap for sweeps; 0 means hardware concurrency. Results are
  /// bitwise identical for any value.
  int max_threads = 0;

  void validate() const;
};

struct SchemeStats {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Per-scheme revenue statistics of one (rho, alpha) grid cell.
struct CellStats {
  double rho = 0.0;
  double alpha = 0.0;
  std::int64_t draws = 0;
  std::array<SchemeStats, 3> schemes{};  // indexed by Scheme

  const SchemeStats& of(Scheme s) const {
    return schemes[static_cast<std::size_t>(s)];
  }
};

/// One output row; column order mirrors the CSV schema.
struct RevenueRow {
  double rho = 0.0;
  double alpha = 0.0;
  Scheme scheme = Scheme::PPA;
  double mean_revenue = 0.0;
  double std_error = 0.0;
  std::int64_t draws = 0;
  int n_bidders = 0;
  double ctr = 0.0;
  std::string p_dist;
};

struct RevenueTable {
  std::vector<RevenueRow> rows;
};

/// Draws one type profile of the statistical market model. Per bidder:
/// sale probabilities uniform on [0,1], attention from p_dist, the rho coin,
/// the valuation, then the posture coin (always consumed, so profiles are
/// identical across alpha under the same stream).
TypeProfile sample_profile(Rng& rng, const SimConfig& cfg, double rho,
                           double alpha);

/// Mean revenue and standard error per scheme at one grid cell. All three
/// schemes are priced on the same sampled profiles (common random numbers),
/// and every replicate draws its own substream keyed on (seed, rho bits,
/// replicate index), so results do not depend on thread count.
CellStats run_cell(const SimConfig& cfg, double rho, double alpha);

/// Runs every (alpha, rho) cell; rows ordered by (alpha, rho, scheme).
RevenueTable sweep(const SimConfig& cfg);

/// Zero of the PPI-PPC mean-revenue difference over rho at one alpha.
struct CrossingEstimate {
  enum class Kind { None, Single, Multiple };
  Kind kind = Kind::None;
  double rho = 0.0;      ///< interpolated crossing, when kind == Single
  int sign_changes = 0;  ///< total sign changes found
};

/// Linear-interpolated sign change of (PPI - PPC) across the table's rho grid
/// for the given alpha. Throws std::invalid_argument when the table lacks
/// PPI/PPC rows at three or more rho points for that alpha.
CrossingEstimate estimate_crossing(const RevenueTable& table, double alpha);

}  // namespace ppa
