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
#include <vector>

#include "ppa/core.hpp"

namespace ppa {

/// Bidder indices in weakly decreasing order of each valuation. Ties are
/// broken by ascending original index, so rankings are deterministic.
struct Ranking {
  std::vector<std::size_t> by_vpa;
  std::vector<std::size_t> by_vpc;
  std::vector<std::size_t> by_vpi;
};

Ranking rank_bidders(const TypeProfile& profile, const MarketParams& market);

/// Per-realization dominant-strategy revenues in closed form, used as an
/// oracle against the simulated mechanism.
///
/// Sophisticated population: ppa == ppc == p(top VPA) * second VPA, and
/// ppi == second-highest VPI. All-framed population: only PPC changes, to
/// p(top VPC) * ctr * second VPC.
struct ClosedFormRevenues {
  double ppa = 0.0;
  double ppc = 0.0;
  double ppi = 0.0;
  double framed_ppa = 0.0;
  double framed_ppc = 0.0;
  double framed_ppi = 0.0;
};

ClosedFormRevenues closed_form_revenue(const TypeProfile& profile,
                                       const MarketParams& market);

/// Revenue-ranking conditions for the all-framed population, stated without
/// divisions (cross-multiplied), plus the realized comparisons they predict.
struct RankingPredicates {
  /// p(top VPA) * second VPA >= p(top VPI) ranking's second VPI value.
  bool ppa_vs_ppi_condition = false;
  bool framed_ppa_above_ppi = false;   ///< realized: framed_ppa > framed_ppi
  bool ppa_ppi_tie = false;            ///< knife-edge framed_ppa == framed_ppi

  /// Premises for the PPA > PPC comparison: p(top VPA) >= p(top VPC),
  /// second VPC bidder's VPA != top VPA, and that bidder's sale_prob_notice > 0.
  bool ppc_premises = false;
  bool framed_ppa_above_ppc = false;   ///< realized: framed_ppa > framed_ppc
};

RankingPredicates ranking_predicates(const TypeProfile& profile,
                                     const MarketParams& market);

}  // namespace ppa
