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

#include "ppa/core.hpp"
#include "ppa/mechanism.hpp"

namespace ppa {

/// Search space for the best-response oracle: a uniform grid on [lo, hi].
/// The oracle additionally probes the exact opponent bids, where the payoff
/// is discontinuous.
struct DeviationGrid {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 201;

  void validate() const;
};

/// The dominant-strategy bid of one bidder under one scheme.
///
/// Sophisticated: VPA (PPA), attention_prob * VPA (PPI), VPA / ctr (PPC).
/// Framed:        VPA (PPA), VPI (PPI; identical to sophisticated), VPC (PPC).
///
/// Throws std::domain_error for a sophisticated PPC bid when ctr == 0
/// (clicks impossible, the per-click value is undefined).
double dominant_bid(Scheme scheme, const BidderType& type,
                    const MarketParams& market);

/// Maps dominant_bid over the profile, honouring each bidder's posture.
BidProfile bid_profile(Scheme scheme, const TypeProfile& profile,
                       const MarketParams& market);

/// Best-response oracle for strategy-proofness testing.
///
/// Opponents bid their dominant strategies; the probed bidder's payoff is
/// always the sophisticated one (full expected value). Returns the maximum
/// payoff improvement any grid deviation achieves over the truthful bid;
/// strategy-proofness predicts a value <= 0 up to float tolerance.
double best_response_gap(Scheme scheme, std::size_t bidder,
                         const TypeProfile& profile, const MarketParams& market,
                         const DeviationGrid& grid);

namespace detail {

/// dominant_bid without input validation, for simulation inner loops.
double dominant_bid_unchecked(Scheme scheme, const BidderType& type,
                              const MarketParams& market);

}  // namespace detail

}  // namespace ppa
