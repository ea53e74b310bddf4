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

#include "ppa/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppa {

void DeviationGrid::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || lo >= hi)
    throw std::invalid_argument("DeviationGrid: need 0 <= lo < hi");
  if (steps < 2) throw std::invalid_argument("DeviationGrid: need steps >= 2");
}

double dominant_bid(Scheme scheme, const BidderType& type,
                    const MarketParams& market) {
  type.validate();
  market.validate();
  return detail::dominant_bid_unchecked(scheme, type, market);
}

namespace detail {

double dominant_bid_unchecked(Scheme scheme, const BidderType& type,
                              const MarketParams& market) {
  switch (scheme) {
    case Scheme::PPA:
      // Framing never distorts the PPA bid: VPA is exactly what is salient.
      return vpa(type, market);
    case Scheme::PPI:
      // Sophisticated p * VPA and framed VPI coincide.
      return type.attention_prob * vpa(type, market);
    case Scheme::PPC:
      if (type.posture == Posture::Framed) return vpc(type);
      if (market.ctr == 0.0)
        throw std::domain_error(
            "dominant_bid: sophisticated PPC bid undefined when ctr == 0");
      return vpa(type, market) / market.ctr;
  }
  throw std::invalid_argument("dominant_bid: unknown scheme");
}

}  // namespace detail

BidProfile bid_profile(Scheme scheme, const TypeProfile& profile,
                       const MarketParams& market) {
  validate_profile(profile, market);
  BidProfile bids;
  bids.bids.reserve(profile.size());
  for (const auto& t : profile) {
    bids.bids.push_back(dominant_bid(scheme, t, market));
  }
  return bids;
}

double best_response_gap(Scheme scheme, std::size_t bidder,
                         const TypeProfile& profile, const MarketParams& market,
                         const DeviationGrid& grid) {
  validate_profile(profile, market);
  grid.validate();
  if (bidder >= profile.size())
    throw std::invalid_argument("best_response_gap: bidder index out of range");

  BidProfile bids = bid_profile(scheme, profile, market);
  const BidderType& type = profile[bidder];

  const double truthful =
      expected_payoff(scheme, bidder, bids, type, market);

  auto payoff_at = [&](double bid) {
    bids.bids[bidder] = bid;
    return expected_payoff(scheme, bidder, bids, type, market);
  };

  double gap = -std::numeric_limits<double>::infinity();
  const double step = (grid.hi - grid.lo) / static_cast<double>(grid.steps - 1);
  for (int k = 0; k < grid.steps; ++k) {
    const double bid = (k == grid.steps - 1) ? grid.hi : grid.lo + k * step;
    gap = std::max(gap, payoff_at(bid) - truthful);
  }
  // Probe the opponents' exact bids: the payoff jumps exactly there.
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == bidder) continue;
    const double b = dominant_bid(scheme, profile[j], market);
    gap = std::max(gap, payoff_at(b) - truthful);
  }
  return gap;
}

}  // namespace ppa
