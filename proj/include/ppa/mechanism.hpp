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

/// One sealed bid per bidder, aligned with the TypeProfile order.
struct BidProfile {
  std::vector<double> bids;

  /// Highest bid among the other bidders (the second-price payment a winner
  /// faces). Requires at least 2 bids.
  double max_others(std::size_t bidder) const;

  /// Throws std::invalid_argument on fewer than 2 bids or on a bid that is
  /// negative or non-finite.
  void validate() const;
};

/// Winner set of the second-price allocation rule.
struct Allocation {
  std::vector<std::size_t> winners;  ///< argmax set, ascending indices
  std::size_t tie_count = 0;         ///< |winners|
};

/// Highest bid wins; ties are kept as the full argmax set and resolved in
/// expectation by a fair lottery (never by drawing a winner).
Allocation allocate(const BidProfile& bids);

/// Full deterministic outcome of one auction under one payment scheme.
struct AuctionOutcome {
  std::vector<std::size_t> winners;
  std::size_t tie_count = 0;
  /// Second price: the highest losing bid, or the (shared) top bid on a tie.
  double price = 0.0;
  /// Probability the payment event occurs for the realized winner, averaged
  /// over the fair lottery: mean p (PPA), mean p * ctr (PPC), or 1 (PPI).
  double event_probability = 0.0;
  /// price * event_probability. Always an expectation; click/notice events
  /// are never sampled.
  double expected_revenue = 0.0;
  /// Per-bidder expected payoff; 0 for every loser.
  std::vector<double> payoffs;
};

/// Expected payoff of one bidder given everyone's bids.
///
/// Zero when outbid; otherwise (EV - K * max_others) / tie_count with
/// K = attention_prob (PPA), 1 (PPI) or attention_prob * ctr (PPC).
double expected_payoff(Scheme scheme, std::size_t bidder,
                       const BidProfile& bids, const BidderType& type,
                       const MarketParams& market);

/// Seller revenue in expectation: second price times the mean payment-event
/// probability over the fair lottery among winners.
double expected_revenue(Scheme scheme, const TypeProfile& profile,
                        const BidProfile& bids, const MarketParams& market);

/// Allocation, price, revenue and all payoffs in one pass.
AuctionOutcome run_auction(Scheme scheme, const TypeProfile& profile,
                           const BidProfile& bids, const MarketParams& market);

namespace detail {

/// expected_revenue without input validation, for simulation inner loops.
/// Same arithmetic path as the public function.
double expected_revenue_unchecked(Scheme scheme, const TypeProfile& profile,
                                  const std::vector<double>& bids,
                                  const MarketParams& market) noexcept;

}  // namespace detail

}  // namespace ppa
