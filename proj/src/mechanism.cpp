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

#include "ppa/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppa {

namespace {

// Payment-event probability for a given winner, before the lottery average.
double event_prob(Scheme scheme, const BidderType& winner,
                  const MarketParams& market) {
  switch (scheme) {
    case Scheme::PPA: return winner.attention_prob;
    case Scheme::PPI: return 1.0;
    case Scheme::PPC: return winner.attention_prob * market.ctr;
  }
  return 0.0;
}

}  // namespace

double BidProfile::max_others(std::size_t bidder) const {
  double best = -1.0;
  for (std::size_t j = 0; j < bids.size(); ++j) {
    if (j != bidder && bids[j] > best) best = bids[j];
  }
  return best;
}

void BidProfile::validate() const {
  if (bids.size() < 2)
    throw std::invalid_argument("BidProfile: need at least 2 bids");
  for (double b : bids) {
    if (!std::isfinite(b) || b < 0.0)
      throw std::invalid_argument("BidProfile: bids must be finite and >= 0");
  }
}

Allocation allocate(const BidProfile& bids) {
  bids.validate();
  const double top = *std::max_element(bids.bids.begin(), bids.bids.end());
  Allocation a;
  for (std::size_t j = 0; j < bids.bids.size(); ++j) {
    if (bids.bids[j] == top) a.winners.push_back(j);
  }
  a.tie_count = a.winners.size();
  return a;
}

double expected_payoff(Scheme scheme, std::size_t bidder,
                       const BidProfile& bids, const BidderType& type,
                       const MarketParams& market) {
  bids.validate();
  market.validate();
  type.validate();
  if (bidder >= bids.bids.size())
    throw std::invalid_argument("expected_payoff: bidder index out of range");

  const double own = bids.bids[bidder];
  const double others = bids.max_others(bidder);
  if (own < others) return 0.0;

  std::size_t tie_count = 0;
  for (double b : bids.bids) {
    if (b == own) ++tie_count;
  }

  double k = 1.0;
  switch (scheme) {
    case Scheme::PPA: k = type.attention_prob; break;
    case Scheme::PPI: k = 1.0; break;
    case Scheme::PPC: k = type.attention_prob * market.ctr; break;
  }
  return (expected_value(type, market) - k * others) /
         static_cast<double>(tie_count);
}

AuctionOutcome run_auction(Scheme scheme, const TypeProfile& profile,
                           const BidProfile& bids, const MarketParams& market) {
  validate_profile(profile, market);
  bids.validate();
  if (bids.bids.size() != profile.size())
    throw std::invalid_argument("run_auction: bids/profile length mismatch");

  AuctionOutcome out;
  Allocation a = allocate(bids);
  out.winners = std::move(a.winners);
  out.tie_count = a.tie_count;

  // Second price: on a tie the runner-up bid equals the top bid itself.
  if (out.tie_count > 1) {
    out.price = bids.bids[out.winners.front()];
  } else {
    out.price = bids.max_others(out.winners.front());
  }

  double prob_sum = 0.0;
  for (std::size_t w : out.winners) {
    prob_sum += event_prob(scheme, profile[w], market);
  }
  out.event_probability = prob_sum / static_cast<double>(out.tie_count);
  out.expected_revenue = out.event_probability * out.price;

  out.payoffs.assign(profile.size(), 0.0);
  for (std::size_t w : out.winners) {
    out.payoffs[w] = expected_payoff(scheme, w, bids, profile[w], market);
  }
  return out;
}

double expected_revenue(Scheme scheme, const TypeProfile& profile,
                        const BidProfile& bids, const MarketParams& market) {
  validate_profile(profile, market);
  bids.validate();
  if (bids.bids.size() != profile.size())
    throw std::invalid_argument("expected_revenue: bids/profile length mismatch");
  return detail::expected_revenue_unchecked(scheme, profile, bids.bids, market);
}

namespace detail {

double expected_revenue_unchecked(Scheme scheme, const TypeProfile& profile,
                                  const std::vector<double>& bids,
                                  const MarketParams& market) noexcept {
  const double top = *std::max_element(bids.begin(), bids.end());
  double price = -1.0;
  double prob_sum = 0.0;
  std::size_t tie_count = 0;
  for (std::size_t j = 0; j < bids.size(); ++j) {
    const double b = bids[j];
    if (b == top) {
      ++tie_count;
      prob_sum += event_prob(scheme, profile[j], market);
    } else if (b > price) {
      price = b;
    }
  }
  if (tie_count > 1) price = top;
  return (prob_sum / static_cast<double>(tie_count)) * price;
}

}  // namespace detail

}  // namespace ppa
