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

#include <string>
#include <vector>

namespace ppa {

/// Payment scheme of the single-slot second-price auction.
///
/// All three share the allocation rule (highest bid wins, fair lottery on
/// ties) and differ only in when the winner pays the second price:
///   PPA — whenever the ad is noticed (probability p),
///   PPI — with certainty, on display,
///   PPC — whenever the ad is clicked (probability p * ctr).
enum class Scheme { PPA, PPI, PPC };

inline constexpr Scheme kAllSchemes[] = {Scheme::PPA, Scheme::PPI,
                                         Scheme::PPC};

const char* scheme_name(Scheme s) noexcept;

/// How an advertiser maps its valuation into a bid.
///
/// Sophisticated bidders best-respond to the payment rule using their full
/// expected value; framed bidders bid only the value component the scheme
/// makes salient (VPA, VPI or VPC respectively).
enum class Posture { Sophisticated, Framed };

/// Market-wide, commonly known parameters.
struct MarketParams {
  /// Click-through rate conditional on the ad being noticed, in [0, 1].
  /// The familiar unconditional CTR is attention_prob * ctr.
  double ctr = 0.5;
  /// Number of bidders competing for the slot, >= 2.
  int n_bidders = 2;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// One advertiser's type and bidding posture.
///
/// sale_prob_click, sale_prob_notice and sale_value are private information;
/// attention_prob is the (observable) probability that a user visiting the
/// page notices this advertiser's ad.
struct BidderType {
  double sale_prob_click = 0.0;   ///< P(sale | ad clicked), in [0, 1].
  double sale_prob_notice = 0.0;  ///< P(sale | noticed, not clicked), in [0, 1].
  double sale_value = 0.0;        ///< value of one sale, >= 0.
  double attention_prob = 1.0;    ///< P(ad noticed), in [0, 1].
  Posture posture = Posture::Sophisticated;

  void validate() const;
};

/// Ordered list of bidder types; length must equal MarketParams::n_bidders.
using TypeProfile = std::vector<BidderType>;

void validate_profile(const TypeProfile& profile, const MarketParams& market);

/// Value per attention: [ctr * sale_prob_click + (1 - ctr) * sale_prob_notice]
/// * sale_value. The expected value of one *noticed* impression.
double vpa(const BidderType& t, const MarketParams& m) noexcept;

/// Value per click: sale_prob_click * sale_value. Ignores the noticed-but-
/// not-clicked channel, matching how PPC markets usually quote value.
double vpc(const BidderType& t) noexcept;

/// Value per impression: attention_prob * vpa. Identical to the total
/// unconditional expected value of winning the slot.
double vpi(const BidderType& t, const MarketParams& m) noexcept;

/// Expected value of obtaining the slot; same arithmetic path as vpi.
double expected_value(const BidderType& t, const MarketParams& m) noexcept;

/// All four valuations of one bidder, computed consistently (ev == vpi ==
/// attention_prob * vpa, bitwise).
struct ValueBundle {
  double ev;
  double vpa;
  double vpc;
  double vpi;
};

ValueBundle value_bundle(const BidderType& t, const MarketParams& m) noexcept;

}  // namespace ppa
