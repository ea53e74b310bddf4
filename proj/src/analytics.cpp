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

#include "ppa/analytics.hpp"

#include <algorithm>
#include <numeric>

namespace ppa {

namespace {

std::vector<std::size_t> sort_desc(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] > values[b];
                   });
  return order;
}

}  // namespace

Ranking rank_bidders(const TypeProfile& profile, const MarketParams& market) {
  validate_profile(profile, market);
  std::vector<double> vpas, vpcs, vpis;
  vpas.reserve(profile.size());
  vpcs.reserve(profile.size());
  vpis.reserve(profile.size());
  for (const auto& t : profile) {
    const ValueBundle b = value_bundle(t, market);
    vpas.push_back(b.vpa);
    vpcs.push_back(b.vpc);
    vpis.push_back(b.vpi);
  }
  return Ranking{sort_desc(vpas), sort_desc(vpcs), sort_desc(vpis)};
}

ClosedFormRevenues closed_form_revenue(const TypeProfile& profile,
                                       const MarketParams& market) {
  const Ranking r = rank_bidders(profile, market);

  ClosedFormRevenues out;
  out.ppa = profile[r.by_vpa[0]].attention_prob *
            vpa(profile[r.by_vpa[1]], market);
  out.ppc = out.ppa;
  out.ppi = vpi(profile[r.by_vpi[1]], market);

  // Framing leaves the PPA and PPI dominant bids unchanged.
  out.framed_ppa = out.ppa;
  out.framed_ppi = out.ppi;
  out.framed_ppc = profile[r.by_vpc[0]].attention_prob * market.ctr *
                   vpc(profile[r.by_vpc[1]]);
  return out;
}

RankingPredicates ranking_predicates(const TypeProfile& profile,
                                     const MarketParams& market) {
  const Ranking r = rank_bidders(profile, market);
  const ClosedFormRevenues cf = closed_form_revenue(profile, market);

  RankingPredicates out;
  // Both sides are products already, so the p1/p~2 >= VPA~2/VPA2 ratio test
  // reduces to comparing the two framed revenues directly.
  out.ppa_vs_ppi_condition = cf.framed_ppa >= cf.framed_ppi;
  out.framed_ppa_above_ppi = cf.framed_ppa > cf.framed_ppi;
  out.ppa_ppi_tie = cf.framed_ppa == cf.framed_ppi;

  const BidderType& top_vpa = profile[r.by_vpa[0]];
  const BidderType& top_vpc = profile[r.by_vpc[0]];
  const BidderType& second_vpc = profile[r.by_vpc[1]];
  out.ppc_premises =
      top_vpa.attention_prob >= top_vpc.attention_prob &&
      vpa(second_vpc, market) != vpa(top_vpa, market) &&
      second_vpc.sale_prob_notice > 0.0;
  out.framed_ppa_above_ppc = cf.framed_ppa > cf.framed_ppc;
  return out;
}

}  // namespace ppa
