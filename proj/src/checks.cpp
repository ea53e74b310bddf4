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

#include "ppa/checks.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "ppa/analytics.hpp"
#include "ppa/mechanism.hpp"
#include "ppa/rng.hpp"
#include "ppa/strategy.hpp"

namespace ppa {

namespace {

constexpr double kTol = 1e-12;

MarketParams random_market(Rng& rng) {
  MarketParams m;
  m.n_bidders = 2 + static_cast<int>(rng.next_u64() % 4);  // 2..5
  m.ctr = rng.next_in(0.1, 1.0);
  return m;
}

TypeProfile random_profile(Rng& rng, const MarketParams& market,
                           Posture posture) {
  TypeProfile profile(static_cast<std::size_t>(market.n_bidders));
  for (auto& t : profile) {
    t.sale_prob_click = rng.next_unit();
    t.sale_prob_notice = rng.next_unit();
    t.sale_value = rng.next_in(0.0, 100.0);
    t.attention_prob = rng.next_unit();
    t.posture = posture;
  }
  return profile;
}

std::string failure_record(const std::string& suite, const MarketParams& market,
                           const TypeProfile& profile,
                           const std::string& detail) {
  nlohmann::json j;
  j["suite"] = suite;
  j["detail"] = detail;
  j["market"] = {{"ctr", market.ctr}, {"n_bidders", market.n_bidders}};
  auto& bidders = j["bidders"] = nlohmann::json::array();
  for (const auto& t : profile) {
    bidders.push_back(
        {{"sale_prob_click", t.sale_prob_click},
         {"sale_prob_notice", t.sale_prob_notice},
         {"sale_value", t.sale_value},
         {"attention_prob", t.attention_prob},
         {"posture",
          t.posture == Posture::Framed ? "framed" : "sophisticated"}});
  }
  return j.dump();
}

void record_failure(SuiteResult& result, const std::string& suite,
                    const MarketParams& market, const TypeProfile& profile,
                    const std::string& detail) {
  ++result.failures;
  if (result.first_failure.empty())
    result.first_failure = failure_record(suite, market, profile, detail);
}

SuiteResult run_dominance(const CheckOptions& opt) {
  SuiteResult result{"dominance", opt.trials, 0, {}};
  for (int trial = 0; trial < opt.trials; ++trial) {
    Rng rng = substream(opt.seed, 1, static_cast<std::uint64_t>(trial));
    const MarketParams market = random_market(rng);
    const TypeProfile profile =
        random_profile(rng, market, Posture::Sophisticated);
    for (Scheme s : kAllSchemes) {
      for (std::size_t i = 0; i < profile.size(); ++i) {
        const double truthful = dominant_bid(s, profile[i], market);
        DeviationGrid grid{0.0, std::max(2.0 * truthful, 1e-9), 201};
        const double gap = best_response_gap(s, i, profile, market, grid);
        if (!(gap <= kTol)) {
          record_failure(result, result.name, market, profile,
                         std::string(scheme_name(s)) + " bidder " +
                             std::to_string(i) + " gap " +
                             std::to_string(gap));
        }
      }
    }
  }
  return result;
}

SuiteResult run_efficiency(const CheckOptions& opt) {
  SuiteResult result{"efficiency", opt.trials, 0, {}};
  for (int trial = 0; trial < opt.trials; ++trial) {
    Rng rng = substream(opt.seed, 2, static_cast<std::uint64_t>(trial));
    const MarketParams market = random_market(rng);
    const TypeProfile profile =
        random_profile(rng, market, Posture::Sophisticated);
    for (Scheme s : kAllSchemes) {
      const BidProfile bids = bid_profile(s, profile, market);
      const Allocation alloc = allocate(bids);
      double best = 0.0;
      for (const auto& t : profile) {
        best = std::max(best, s == Scheme::PPI ? vpi(t, market)
                                               : vpa(t, market));
      }
      for (std::size_t w : alloc.winners) {
        const double got = s == Scheme::PPI ? vpi(profile[w], market)
                                            : vpa(profile[w], market);
        if (got != best) {
          record_failure(result, result.name, market, profile,
                         std::string(scheme_name(s)) + " winner " +
                             std::to_string(w) + " value below maximum");
        }
      }
    }
  }
  return result;
}

SuiteResult run_prop2_identity(const CheckOptions& opt) {
  SuiteResult result{"ppa_ppc_identity", opt.trials, 0, {}};
  for (int trial = 0; trial < opt.trials; ++trial) {
    Rng rng = substream(opt.seed, 3, static_cast<std::uint64_t>(trial));
    const MarketParams market = random_market(rng);
    const TypeProfile profile =
        random_profile(rng, market, Posture::Sophisticated);
    const double rev_ppa = expected_revenue(
        Scheme::PPA, profile, bid_profile(Scheme::PPA, profile, market),
        market);
    const double rev_ppc = expected_revenue(
        Scheme::PPC, profile, bid_profile(Scheme::PPC, profile, market),
        market);
    if (!(std::fabs(rev_ppa - rev_ppc) <= kTol)) {
      record_failure(result, result.name, market, profile,
                     "PPA " + std::to_string(rev_ppa) + " vs PPC " +
                         std::to_string(rev_ppc));
    }
  }
  return result;
}

SuiteResult run_alpha_invariance(const CheckOptions& opt) {
  SuiteResult result{"alpha_invariance", opt.trials, 0, {}};
  for (int trial = 0; trial < opt.trials; ++trial) {
    Rng rng = substream(opt.seed, 4, static_cast<std::uint64_t>(trial));
    const MarketParams market = random_market(rng);
    TypeProfile profile = random_profile(rng, market, Posture::Sophisticated);
    for (auto& t : profile) {
      BidderType framed = t;
      framed.posture = Posture::Framed;
      const bool ppa_same = dominant_bid(Scheme::PPA, t, market) ==
                            dominant_bid(Scheme::PPA, framed, market);
      const bool ppi_same = dominant_bid(Scheme::PPI, t, market) ==
                            dominant_bid(Scheme::PPI, framed, market);
      if (!ppa_same || !ppi_same) {
        record_failure(result, result.name, market, profile,
                       "framing changed a PPA or PPI bid");
      }
    }
  }
  return result;
}

SuiteResult run_closed_form(const CheckOptions& opt) {
  SuiteResult result{"closed_form_vs_mechanism", opt.trials, 0, {}};
  for (int trial = 0; trial < opt.trials; ++trial) {
    Rng rng = substream(opt.seed, 5, static_cast<std::uint64_t>(trial));
    const MarketParams market = random_market(rng);
    TypeProfile profile = random_profile(rng, market, Posture::Sophisticated);
    const ClosedFormRevenues cf = closed_form_revenue(profile, market);

    const auto check = [&](Scheme s, double expected, const char* cell) {
      const double got = expected_revenue(
          s, profile, bid_profile(s, profile, market), market);
      if (!(std::fabs(got - expected) <= kTol)) {
        record_failure(result, result.name, market, profile,
                       std::string(cell) + " mechanism " + std::to_string(got) +
                           " vs closed form " + std::to_string(expected));
      }
    };

    check(Scheme::PPA, cf.ppa, "sophisticated PPA");
    check(Scheme::PPI, cf.ppi, "sophisticated PPI");
    check(Scheme::PPC, cf.ppc, "sophisticated PPC");
    for (auto& t : profile) t.posture = Posture::Framed;
    check(Scheme::PPA, cf.framed_ppa, "framed PPA");
    check(Scheme::PPI, cf.framed_ppi, "framed PPI");
    check(Scheme::PPC, cf.framed_ppc, "framed PPC");
  }
  return result;
}

}  // namespace

std::vector<SuiteResult> run_property_checks(const CheckOptions& options) {
  if (options.trials < 1)
    throw std::invalid_argument("checks: trials must be >= 1");
  return {run_dominance(options), run_efficiency(options),
          run_prop2_identity(options), run_alpha_invariance(options),
          run_closed_form(options)};
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.failures == 0; });
}

}  // namespace ppa
