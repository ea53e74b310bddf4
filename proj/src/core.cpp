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

#include "ppa/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ppa {

namespace {

bool is_probability(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

const char* scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::PPA: return "PPA";
    case Scheme::PPI: return "PPI";
    case Scheme::PPC: return "PPC";
  }
  return "?";
}

void MarketParams::validate() const {
  if (!is_probability(ctr)) fail("MarketParams: ctr must lie in [0, 1]");
  if (n_bidders < 2) fail("MarketParams: need at least 2 bidders");
}

void BidderType::validate() const {
  if (!is_probability(sale_prob_click))
    fail("BidderType: sale_prob_click must lie in [0, 1]");
  if (!is_probability(sale_prob_notice))
    fail("BidderType: sale_prob_notice must lie in [0, 1]");
  if (!is_probability(attention_prob))
    fail("BidderType: attention_prob must lie in [0, 1]");
  if (!std::isfinite(sale_value) || sale_value < 0.0)
    fail("BidderType: sale_value must be finite and >= 0");
}

void validate_profile(const TypeProfile& profile, const MarketParams& market) {
  market.validate();
  if (profile.size() != static_cast<std::size_t>(market.n_bidders))
    fail("TypeProfile: length must equal MarketParams::n_bidders");
  for (const auto& t : profile) t.validate();
}

double vpa(const BidderType& t, const MarketParams& m) noexcept {
  return (m.ctr * t.sale_prob_click + (1.0 - m.ctr) * t.sale_prob_notice) *
         t.sale_value;
}

double vpc(const BidderType& t) noexcept {
  return t.sale_prob_click * t.sale_value;
}

double vpi(const BidderType& t, const MarketParams& m) noexcept {
  return t.attention_prob * vpa(t, m);
}

double expected_value(const BidderType& t, const MarketParams& m) noexcept {
  return vpi(t, m);
}

ValueBundle value_bundle(const BidderType& t, const MarketParams& m) noexcept {
  ValueBundle b;
  b.vpa = vpa(t, m);
  b.vpc = vpc(t);
  b.vpi = t.attention_prob * b.vpa;
  b.ev = b.vpi;
  return b;
}

}  // namespace ppa
