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

#include "ppa/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "ppa/mechanism.hpp"
#include "ppa/strategy.hpp"

namespace ppa {

namespace {

constexpr std::int64_t kReplicatesPerBlock = 8192;

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("PDistSpec: malformed number '" +
                                std::string(s) + "'");
  return v;
}

void sample_profile_into(Rng& rng, const SimConfig& cfg, double rho,
                         double alpha, TypeProfile& out) {
  out.resize(static_cast<std::size_t>(cfg.market.n_bidders));
  for (auto& t : out) {
    t.sale_prob_click = rng.next_unit();
    t.sale_prob_notice = rng.next_unit();
    t.attention_prob = cfg.p_dist.sample(rng);
    if (rng.next_unit() < rho) {
      t.sale_value = 100.0 * t.attention_prob;
    } else {
      t.sale_value = rng.next_in(0.0, 100.0);
    }
    // The posture coin is always the last draw per bidder, so the type draws
    // are identical across alpha under the same substream.
    t.posture =
        rng.next_unit() < alpha ? Posture::Framed : Posture::Sophisticated;
  }
}

struct CellAccumulator {
  // Per scheme: revenue sum and sum of squares.
  std::array<double, 3> sum{};
  std::array<double, 3> sum_sq{};
};

CellAccumulator run_block(const SimConfig& cfg, double rho, double alpha,
                          std::int64_t first, std::int64_t last) {
  CellAccumulator acc;
  TypeProfile profile;
  std::vector<double> bids(static_cast<std::size_t>(cfg.market.n_bidders));
  const std::uint64_t rho_key = std::bit_cast<std::uint64_t>(rho);
  for (std::int64_t rep = first; rep < last; ++rep) {
    Rng rng = substream(cfg.seed, rho_key, static_cast<std::uint64_t>(rep));
    sample_profile_into(rng, cfg, rho, alpha, profile);
    for (Scheme s : kAllSchemes) {
      for (std::size_t i = 0; i < profile.size(); ++i) {
        bids[i] = detail::dominant_bid_unchecked(s, profile[i], cfg.market);
      }
      const double revenue =
          detail::expected_revenue_unchecked(s, profile, bids, cfg.market);
      const auto k = static_cast<std::size_t>(s);
      acc.sum[k] += revenue;
      acc.sum_sq[k] += revenue * revenue;
    }
  }
  return acc;
}

int worker_count(const SimConfig& cfg, std::int64_t n_blocks) {
  unsigned cap = cfg.max_threads > 0
                     ? static_cast<unsigned>(cfg.max_threads)
                     : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(
      std::min<std::int64_t>(cap, std::max<std::int64_t>(1, n_blocks)));
}

}  // namespace

PDistSpec PDistSpec::uniform01() { return PDistSpec{}; }

PDistSpec PDistSpec::beta_dist(double a, double b) {
  PDistSpec d;
  d.kind = Kind::Beta;
  d.beta = BetaParams{a, b};
  return d;
}

PDistSpec PDistSpec::degenerate(double p0) {
  PDistSpec d;
  d.kind = Kind::Degenerate;
  d.point = p0;
  return d;
}

void PDistSpec::validate() const {
  switch (kind) {
    case Kind::Uniform01: return;
    case Kind::Beta: beta.validate(); return;
    case Kind::Degenerate:
      if (!std::isfinite(point) || point < 0.0 || point > 1.0)
        throw std::invalid_argument("PDistSpec: degenerate point not in [0, 1]");
      return;
  }
  throw std::invalid_argument("PDistSpec: unknown kind");
}

double PDistSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Uniform01: return rng.next_unit();
    case Kind::Beta: return beta_sample(rng, beta);
    case Kind::Degenerate: return point;
  }
  return 0.0;
}

std::string PDistSpec::tag() const {
  switch (kind) {
    case Kind::Uniform01: return "uniform";
    // Semicolon keeps the tag a single CSV field.
    case Kind::Beta: return "beta:" + shortest(beta.a) + ";" + shortest(beta.b);
    case Kind::Degenerate: return "degenerate:" + shortest(point);
  }
  return "?";
}

PDistSpec PDistSpec::parse(std::string_view tag) {
  if (tag == "uniform") return uniform01();
  if (tag.starts_with("beta:")) {
    const auto body = tag.substr(5);
    auto sep = body.find(',');
    if (sep == std::string_view::npos) sep = body.find(';');
    if (sep == std::string_view::npos)
      throw std::invalid_argument("PDistSpec: expected beta:<a>,<b>");
    auto d = beta_dist(parse_double(body.substr(0, sep)),
                       parse_double(body.substr(sep + 1)));
    d.validate();
    return d;
  }
  if (tag.starts_with("degenerate:")) {
    auto d = degenerate(parse_double(tag.substr(11)));
    d.validate();
    return d;
  }
  throw std::invalid_argument("PDistSpec: unknown distribution '" +
                              std::string(tag) + "'");
}

void SimConfig::validate() const {
  market.validate();
  p_dist.validate();
  if (draws < 1) throw std::invalid_argument("SimConfig: draws must be >= 1");
  if (max_threads < 0)
    throw std::invalid_argument("SimConfig: max_threads must be >= 0");
  for (const auto* grid : {&rho_grid, &alpha_grid}) {
    if (grid->empty())
      throw std::invalid_argument("SimConfig: empty grid");
    double prev = -1.0;
    for (double v : *grid) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument("SimConfig: grid values must lie in [0, 1]");
      if (v < prev)
        throw std::invalid_argument("SimConfig: grids must be sorted ascending");
      prev = v;
    }
  }
}

TypeProfile sample_profile(Rng& rng, const SimConfig& cfg, double rho,
                           double alpha) {
  cfg.validate();
  if (!std::isfinite(rho) || rho < 0.0 || rho > 1.0 || !std::isfinite(alpha) ||
      alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("sample_profile: rho/alpha must lie in [0, 1]");
  TypeProfile profile;
  sample_profile_into(rng, cfg, rho, alpha, profile);
  return profile;
}

CellStats run_cell(const SimConfig& cfg, double rho, double alpha) {
  cfg.validate();
  if (!std::isfinite(rho) || rho < 0.0 || rho > 1.0 || !std::isfinite(alpha) ||
      alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("run_cell: rho/alpha must lie in [0, 1]");

  const std::int64_t n_blocks =
      (cfg.draws + kReplicatesPerBlock - 1) / kReplicatesPerBlock;
  std::vector<CellAccumulator> partials(static_cast<std::size_t>(n_blocks));

  const int threads = worker_count(cfg, n_blocks);
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&](std::atomic<std::int64_t>& next) {
    try {
      for (;;) {
        const std::int64_t b = next.fetch_add(1);
        if (b >= n_blocks) return;
        const std::int64_t first = b * kReplicatesPerBlock;
        const std::int64_t last =
            std::min(cfg.draws, first + kReplicatesPerBlock);
        partials[static_cast<std::size_t>(b)] =
            run_block(cfg, rho, alpha, first, last);
      }
    } catch (...) {
      // A degenerate market (e.g. sophisticated per-click bids at ctr == 0)
      // throws inside the worker; surface it to the caller after the join.
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::atomic<std::int64_t> next{0};
  if (threads <= 1) {
    work(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(next));
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Blocks are reduced in index order: the totals are bitwise independent of
  // how blocks were scheduled onto threads.
  CellAccumulator total;
  for (const auto& p : partials) {
    for (std::size_t k = 0; k < 3; ++k) {
      total.sum[k] += p.sum[k];
      total.sum_sq[k] += p.sum_sq[k];
    }
  }

  CellStats stats;
  stats.rho = rho;
  stats.alpha = alpha;
  stats.draws = cfg.draws;
  const auto n = static_cast<double>(cfg.draws);
  for (std::size_t k = 0; k < 3; ++k) {
    const double mean = total.sum[k] / n;
    double variance = 0.0;
    if (cfg.draws > 1) {
      variance = (total.sum_sq[k] - total.sum[k] * total.sum[k] / n) / (n - 1.0);
      variance = std::max(variance, 0.0);
    }
    stats.schemes[k].mean = mean;
    stats.schemes[k].std_error = std::sqrt(variance / n);
  }
  return stats;
}

RevenueTable sweep(const SimConfig& cfg) {
  cfg.validate();
  RevenueTable table;
  table.rows.reserve(cfg.alpha_grid.size() * cfg.rho_grid.size() * 3);
  const std::string dist_tag = cfg.p_dist.tag();
  for (double alpha : cfg.alpha_grid) {
    for (double rho : cfg.rho_grid) {
      const CellStats cell = run_cell(cfg, rho, alpha);
      for (Scheme s : kAllSchemes) {
        RevenueRow row;
        row.rho = rho;
        row.alpha = alpha;
        row.scheme = s;
        row.mean_revenue = cell.of(s).mean;
        row.std_error = cell.of(s).std_error;
        row.draws = cfg.draws;
        row.n_bidders = cfg.market.n_bidders;
        row.ctr = cfg.market.ctr;
        row.p_dist = dist_tag;
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

CrossingEstimate estimate_crossing(const RevenueTable& table, double alpha) {
  std::map<double, std::pair<std::optional<double>, std::optional<double>>>
      by_rho;
  for (const auto& row : table.rows) {
    if (row.alpha != alpha) continue;
    if (row.scheme == Scheme::PPI) by_rho[row.rho].first = row.mean_revenue;
    if (row.scheme == Scheme::PPC) by_rho[row.rho].second = row.mean_revenue;
  }
  std::vector<double> rhos;
  std::vector<double> diffs;
  for (const auto& [rho, pair] : by_rho) {
    if (!pair.first || !pair.second)
      throw std::invalid_argument(
          "estimate_crossing: PPI/PPC rows missing at some rho");
    rhos.push_back(rho);
    diffs.push_back(*pair.first - *pair.second);
  }
  if (rhos.size() < 3)
    throw std::invalid_argument(
        "estimate_crossing: need PPI and PPC rows at >= 3 rho points");

  CrossingEstimate out;
  std::vector<double> crossings;
  int prev_sign = 0;
  std::size_t prev_idx = 0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const int sign = (diffs[i] > 0.0) - (diffs[i] < 0.0);
    if (sign == 0) continue;
    if (prev_sign != 0 && sign != prev_sign) {
      if (i == prev_idx + 1) {
        const double t = diffs[prev_idx] / (diffs[prev_idx] - diffs[i]);
        crossings.push_back(rhos[prev_idx] + t * (rhos[i] - rhos[prev_idx]));
      } else {
        // A run of exact zeros between opposite signs: report its midpoint.
        crossings.push_back(0.5 * (rhos[prev_idx + 1] + rhos[i - 1]));
      }
    }
    prev_sign = sign;
    prev_idx = i;
  }

  out.sign_changes = static_cast<int>(crossings.size());
  if (crossings.empty()) {
    out.kind = CrossingEstimate::Kind::None;
  } else if (crossings.size() == 1) {
    out.kind = CrossingEstimate::Kind::Single;
    out.rho = crossings.front();
  } else {
    out.kind = CrossingEstimate::Kind::Multiple;
    out.rho = crossings.front();
  }
  return out;
}

}  // namespace ppa
