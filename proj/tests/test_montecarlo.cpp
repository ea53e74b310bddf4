#include <stdexcept>
#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "ppa/csv.hpp"
#include "ppa/montecarlo.hpp"
#include "test_helpers.hpp"

using namespace ppa;

namespace {

SimConfig base_config() {
  SimConfig cfg;
  cfg.market = MarketParams{0.5, 2};
  cfg.p_dist = PDistSpec::uniform01();
  cfg.draws = 20000;
  cfg.seed = 42;
  return cfg;
}

RevenueTable synthetic_diff_table(const std::vector<double>& rhos,
                                  const std::vector<double>& diffs,
                                  double alpha) {
  RevenueTable t;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    for (Scheme s : kAllSchemes) {
      RevenueRow row;
      row.rho = rhos[i];
      row.alpha = alpha;
      row.scheme = s;
      row.mean_revenue = s == Scheme::PPI ? 10.0 + diffs[i] : 10.0;
      row.draws = 1;
      row.n_bidders = 2;
      row.ctr = 0.5;
      row.p_dist = "uniform";
      t.rows.push_back(row);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("PDistSpec tags round-trip") {
  CHECK(PDistSpec::parse("uniform").kind == PDistSpec::Kind::Uniform01);
  const PDistSpec b = PDistSpec::parse("beta:15.07,6.65");
  CHECK(b.beta.a == 15.07);
  CHECK(b.beta.b == 6.65);
  CHECK(PDistSpec::parse(b.tag()).beta.b == 6.65);
  const PDistSpec d = PDistSpec::parse("degenerate:0.25");
  CHECK(d.point == 0.25);
  CHECK(PDistSpec::parse(d.tag()).point == 0.25);
  CHECK_THROWS_AS(PDistSpec::parse("beta:1"), std::invalid_argument);
  CHECK_THROWS_AS(PDistSpec::parse("zipf:2"), std::invalid_argument);
  CHECK_THROWS_AS(PDistSpec::parse("degenerate:1.5"), std::invalid_argument);
}

TEST_CASE("sample_profile honors the mixture parameters") {
  const SimConfig cfg = base_config();

  SUBCASE("full correlation ties valuation to attention") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
      const TypeProfile p = sample_profile(rng, cfg, 1.0, 0.0);
      for (const auto& t : p) {
        CHECK(t.sale_value == 100.0 * t.attention_prob);
        CHECK(t.posture == Posture::Sophisticated);
      }
    }
  }
  SUBCASE("alpha one frames everyone") {
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
      const TypeProfile p = sample_profile(rng, cfg, 0.0, 1.0);
      for (const auto& t : p) CHECK(t.posture == Posture::Framed);
    }
  }
  SUBCASE("zero correlation decouples valuation from attention") {
    Rng rng(9);
    const int n = 40000;
    double sv = 0, sp = 0, svp = 0, svv = 0, spp = 0;
    for (int i = 0; i < n; ++i) {
      const TypeProfile prof = sample_profile(rng, cfg, 0.0, 0.0);
      const double v = prof[0].sale_value, p = prof[0].attention_prob;
      sv += v; sp += p; svp += v * p; svv += v * v; spp += p * p;
    }
    const double cov = svp / n - (sv / n) * (sp / n);
    const double corr = cov / std::sqrt((svv / n - (sv / n) * (sv / n)) *
                                        (spp / n - (sp / n) * (sp / n)));
    CHECK(std::fabs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("run_cell matches the analytic degenerate-market mean") {
  // p == 1 and rho == 1 collapse all three schemes to the second-highest
  // value per attention: 100 * E[min of two (g+q)/2] = 100 * 23/60.
  SimConfig cfg = base_config();
  cfg.p_dist = PDistSpec::degenerate(1.0);
  cfg.draws = 200000;
  const CellStats cell = run_cell(cfg, 1.0, 0.0);
  const double expect = 100.0 * 23.0 / 60.0;
  for (Scheme s : kAllSchemes) {
    CHECK(std::fabs(cell.of(s).mean - expect) < 3.0 * cell.of(s).std_error);
  }
  CHECK(cell.of(Scheme::PPA).mean == cell.of(Scheme::PPI).mean);
}

TEST_CASE("per-replicate PPA/PPC identity under full sophistication") {
  SimConfig cfg = base_config();
  cfg.draws = 1;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    cfg.seed = seed;
    const CellStats cell = run_cell(cfg, 0.3, 0.0);
    CHECK(std::fabs(cell.of(Scheme::PPA).mean - cell.of(Scheme::PPC).mean) <=
          1e-12);
  }
}

TEST_CASE("sweep emits rows in (alpha, rho, scheme) order") {
  SimConfig cfg = base_config();
  cfg.draws = 500;
  cfg.rho_grid = {0.0, 0.5, 1.0};
  cfg.alpha_grid = {0.5};
  const RevenueTable t = sweep(cfg);
  REQUIRE(t.rows.size() == 9);
  CHECK(t.rows[0].rho == 0.0);
  CHECK(t.rows[0].scheme == Scheme::PPA);
  CHECK(t.rows[1].scheme == Scheme::PPI);
  CHECK(t.rows[2].scheme == Scheme::PPC);
  CHECK(t.rows[3].rho == 0.5);
  CHECK(t.rows[8].rho == 1.0);
  for (const auto& row : t.rows) {
    CHECK(row.alpha == 0.5);
    CHECK(row.draws == 500);
    CHECK(row.n_bidders == 2);
    CHECK(row.p_dist == "uniform");
  }
}

TEST_CASE("PPA and PPI results are bitwise invariant to alpha") {
  SimConfig cfg = base_config();
  cfg.draws = 5000;
  cfg.rho_grid = {0.0, 0.5, 1.0};
  cfg.alpha_grid = {0.0, 0.5, 1.0};
  const RevenueTable t = sweep(cfg);
  for (std::size_t i = 0; i < 3; ++i) {      // rho index
    for (std::size_t a = 1; a < 3; ++a) {    // alpha index
      for (std::size_t k = 0; k < 3; ++k) {  // scheme index
        const RevenueRow& base = t.rows[i * 3 + k];
        const RevenueRow& other = t.rows[a * 9 + i * 3 + k];
        if (base.scheme == Scheme::PPC) continue;
        CHECK(base.mean_revenue == other.mean_revenue);
        CHECK(base.std_error == other.std_error);
      }
    }
  }
}

TEST_CASE("sweep results do not depend on the thread count") {
  SimConfig cfg = base_config();
  cfg.draws = 30000;
  cfg.rho_grid = {0.0, 1.0, 1.0};  // duplicate point also exercises caching-free path
  cfg.alpha_grid = {0.25};
  cfg.p_dist = PDistSpec::beta_dist(15.07, 6.65);

  cfg.max_threads = 1;
  const RevenueTable serial = sweep(cfg);
  cfg.max_threads = 8;
  const RevenueTable parallel = sweep(cfg);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].mean_revenue == parallel.rows[i].mean_revenue);
    CHECK(serial.rows[i].std_error == parallel.rows[i].std_error);
  }
}

TEST_CASE("run_cell agrees with a sweep cell at the same coordinates") {
  SimConfig cfg = base_config();
  cfg.draws = 4000;
  cfg.rho_grid = {0.25, 0.75};
  cfg.alpha_grid = {0.5};
  const RevenueTable t = sweep(cfg);
  const CellStats direct = run_cell(cfg, 0.75, 0.5);
  CHECK(t.rows[3 + 0].mean_revenue == direct.of(Scheme::PPA).mean);
  CHECK(t.rows[3 + 2].mean_revenue == direct.of(Scheme::PPC).mean);
}

TEST_CASE("estimate_crossing classifies sign patterns") {
  const std::vector<double> rhos{0.0, 0.5, 1.0};

  SUBCASE("single crossing, interpolated") {
    const RevenueTable t = synthetic_diff_table(rhos, {1.0, 0.2, -0.5}, 0.5);
    const CrossingEstimate c = estimate_crossing(t, 0.5);
    CHECK(c.kind == CrossingEstimate::Kind::Single);
    CHECK(c.rho == doctest::Approx(0.5 + 0.5 * 0.2 / 0.7).epsilon(1e-12));
    CHECK(c.sign_changes == 1);
  }
  SUBCASE("no sign change") {
    const RevenueTable t = synthetic_diff_table(rhos, {1.0, 0.4, 0.1}, 0.5);
    CHECK(estimate_crossing(t, 0.5).kind == CrossingEstimate::Kind::None);
  }
  SUBCASE("multiple crossings flagged") {
    const RevenueTable t = synthetic_diff_table(
        {0.0, 0.25, 0.5, 0.75, 1.0}, {1.0, -0.5, 0.5, -0.5, -0.4}, 0.5);
    const CrossingEstimate c = estimate_crossing(t, 0.5);
    CHECK(c.kind == CrossingEstimate::Kind::Multiple);
    CHECK(c.sign_changes == 3);
  }
  SUBCASE("exact zero between opposite signs counts once") {
    const RevenueTable t = synthetic_diff_table(rhos, {1.0, 0.0, -1.0}, 0.5);
    const CrossingEstimate c = estimate_crossing(t, 0.5);
    CHECK(c.kind == CrossingEstimate::Kind::Single);
    CHECK(c.rho == 0.5);
  }
  SUBCASE("malformed tables") {
    const RevenueTable t = synthetic_diff_table(rhos, {1.0, 0.2, -0.5}, 0.5);
    CHECK_THROWS_AS(estimate_crossing(t, 0.25), std::invalid_argument);
    RevenueTable two = synthetic_diff_table({0.0, 1.0}, {1.0, -1.0}, 0.5);
    CHECK_THROWS_AS(estimate_crossing(two, 0.5), std::invalid_argument);
  }
}

TEST_CASE("fully sophisticated uniform market never favors PPC over PPA") {
  SimConfig cfg = base_config();
  cfg.draws = 30000;
  cfg.rho_grid = {0.0, 0.5, 1.0};
  cfg.alpha_grid = {0.0};
  const RevenueTable t = sweep(cfg);
  const CrossingEstimate c = estimate_crossing(t, 0.0);
  // PPC == PPA >= PPI here, so the PPI-PPC difference never changes sign.
  CHECK(c.kind == CrossingEstimate::Kind::None);
}

TEST_CASE("a zero-ctr market propagates the degenerate-market error") {
  SimConfig cfg = base_config();
  cfg.market.ctr = 0.0;
  cfg.draws = 20000;  // enough blocks to engage the worker pool
  cfg.max_threads = 2;
  // Sophisticated per-click bids are undefined without clicks.
  CHECK_THROWS_AS(run_cell(cfg, 0.0, 0.0), std::domain_error);
  // An all-framed population still bids (the click value), and the payment
  // event never fires.
  const CellStats cell = run_cell(cfg, 0.0, 1.0);
  CHECK(cell.of(Scheme::PPC).mean == 0.0);
  CHECK(cell.of(Scheme::PPI).mean > 0.0);
}

TEST_CASE("config validation") {
  SimConfig cfg = base_config();
  cfg.draws = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.rho_grid = {0.5, 0.25};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.alpha_grid = {};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.rho_grid = {1.5};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_cell(base_config(), 1.5, 0.0), std::invalid_argument);
}
