#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ppa/distfit.hpp"
#include "test_helpers.hpp"

using namespace ppa;

namespace {

constexpr double kEulerMascheroni = 0.57721566490153286;

// Builds the two-point sample with exactly the requested mean and unbiased
// variance; enough to pin the moment inversion.
ProbSample two_point_sample(double mean, double variance) {
  const double d = std::sqrt(variance / 2.0);
  const std::vector<double> raw{mean - d, mean + d};
  return make_prob_sample(raw);
}

}  // namespace

TEST_CASE("digamma hits the classical values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerMascheroni).epsilon(1e-13));
  // psi(2) = psi(1) + 1.
  CHECK(digamma(2.0) ==
        doctest::Approx(-kEulerMascheroni + 1.0).epsilon(1e-13));
  // psi(1/2) = -gamma - 2 ln 2.
  CHECK(digamma(0.5) ==
        doctest::Approx(-kEulerMascheroni - 2.0 * std::log(2.0))
            .epsilon(1e-13));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
}

TEST_CASE("trigamma hits the classical values") {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK(trigamma(1.0) == doctest::Approx(pi2_6).epsilon(1e-12));
  CHECK(trigamma(2.0) == doctest::Approx(pi2_6 - 1.0).epsilon(1e-12));
  // psi'(10) by unwinding the recurrence from psi'(1).
  double expected = pi2_6;
  for (int k = 1; k <= 9; ++k) expected -= 1.0 / (static_cast<double>(k) * k);
  CHECK(trigamma(10.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(trigamma(0.0), std::domain_error);
}

TEST_CASE("recurrences hold on a dense grid") {
  for (int i = 1; i <= 1000; ++i) {
    const double z = 0.1 * static_cast<double>(i);
    CHECK(std::fabs(digamma(z + 1.0) - digamma(z) - 1.0 / z) <= 1e-12);
    CHECK(std::fabs(trigamma(z + 1.0) - trigamma(z) + 1.0 / (z * z)) <= 1e-12);
  }
}

TEST_CASE("moment_init inverts Beta moments") {
  SUBCASE("published-shape moments") {
    const BetaParams init = moment_init(two_point_sample(0.6938, 0.00935));
    CHECK(init.a == doctest::Approx(15.07).epsilon(1e-2));
    CHECK(init.b == doctest::Approx(6.65).epsilon(1e-2));
  }
  SUBCASE("symmetric sample gives equal shapes") {
    const ProbSample s = make_prob_sample(std::vector<double>{0.3, 0.7});
    const BetaParams init = moment_init(s);
    CHECK(init.a == init.b);
  }
  SUBCASE("maximal variance clamps at the floor") {
    const BetaParams init = moment_init(two_point_sample(0.5, 0.25));
    CHECK(init.a == 1e-3);
    CHECK(init.b == 1e-3);
  }
  SUBCASE("degenerate sample") {
    const ProbSample s = make_prob_sample(std::vector<double>{0.4, 0.4, 0.4});
    CHECK_THROWS_AS(moment_init(s), std::invalid_argument);
  }
}

TEST_CASE("sample clamping and validation") {
  const ProbSample s =
      make_prob_sample(std::vector<double>{0.5, 1.0, 0.0, 0.25});
  CHECK(s.clamp_count == 2);
  CHECK(s.values[1] == 1.0 - 1e-9);
  CHECK(s.values[2] == 1e-9);
  CHECK_THROWS_AS(make_prob_sample(std::vector<double>{0.5, 1.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_prob_sample(std::vector<double>{-0.1, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_prob_sample(std::vector<double>{0.5}),
                  std::invalid_argument);
}

TEST_CASE("beta_mle recovers the generating shapes") {
  SUBCASE("concentrated case") {
    Rng rng(20260810);
    const BetaParams truth{15.07, 6.65};
    std::vector<double> draws(50000);
    for (double& d : draws) d = beta_sample(rng, truth);
    const ProbSample sample = make_prob_sample(draws);
    const BetaFit fit = beta_mle(sample);
    CHECK(fit.params.a == doctest::Approx(15.07).epsilon(0.02));
    CHECK(fit.params.b == doctest::Approx(6.65).epsilon(0.02));
    CHECK(fit.iterations < 50);
    CHECK(std::fabs(fit.grad_a) < 1e-8);
    CHECK(std::fabs(fit.grad_b) < 1e-8);
    // Newton never ends below its own starting point.
    CHECK(fit.log_likelihood >=
          beta_log_likelihood(sample, moment_init(sample)) - 1e-9);
  }
  SUBCASE("uniform is Beta(1,1)") {
    Rng rng(99);
    std::vector<double> draws(50000);
    for (double& d : draws) d = rng.next_unit();
    const BetaFit fit = beta_mle(make_prob_sample(draws));
    CHECK(fit.params.a == doctest::Approx(1.0).epsilon(0.03));
    CHECK(fit.params.b == doctest::Approx(1.0).epsilon(0.03));
  }
  SUBCASE("iteration cap raises a diagnostic error") {
    Rng rng(5);
    std::vector<double> draws(200);
    for (double& d : draws) d = beta_sample(rng, BetaParams{4.0, 2.0});
    const ProbSample sample = make_prob_sample(draws);
    try {
      beta_mle(sample, 0);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      const BetaParams init = moment_init(sample);
      CHECK(e.last_iterate.params.a == init.a);
      CHECK(e.last_iterate.params.b == init.b);
      CHECK(e.last_iterate.iterations == 0);
    }
  }
}

TEST_CASE("beta_sample has the right support and moments") {
  SUBCASE("uniform case") {
    Rng rng(1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const double x = beta_sample(rng, BetaParams{1.0, 1.0});
      CHECK(x > 0.0);
      CHECK(x < 1.0);
      sum += x;
    }
    const double se = std::sqrt(1.0 / 12.0 / 100000.0);
    CHECK(std::fabs(sum / 100000.0 - 0.5) < 3.0 * se);
  }
  SUBCASE("fitted-shape case") {
    Rng rng(2);
    const BetaParams p{15.07, 6.65};
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double x = beta_sample(rng, p);
      CHECK(x > 0.0);
      CHECK(x < 1.0);
      sum += x;
    }
    const double var =
        p.a * p.b / ((p.a + p.b) * (p.a + p.b) * (p.a + p.b + 1.0));
    CHECK(std::fabs(sum / n - p.mean()) < 3.0 * std::sqrt(var / n));
  }
  SUBCASE("small shapes exercise the boosted path") {
    Rng rng(3);
    const BetaParams p{0.5, 0.5};
    double sum = 0.0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
      const double x = beta_sample(rng, p);
      CHECK(x > 0.0);
      CHECK(x < 1.0);
      sum += x;
    }
    CHECK(std::fabs(sum / n - 0.5) < 3.0 * std::sqrt(0.125 / n));
  }
}

TEST_CASE("fit-then-sample round trip stays near the source shapes") {
  Rng rng(802701);
  const BetaParams truth{2.5, 7.0};
  std::vector<double> draws(20000);
  for (double& d : draws) d = beta_sample(rng, truth);
  const BetaFit fit = beta_mle(make_prob_sample(draws));
  // O(1/sqrt(N)) statistical tolerance.
  CHECK(fit.params.a == doctest::Approx(truth.a).epsilon(0.05));
  CHECK(fit.params.b == doctest::Approx(truth.b).epsilon(0.05));
}
