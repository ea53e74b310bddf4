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
//
// ppasim — pay-per-attention auction simulator.
//
//   simulate   Monte Carlo revenue sweep over a (rho, alpha) grid -> CSV
//   fit-beta   Beta MLE of an attention-probability sample -> key-value report
//   check      randomized mechanism property suites
//   chart      revenue CSV -> SVG line chart
//
// Exit codes: 0 ok, 1 I/O or input data error, 2 usage error,
//             3 fit did not converge, 4 property violation.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppa/chart.hpp"
#include "ppa/checks.hpp"
#include "ppa/csv.hpp"
#include "ppa/distfit.hpp"
#include "ppa/montecarlo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitViolation = 4;

int env_thread_cap() {
  const char* env = std::getenv("PPA_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    std::cerr << "ppasim: ignoring invalid PPA_THREADS='" << env << "'\n";
    return 0;
  }
  return static_cast<int>(v);
}

struct SimulateFlags {
  std::string p_dist = "uniform";
  std::string alpha = "0";
  std::string rho = "0:1:0.05";
  int n = 2;
  double x = 0.5;
  std::int64_t draws = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_simulate(const SimulateFlags& flags) {
  ppa::SimConfig cfg;
  try {
    cfg.p_dist = ppa::PDistSpec::parse(flags.p_dist);
    cfg.alpha_grid = ppa::parse_grid_spec(flags.alpha);
    cfg.rho_grid = ppa::parse_grid_spec(flags.rho);
    cfg.market.n_bidders = flags.n;
    cfg.market.ctr = flags.x;
    cfg.draws = flags.draws;
    cfg.seed = flags.seed;
    cfg.max_threads = env_thread_cap();
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "ppasim simulate: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ppa::RevenueTable table = ppa::sweep(cfg);
    ppa::write_file(flags.out, ppa::revenue_table_to_csv(table));
  } catch (const std::exception& e) {
    std::cerr << "ppasim simulate: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

struct FitFlags {
  std::string in;
  std::string out;
};

int cmd_fit_beta(const FitFlags& flags) {
  ppa::ProbSample sample;
  try {
    const std::string text = ppa::read_file(flags.in);
    const std::vector<double> raw = ppa::parse_probability_csv(text);
    sample = ppa::make_prob_sample(raw);
  } catch (const std::exception& e) {
    std::cerr << "ppasim fit-beta: " << e.what() << '\n';
    return kExitIo;
  }

  const auto report = [&](const ppa::BetaFit& fit, bool converged) {
    std::string text;
    text += "a=" + ppa::format_g17(fit.params.a) + "\n";
    text += "b=" + ppa::format_g17(fit.params.b) + "\n";
    text += "log_likelihood=" + ppa::format_g17(fit.log_likelihood) + "\n";
    text += "iterations=" + std::to_string(fit.iterations) + "\n";
    text += "clamp_count=" + std::to_string(sample.clamp_count) + "\n";
    text += "sample_size=" + std::to_string(sample.values.size()) + "\n";
    text += std::string("converged=") + (converged ? "true" : "false") + "\n";
    return text;
  };

  try {
    const ppa::BetaFit fit = ppa::beta_mle(sample);
    ppa::write_file(flags.out, report(fit, true));
    std::cout << "fitted a=" << fit.params.a << " b=" << fit.params.b << " in "
              << fit.iterations << " iterations\n";
  } catch (const ppa::ConvergenceError& e) {
    std::cerr << "ppasim fit-beta: " << e.what() << '\n';
    try {
      ppa::write_file(flags.out, report(e.last_iterate, false));
    } catch (const std::exception& io) {
      std::cerr << "ppasim fit-beta: " << io.what() << '\n';
      return kExitIo;
    }
    return kExitNoConverge;
  } catch (const std::exception& e) {
    std::cerr << "ppasim fit-beta: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

struct CheckFlags {
  int trials = 1000;
  std::uint64_t seed = 7;
};

int cmd_check(const CheckFlags& flags) {
  if (flags.trials < 1) {
    std::cerr << "ppasim check: --trials must be >= 1\n";
    return kExitUsage;
  }
  const auto results =
      ppa::run_property_checks({flags.trials, flags.seed});
  for (const auto& r : results) {
    std::cout << r.name << ": " << r.trials << " trials, " << r.failures
              << " failures\n";
  }
  if (!ppa::all_passed(results)) {
    for (const auto& r : results) {
      if (r.failures > 0) {
        std::cerr << "violation in " << r.name << ": " << r.first_failure
                  << '\n';
      }
    }
    return kExitViolation;
  }
  return kExitOk;
}

struct ChartFlags {
  std::string in;
  double alpha = 0.0;
  std::string out;
};

int cmd_chart(const ChartFlags& flags) {
  try {
    const ppa::RevenueTable table =
        ppa::revenue_table_from_csv(ppa::read_file(flags.in));
    ppa::write_file(flags.out,
                    ppa::render_revenue_chart_svg(table, flags.alpha));
  } catch (const std::exception& e) {
    std::cerr << "ppasim chart: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pay-per-attention auction simulator"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* c_sim = app.add_subcommand(
      "simulate", "Monte Carlo revenue sweep over a (rho, alpha) grid");
  c_sim->add_option("--p-dist", sim.p_dist,
                    "attention distribution: uniform | beta:a,b | "
                    "degenerate:p");
  c_sim->add_option("--alpha", sim.alpha, "framed-fraction grid (list or lo:hi:step)");
  c_sim->add_option("--rho", sim.rho, "correlation grid (list or lo:hi:step)");
  c_sim->add_option("--n", sim.n, "number of bidders");
  c_sim->add_option("--x", sim.x, "click-through rate given notice");
  c_sim->add_option("--draws", sim.draws, "replicates per grid cell");
  c_sim->add_option("--seed", sim.seed, "RNG seed");
  c_sim->add_option("--out", sim.out, "output CSV path")->required();

  FitFlags fit;
  auto* c_fit = app.add_subcommand(
      "fit-beta", "Beta maximum-likelihood fit of probabilities");
  c_fit->add_option("--in", fit.in, "probability CSV (one value per line)")
      ->required();
  c_fit->add_option("--out", fit.out, "report output path")->required();

  CheckFlags chk;
  auto* c_chk =
      app.add_subcommand("check", "randomized mechanism property suites");
  c_chk->add_option("--trials", chk.trials, "profiles per suite");
  c_chk->add_option("--seed", chk.seed, "RNG seed");

  ChartFlags cht;
  auto* c_cht =
      app.add_subcommand("chart", "render a revenue CSV as an SVG chart");
  c_cht->add_option("--in", cht.in, "revenue CSV from simulate")->required();
  c_cht->add_option("--alpha", cht.alpha, "alpha slice to plot")->required();
  c_cht->add_option("--out", cht.out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand(c_sim)) return cmd_simulate(sim);
  if (app.got_subcommand(c_fit)) return cmd_fit_beta(fit);
  if (app.got_subcommand(c_chk)) return cmd_check(chk);
  if (app.got_subcommand(c_cht)) return cmd_chart(cht);
  return kExitUsage;
}
