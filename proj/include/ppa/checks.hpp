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

#include <cstdint>
#include <string>
#include <vector>

#include "ppa/core.hpp"

namespace ppa {

/// Randomized invariant suites behind the `check` subcommand.
struct CheckOptions {
  int trials = 1000;
  std::uint64_t seed = 7;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// JSON record of the first violating profile, for replay; empty when the
  /// suite passed.
  std::string first_failure;
};

/// Runs all suites: dominance oracle, efficiency, the PPA/PPC revenue
/// identity, alpha-invariance of PPA/PPI, and closed-form vs mechanism
/// revenue equality. Deterministic in (trials, seed).
std::vector<SuiteResult> run_property_checks(const CheckOptions& options);

/// True iff no suite recorded a failure.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace ppa
