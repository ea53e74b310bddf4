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
#include <string_view>
#include <vector>

#include "ppa/montecarlo.hpp"

namespace ppa {

/// The one revenue-table schema shared by the writer (simulate) and the
/// readers (chart, crossing analysis). Kept in a single definition so the
/// two sides cannot drift apart.
inline constexpr std::string_view kRevenueCsvHeader =
    "rho,alpha,scheme,mean_revenue,std_error,draws,n,x,p_dist";

/// Doubles in revenue CSVs carry 17 significant digits, enough to round-trip
/// bit-exactly.
std::string format_g17(double v);

std::string revenue_table_to_csv(const RevenueTable& table);

/// Strict inverse of revenue_table_to_csv; throws std::invalid_argument on a
/// wrong header, field count or unparsable field. Accepts CRLF line endings.
RevenueTable revenue_table_from_csv(std::string_view text);

/// Probability input files: one value per line, optional single header line
/// "p", UTF-8, LF or CRLF. Throws std::invalid_argument when empty or
/// malformed; range checking happens later in make_prob_sample.
std::vector<double> parse_probability_csv(std::string_view text);

/// Grid flag syntax: either a comma list ("0,0.5,1") or an inclusive range
/// "lo:hi:step". Range points are snapped to 12 decimals so they print as the
/// decimals the user asked for. Throws std::invalid_argument on bad input.
std::vector<double> parse_grid_spec(const std::string& spec);

/// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ppa
