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

#include "ppa/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ppa {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

double field_double(std::string_view f, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || ptr != f.data() + f.size())
    throw std::invalid_argument(std::string("csv: bad ") + what + " field '" +
                                std::string(f) + "'");
  return v;
}

std::int64_t field_int(std::string_view f, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || ptr != f.data() + f.size())
    throw std::invalid_argument(std::string("csv: bad ") + what + " field '" +
                                std::string(f) + "'");
  return v;
}

Scheme scheme_from(std::string_view f) {
  if (f == "PPA") return Scheme::PPA;
  if (f == "PPI") return Scheme::PPI;
  if (f == "PPC") return Scheme::PPC;
  throw std::invalid_argument("csv: unknown scheme '" + std::string(f) + "'");
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string revenue_table_to_csv(const RevenueTable& table) {
  std::string out;
  out += kRevenueCsvHeader;
  out += '\n';
  for (const auto& r : table.rows) {
    out += format_g17(r.rho);
    out += ',';
    out += format_g17(r.alpha);
    out += ',';
    out += scheme_name(r.scheme);
    out += ',';
    out += format_g17(r.mean_revenue);
    out += ',';
    out += format_g17(r.std_error);
    out += ',';
    out += std::to_string(r.draws);
    out += ',';
    out += std::to_string(r.n_bidders);
    out += ',';
    out += format_g17(r.ctr);
    out += ',';
    out += r.p_dist;
    out += '\n';
  }
  return out;
}

RevenueTable revenue_table_from_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty())
    throw std::invalid_argument("csv: empty revenue table");
  if (lines.front() != kRevenueCsvHeader)
    throw std::invalid_argument("csv: unexpected header '" +
                                std::string(lines.front()) + "'");
  RevenueTable table;
  table.rows.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 9)
      throw std::invalid_argument("csv: expected 9 fields, got " +
                                  std::to_string(f.size()));
    RevenueRow row;
    row.rho = field_double(f[0], "rho");
    row.alpha = field_double(f[1], "alpha");
    row.scheme = scheme_from(f[2]);
    row.mean_revenue = field_double(f[3], "mean_revenue");
    row.std_error = field_double(f[4], "std_error");
    row.draws = field_int(f[5], "draws");
    row.n_bidders = static_cast<int>(field_int(f[6], "n"));
    row.ctr = field_double(f[7], "x");
    row.p_dist = std::string(f[8]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> parse_probability_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<double> values;
  values.reserve(lines.size());
  bool first = true;
  for (auto line : lines) {
    if (line.empty()) continue;
    if (first && line == "p") {
      first = false;
      continue;
    }
    first = false;
    values.push_back(field_double(line, "probability"));
  }
  if (values.empty())
    throw std::invalid_argument("csv: no probability values found");
  return values;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) !=
        3)
      throw std::invalid_argument("grid: expected lo:hi:step, got '" + spec +
                                  "'");
    if (!(step > 0.0) || hi < lo)
      throw std::invalid_argument("grid: need step > 0 and hi >= lo");
    const auto count =
        static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    values.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
      double v = lo + static_cast<double>(k) * step;
      // Snap accumulated float error so grid points print as the decimals
      // the user asked for.
      v = std::round(v * 1e12) / 1e12;
      values.push_back(v);
    }
    return values;
  }
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string_view item{spec.data() + pos, comma - pos};
    if (item.empty())
      throw std::invalid_argument("grid: empty element in '" + spec + "'");
    values.push_back(field_double(item, "grid"));
    pos = comma + 1;
  }
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failure on '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

}  // namespace ppa
