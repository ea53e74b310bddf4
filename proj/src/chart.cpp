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

#include "ppa/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace ppa {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kLeft = 60.0, kRight = 660.0;   // plot area x range
constexpr double kTop = 24.0, kBottom = 452.0;   // plot area y range

const char* scheme_color(Scheme s) {
  switch (s) {
    case Scheme::PPA: return "#d62728";
    case Scheme::PPI: return "#1f77b4";
    case Scheme::PPC: return "#2ca02c";
  }
  return "#000000";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Point {
  double rho, mean, se;
};

}  // namespace

std::string render_revenue_chart_svg(const RevenueTable& table, double alpha) {
  std::map<double, std::array<Point, 3>> by_rho;
  std::array<bool, 3> seen{};
  for (const auto& row : table.rows) {
    if (row.alpha != alpha) continue;
    const auto k = static_cast<std::size_t>(row.scheme);
    by_rho[row.rho][k] = Point{row.rho, row.mean_revenue, row.std_error};
    seen[k] = true;
  }
  if (by_rho.empty())
    throw std::invalid_argument("chart: no rows at requested alpha");
  if (by_rho.size() < 2)
    throw std::invalid_argument("chart: need at least 2 rho points");
  if (!(seen[0] && seen[1] && seen[2]))
    throw std::invalid_argument("chart: need rows for all three schemes");

  const double rho_min = by_rho.begin()->first;
  const double rho_max = by_rho.rbegin()->first;
  double y_max = 0.0;
  for (const auto& [rho, pts] : by_rho) {
    for (const auto& p : pts) y_max = std::max(y_max, p.mean + 3.0 * p.se);
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;

  const auto sx = [&](double rho) {
    return kLeft + (rho - rho_min) / (rho_max - rho_min) * (kRight - kLeft);
  };
  const auto sy = [&](double v) {
    return kBottom - v / y_max * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
         "width=\"800\" height=\"500\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // 3-sigma bands first, so the lines draw on top.
  for (Scheme s : kAllSchemes) {
    const auto k = static_cast<std::size_t>(s);
    std::string upper, lower;
    for (const auto& [rho, pts] : by_rho) {
      upper += num(sx(rho)) + "," + num(sy(pts[k].mean + 3.0 * pts[k].se)) + " ";
    }
    for (auto it = by_rho.rbegin(); it != by_rho.rend(); ++it) {
      const auto& p = it->second[k];
      lower += num(sx(it->first)) + "," + num(sy(p.mean - 3.0 * p.se)) + " ";
    }
    svg += "<polygon points=\"" + upper + lower + "\" fill=\"";
    svg += scheme_color(s);
    svg += "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
  }

  // Axes.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
         num(kRight) + "\" y2=\"" + num(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kBottom) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double rho = rho_min + (rho_max - rho_min) * t / 5.0;
    const double x = sx(rho);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
           num(x) + "\" y2=\"" + num(kBottom + 5) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 20) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" + label(rho) + "</text>\n";
    const double yv = y_max * t / 5.0;
    const double y = sy(yv);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(y) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" + label(yv) + "</text>\n";
  }
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" +
         num(kBottom + 38) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">rho</text>\n";
  svg += "<text x=\"16\" y=\"" + num((kTop + kBottom) / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((kTop + kBottom) / 2) + ")\">mean revenue</text>\n";

  // Revenue curves.
  for (Scheme s : kAllSchemes) {
    const auto k = static_cast<std::size_t>(s);
    std::string pts;
    for (const auto& [rho, p] : by_rho) {
      pts += num(sx(rho)) + "," + num(sy(p[k].mean)) + " ";
    }
    svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"";
    svg += scheme_color(s);
    svg += "\" stroke-width=\"2\"/>\n";
  }

  // Legend.
  double ly = 40.0;
  svg += "<text x=\"684\" y=\"" + num(ly - 14) +
         "\" font-family=\"sans-serif\" font-size=\"12\">alpha = " +
         label(alpha) + "</text>\n";
  for (Scheme s : kAllSchemes) {
    svg += "<line x1=\"684\" y1=\"" + num(ly) + "\" x2=\"712\" y2=\"" +
           num(ly) + "\" stroke=\"";
    svg += scheme_color(s);
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"718\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">";
    svg += scheme_name(s);
    svg += "</text>\n";
    ly += 20.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace ppa
