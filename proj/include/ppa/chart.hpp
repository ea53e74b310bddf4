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

#include "ppa/montecarlo.hpp"

namespace ppa {

/// Renders the revenue curves of one alpha slice as a deterministic SVG:
/// fixed 800x500 viewbox, one polyline per scheme over rho, a +-3 sigma band
/// around each, axes and a legend. Throws std::invalid_argument when the
/// table has no rows at the requested alpha or fewer than 2 rho points.
std::string render_revenue_chart_svg(const RevenueTable& table, double alpha);

}  // namespace ppa
