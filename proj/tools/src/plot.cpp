// Copyright 2026 The lexeff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexeff/app/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lexeff/io.hpp"

namespace lexeff::app {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
// Replicate clouds are thinned to keep files small.
constexpr std::size_t kMaxReplicatePoints = 2000;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  // Two decimals keep the markup stable and readable.
  return format_number(std::round(v * 100.0) / 100.0);
}

}  // namespace

std::string frontier_svg(const std::string& title, const FrontierResult& frontier, const CostPoint& attested,
                         std::span<const BaselineSummary> baselines) {
  double x0 = attested.avg_length, x1 = attested.avg_length;
  double y0 = attested.info_loss, y1 = attested.info_loss;
  auto extend = [&](const CostPoint& p) {
    x0 = std::min(x0, p.avg_length);
    x1 = std::max(x1, p.avg_length);
    y0 = std::min(y0, p.info_loss);
    y1 = std::max(y1, p.info_loss);
  };
  for (const auto& p : frontier.pareto_points) extend(p);
  for (const auto& b : baselines) {
    for (const auto& p : b.costs) extend(p);
  }
  if (x1 - x0 < 1e-9) x1 = x0 + 1.0;
  if (y1 - y0 < 1e-9) y1 = y0 + 1.0;
  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\">" << escape(title) << "</text>\n";
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
      << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20 << "\" text-anchor=\"middle\">average length</text>\n";
  svg << "<text x=\"18\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kHeight / 2
      << ")\">information loss (bits)</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    svg << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << kHeight - kMargin + 16 << "\" text-anchor=\"middle\">"
        << fmt(xv) << "</text>\n";
    svg << "<text x=\"" << kMargin - 6 << "\" y=\"" << fmt(sy(yv) + 4) << "\" text-anchor=\"end\">" << fmt(yv)
        << "</text>\n";
  }

  static constexpr const char* kColours[] = {"#4c72b0", "#dd8452"};
  for (std::size_t k = 0; k < baselines.size(); ++k) {
    const auto& costs = baselines[k].costs;
    const std::size_t stride = std::max<std::size_t>(1, costs.size() / kMaxReplicatePoints);
    svg << "<g fill=\"" << kColours[k % 2] << "\" fill-opacity=\"0.3\">\n";
    for (std::size_t i = 0; i < costs.size(); i += stride) {
      svg << "<circle cx=\"" << fmt(sx(costs[i].avg_length)) << "\" cy=\"" << fmt(sy(costs[i].info_loss))
          << "\" r=\"2\"/>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kMargin + 16 * k << "\" text-anchor=\"end\" fill=\""
        << kColours[k % 2] << "\">" << to_string(baselines[k].kind) << "</text>\n";
  }

  svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < frontier.pareto_points.size(); ++i) {
    if (i) svg << ' ';
    svg << fmt(sx(frontier.pareto_points[i].avg_length)) << ',' << fmt(sy(frontier.pareto_points[i].info_loss));
  }
  svg << "\"/>\n";
  svg << "<circle cx=\"" << fmt(sx(attested.avg_length)) << "\" cy=\"" << fmt(sy(attested.info_loss))
      << "\" r=\"5\" fill=\"#c44e52\"/>\n";
  svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kMargin + 16 * baselines.size()
      << "\" text-anchor=\"end\" fill=\"#c44e52\">attested</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lexeff::app
