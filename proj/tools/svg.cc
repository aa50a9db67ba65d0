// tools/svg.cc

// Copyright 2026  The ugcbench Authors

// See ../LICENSE for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "svg.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

namespace ugcbench::cli {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 60, kRight = 150, kTop = 20, kBottom = 50;
constexpr std::array<const char *, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string ScatterSvg(const std::vector<std::array<double, 2>> &points,
                       const std::vector<std::string> &labels, const std::string &x_title,
                       const std::string &y_title) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    x0 = x1 = points[0][0];
    y0 = y1 = points[0][1];
    for (const auto &p : points) {
      x0 = std::min(x0, p[0]);
      x1 = std::max(x1, p[0]);
      y0 = std::min(y0, p[1]);
      y1 = std::max(y1, p[1]);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  std::map<std::string, size_t> colour;
  for (const auto &l : labels) colour.emplace(l, 0);
  size_t next = 0;
  for (auto &[label, idx] : colour) idx = next++ % kPalette.size();

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
                    "\" height=\"" + Num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + Num(kWidth) + "\" height=\"" + Num(kHeight) +
         "\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop) + "\" width=\"" + Num(pw) +
         "\" height=\"" + Num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (size_t i = 0; i < points.size(); ++i) {
    svg += "<circle cx=\"" + Num(sx(points[i][0])) + "\" cy=\"" + Num(sy(points[i][1])) +
           "\" r=\"3\" fill=\"" + kPalette[colour.at(labels[i])] + "\" fill-opacity=\"0.7\"/>\n";
  }
  svg += "<text x=\"" + Num(kLeft + pw / 2) + "\" y=\"" + Num(kHeight - 15) +
         "\" text-anchor=\"middle\">" + Escape(x_title) + "</text>\n";
  svg += "<text x=\"15\" y=\"" + Num(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         Num(kTop + ph / 2) + ")\">" + Escape(y_title) + "</text>\n";
  svg += "<text x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop + ph + 15) + "\">" + Num(x0) + "</text>\n";
  svg += "<text x=\"" + Num(kLeft + pw) + "\" y=\"" + Num(kTop + ph + 15) +
         "\" text-anchor=\"end\">" + Num(x1) + "</text>\n";
  svg += "<text x=\"" + Num(kLeft - 5) + "\" y=\"" + Num(kTop + ph) + "\" text-anchor=\"end\">" +
         Num(y0) + "</text>\n";
  svg += "<text x=\"" + Num(kLeft - 5) + "\" y=\"" + Num(kTop + 10) + "\" text-anchor=\"end\">" +
         Num(y1) + "</text>\n";
  double ly = kTop + 10;
  for (const auto &[label, idx] : colour) {
    svg += "<circle cx=\"" + Num(kWidth - kRight + 20) + "\" cy=\"" + Num(ly - 4) +
           "\" r=\"4\" fill=\"" + kPalette[idx] + "\"/>\n";
    svg += "<text x=\"" + Num(kWidth - kRight + 30) + "\" y=\"" + Num(ly) + "\">" + Escape(label) +
           "</text>\n";
    ly += 18;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ugcbench::cli
