// fama: outage analysis for fluid-antenna wireless-powered multiple access
// Copyright (C) 2026 The fama Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fama/report.hpp"
#include "fama/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace fama {

const char *const kCsvHeader = "scenario,sweep_var,sweep_value,strategy,link,method,value,ci_half_width,trials,seed";

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string xml_escape(const std::string &s) {
  std::string o;
  for (char c : s) {
    switch (c) {
    case '<':
      o += "&lt;";
      break;
    case '>':
      o += "&gt;";
      break;
    case '&':
      o += "&amp;";
      break;
    case '"':
      o += "&quot;";
      break;
    default:
      o += c;
    }
  }
  return o;
}

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

} // namespace

void write_csv(std::ostream &os, const std::vector<Row> &rows) {
  os << kCsvHeader << '\n';
  for (const Row &r : rows)
    os << r.scenario << ',' << r.sweep_var << ',' << fmt17(r.sweep_value) << ',' << r.strategy << ',' << r.link
       << ',' << r.method << ',' << fmt17(r.value) << ',' << fmt17(r.ci_half_width) << ',' << r.trials << ','
       << r.seed << '\n';
}

void write_csv(const std::string &path, const std::vector<Row> &rows) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw IoError("cannot open '" + path + "' for writing");
  write_csv(f, rows);
  f.flush();
  if (!f)
    throw IoError("write to '" + path + "' failed");
}

std::vector<Row> read_csv(std::istream &is) {
  std::vector<Row> rows;
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw IoError("read_csv: missing or unexpected header");
  while (std::getline(is, line)) {
    if (line.empty())
      continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ','))
      f.push_back(item);
    if (f.size() != 10)
      throw IoError("read_csv: expected 10 fields, got " + std::to_string(f.size()));
    Row r;
    r.scenario = f[0];
    r.sweep_var = f[1];
    r.sweep_value = std::stod(f[2]);
    r.strategy = f[3];
    r.link = f[4];
    r.method = f[5];
    r.value = std::stod(f[6]);
    r.ci_half_width = std::stod(f[7]);
    r.trials = std::stol(f[8]);
    r.seed = std::stoull(f[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_svg(std::ostream &os, const std::vector<Row> &rows, const std::string &title) {
  const double width = 760, height = 480, left = 70, right = 220, top = 40, bottom = 50;
  const double pw = width - left - right, ph = height - top - bottom;

  std::map<std::string, std::vector<std::pair<double, double>>> series;
  std::vector<std::string> order;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Row &r : rows) {
    const std::string key = r.strategy == "none" ? r.method : r.strategy + " " + r.link + " " + r.method;
    if (!series.count(key))
      order.push_back(key);
    series[key].emplace_back(r.sweep_value, r.value);
    xmin = std::min(xmin, r.sweep_value);
    xmax = std::max(xmax, r.sweep_value);
    ymin = std::min(ymin, r.value);
    ymax = std::max(ymax, r.value);
  }
  if (rows.empty()) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (xmax == xmin)
    xmax = xmin + 1.0;
  if (ymax == ymin)
    ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left << "\" y=\"22\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + i * (xmax - xmin) / 5, yv = ymin + i * (ymax - ymin) / 5;
    os << "<line x1=\"" << sx(xv) << "\" y1=\"" << top + ph << "\" x2=\"" << sx(xv) << "\" y2=\"" << top + ph + 5
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << sx(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << fmt_short(xv)
       << "</text>\n";
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << left << "\" y2=\"" << sy(yv)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">" << fmt_short(yv)
       << "</text>\n";
  }
  if (!rows.empty())
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
       << xml_escape(rows.front().sweep_var) << "</text>\n";

  for (std::size_t k = 0; k < order.size(); ++k) {
    auto pts = series[order[k]];
    std::stable_sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    const char *color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
    const bool mc = order[k].size() >= 3 && order[k].compare(order[k].size() - 3, 3, " mc") == 0;
    if (!mc) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto &[x, y] : pts)
        os << sx(x) << ',' << sy(y) << ' ';
      os << "\"/>\n";
    }
    for (const auto &[x, y] : pts)
      os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << (mc ? 3.5 : 2) << "\" fill=\""
         << (mc ? "none" : color) << "\" stroke=\"" << color << "\"/>\n";
    const double ly = top + 12 + 15 * static_cast<double>(k);
    os << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 30 << "\" y2=\""
       << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + pw + 35 << "\" y=\"" << ly << "\">" << xml_escape(order[k]) << "</text>\n";
  }
  os << "</svg>\n";
}

void write_svg(const std::string &path, const std::vector<Row> &rows, const std::string &title) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw IoError("cannot open '" + path + "' for writing");
  write_svg(f, rows, title);
  f.flush();
  if (!f)
    throw IoError("write to '" + path + "' failed");
}

} // namespace fama
