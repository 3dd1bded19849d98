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

#pragma once

#include "fama/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fama {

// One CSV line. strategy/link are "none" for threshold and eigenvalue rows.
struct Row {
  std::string scenario;
  std::string sweep_var;
  double sweep_value = 0.0;
  std::string strategy;
  std::string link;
  std::string method;
  double value = 0.0;
  double ci_half_width = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
};

extern const char *const kCsvHeader;

// Floats use 17 significant digits.
void write_csv(std::ostream &os, const std::vector<Row> &rows);
void write_csv(const std::string &path, const std::vector<Row> &rows);
std::vector<Row> read_csv(std::istream &is);

// value vs sweep_value, one polyline per (strategy, link, method).
void write_svg(std::ostream &os, const std::vector<Row> &rows, const std::string &title);
void write_svg(const std::string &path, const std::vector<Row> &rows, const std::string &title);

// Rows in grid order; MC and quadrature kernels run in parallel inside.
std::vector<Row> run_scenario(const Scenario &s, const McOptions &opts = {});

struct Check {
  std::string name; // e.g. "deps lower bound", "dsps uplink closed vs mc"
  double sweep_value = 0.0;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
  std::size_t failures() const;
};

struct ValidateOptions {
  McOptions mc;
  // Test hook: evaluate the lower bounds with -γ̂ to exercise the error path.
  bool negate_gamma_hat = false;
};

ValidationReport validate_scenario(const Scenario &s, const ValidateOptions &opts = {});
void print_report(std::ostream &os, const Scenario &s, const ValidationReport &r);

} // namespace fama
