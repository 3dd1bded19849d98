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

#include "fama/channel.hpp"
#include "fama/montecarlo.hpp"
#include "fama/strategy.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Plain key = value scenario files. Lines starting with '#' are comments.
// Thresholds and powers are written in dB/dBm and converted to linear values
// here, once; everything downstream is linear.

namespace fama {

enum class ScenarioKind {
  Outage,    // outage probability vs a system parameter
  Threshold, // SFA step location vs the numerically located inflection
  Eigen      // block-model vs Jakes eigenvalues
};

enum class SweepVar { GammaDl, GammaUl, TransmitPower, Users, AntennaSize, Ports, ThresholdP, ThresholdL };

std::string_view to_string(SweepVar v);

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::Outage;
  SweepVar sweep_var = SweepVar::GammaDl;
  std::vector<double> grid;        // as written (dB, dBm, counts, ...)
  std::vector<double> grid_linear; // linear thresholds for GammaDl / GammaUl sweeps, else == grid

  SystemConfig cfg;
  double gamma_dl = 1.0; // linear, used when not swept
  double gamma_ul = 10.0;

  std::vector<StrategyKind> strategies;
  std::vector<Link> links;
  std::vector<Method> methods;

  long trials = 100000;
  std::uint64_t seed = 1;
  int glq_order = 96;
  double eps = 1.0;

  // Threshold scenarios: fixed Marcum b, and the fixed one of (L, p).
  double marcum_b = 100.0;
  int fixed_L = 4;
  int fixed_p = 4;

  // validate: |mc - analytic| <= max(tol_abs, ci_factor * ci)
  double tol_abs = 0.02;
  double ci_factor = 3.0;
  // threshold and eigen scenarios: relative tolerance
  double tol_rel = 0.10;
  bool check_bounds = true;
  bool check_ordering = true;

  // Throws ConfigError with the offending key or token.
  void validate() const;
};

// Point i of an outage scenario.
GridPoint make_grid_point(const Scenario &s, std::size_t i, Link link);

Scenario parse_scenario(std::string_view text, const std::string &origin = "<string>");
// Built-in name (fig3 .. fig12) or a path to a scenario file.
Scenario load_scenario(const std::string &name_or_path);
std::vector<std::string> builtin_scenario_names();
std::string builtin_scenario_text(const std::string &name);

} // namespace fama
