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

#include "fama/scenario.hpp"
#include "fama/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fama {

namespace {

const std::map<std::string, std::string> &builtins() {
  static const std::map<std::string, std::string> m = {
      {"fig3", R"(name = fig3
sweep = gamma_dl_db
grid = -10:20:2
M = 4
N = 50
W = 3
strategies = dsps,deps,ucps,usps,fpa-sc
links = downlink
methods = mc,glq,sfa,sfa2,closed
)"},
      {"fig4", R"(name = fig4
sweep = M
grid = 2:10:1
gamma_dl_db = 1
N = 50
W = 5
strategies = dsps,deps,ucps,usps,fpa-sc
links = downlink
methods = mc,glq,sfa,sfa2,closed
)"},
      {"fig5", R"(name = fig5
sweep = gamma_ul_db
grid = 0:20:2
pt_dbm = 20
N = 50
M = 4
W = 4
d = 12
strategies = dsps,deps,ucps,usps,fpa-sc
links = uplink
methods = mc,closed,glq,nested,sfa,lb,lb-closed
)"},
      {"fig6", R"(name = fig6
sweep = pt_dbm
grid = 10:30:2
gamma_ul_db = 10
N = 50
M = 4
W = 4
d = 18
strategies = dsps,deps,ucps,usps,fpa-sc
links = uplink
methods = mc,closed,glq,nested,sfa
)"},
      {"fig7", R"(name = fig7
sweep = M
grid = 2:8:1
pt_dbm = 20
gamma_ul_db = 5
N = 50
W = 5
d = 22
strategies = dsps,deps,ucps,usps,fpa-sc
links = uplink
methods = mc,closed,glq,nested,sfa
)"},
      {"fig8", R"(name = fig8
sweep = W
grid = 1,2,3,5,10,15,20,25,30
M = 4
N = 50
pt_dbm = 25
gamma_ul_db = 10
d = 21
strategies = dsps,deps,ucps,usps
links = uplink
methods = mc,closed,glq,nested,lb,lb-closed
)"},
      {"fig9", R"(name = fig9
sweep = N
grid = 10:100:10
M = 5
pt_dbm = 25
W = 3
gamma_ul_db = 8
d = 20
strategies = dsps,deps,ucps,usps,fpa-sc
links = uplink
methods = mc,closed,glq,nested,sfa
)"},
      {"fig10", R"(name = fig10
kind = threshold
sweep = p
grid = 1:10:1
b = 100
L = 4
tol_rel = 0.02
)"},
      {"fig11", R"(name = fig11
kind = threshold
sweep = L
grid = 1:10:1
b = 100
p = 4
tol_rel = 0.02
)"},
      {"fig12", R"(name = fig12
kind = eigen
sweep = N
grid = 10,50,150
W = 3
)"},
  };
  return m;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string &v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ','))
    if (auto t = trim(item); !t.empty())
      out.push_back(t);
  return out;
}

double parse_double(const std::string &key, const std::string &v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != v.size())
    throw ConfigError("scenario key '" + key + "': not a number: '" + v + "'");
  return x;
}

long parse_long(const std::string &key, const std::string &v) {
  const double x = parse_double(key, v);
  if (x != std::floor(x) || std::abs(x) > 9e15)
    throw ConfigError("scenario key '" + key + "': not an integer: '" + v + "'");
  return static_cast<long>(x);
}

bool parse_bool(const std::string &key, const std::string &v) {
  if (v == "true" || v == "1" || v == "yes")
    return true;
  if (v == "false" || v == "0" || v == "no")
    return false;
  throw ConfigError("scenario key '" + key + "': not a boolean: '" + v + "'");
}

// "a,b,c" or "start:stop:step" (inclusive)
std::vector<double> parse_grid(const std::string &v) {
  std::vector<double> g;
  if (v.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(v);
    std::string p;
    while (std::getline(ss, p, ':'))
      parts.push_back(trim(p));
    if (parts.size() != 3)
      throw ConfigError("scenario key 'grid': range must be start:stop:step, got '" + v + "'");
    const double a = parse_double("grid", parts[0]), b = parse_double("grid", parts[1]),
                 h = parse_double("grid", parts[2]);
    if (!(h > 0.0) || b < a)
      throw ConfigError("scenario key 'grid': range needs step > 0 and stop >= start, got '" + v + "'");
    const long n = static_cast<long>(std::floor((b - a) / h + 1e-9));
    for (long i = 0; i <= n; ++i)
      g.push_back(a + i * h);
    return g;
  }
  for (const auto &item : split_list(v))
    g.push_back(parse_double("grid", item));
  return g;
}

SweepVar parse_sweep(const std::string &v) {
  for (SweepVar s : {SweepVar::GammaDl, SweepVar::GammaUl, SweepVar::TransmitPower, SweepVar::Users,
                     SweepVar::AntennaSize, SweepVar::Ports, SweepVar::ThresholdP, SweepVar::ThresholdL})
    if (v == to_string(s))
      return s;
  throw ConfigError("scenario key 'sweep': unknown variable '" + v + "'");
}

ScenarioKind parse_kind(const std::string &v) {
  if (v == "outage")
    return ScenarioKind::Outage;
  if (v == "threshold")
    return ScenarioKind::Threshold;
  if (v == "eigen")
    return ScenarioKind::Eigen;
  throw ConfigError("scenario key 'kind': unknown kind '" + v + "'");
}

bool is_integer_sweep(SweepVar v) {
  return v == SweepVar::Users || v == SweepVar::Ports || v == SweepVar::ThresholdP || v == SweepVar::ThresholdL;
}

} // namespace

std::string_view to_string(SweepVar v) {
  switch (v) {
  case SweepVar::GammaDl:
    return "gamma_dl_db";
  case SweepVar::GammaUl:
    return "gamma_ul_db";
  case SweepVar::TransmitPower:
    return "pt_dbm";
  case SweepVar::Users:
    return "M";
  case SweepVar::AntennaSize:
    return "W";
  case SweepVar::Ports:
    return "N";
  case SweepVar::ThresholdP:
    return "p";
  case SweepVar::ThresholdL:
    return "L";
  }
  return "?";
}

void Scenario::validate() const {
  if (name.empty())
    throw ConfigError("scenario: 'name' is missing");
  if (grid.empty())
    throw ConfigError("scenario '" + name + "': grid is empty");
  if (grid_linear.size() != grid.size())
    throw ConfigError("scenario '" + name + "': internal grid mismatch");
  for (double g : grid) {
    if (!std::isfinite(g))
      throw ConfigError("scenario '" + name + "': grid values must be finite");
    if (is_integer_sweep(sweep_var) && (g != std::floor(g) || g < 1.0))
      throw ConfigError("scenario '" + name + "': grid for '" + std::string(to_string(sweep_var)) +
                        "' must hold positive integers");
  }
  if (!(tol_abs > 0.0) || !(ci_factor > 0.0) || !(tol_rel > 0.0))
    throw ConfigError("scenario '" + name + "': tolerances must be > 0");
  switch (kind) {
  case ScenarioKind::Threshold:
    if (sweep_var != SweepVar::ThresholdP && sweep_var != SweepVar::ThresholdL)
      throw ConfigError("scenario '" + name + "': threshold scenarios sweep 'p' or 'L'");
    if (!(marcum_b > 0.0) || fixed_L < 1 || fixed_p < 1)
      throw ConfigError("scenario '" + name + "': needs b > 0, L >= 1, p >= 1");
    return;
  case ScenarioKind::Eigen:
    if (sweep_var != SweepVar::Ports)
      throw ConfigError("scenario '" + name + "': eigen scenarios sweep 'N'");
    cfg.validate();
    return;
  case ScenarioKind::Outage:
    break;
  }
  if (sweep_var == SweepVar::ThresholdP || sweep_var == SweepVar::ThresholdL)
    throw ConfigError("scenario '" + name + "': outage scenarios cannot sweep '" +
                      std::string(to_string(sweep_var)) + "'");
  if (strategies.empty())
    throw ConfigError("scenario '" + name + "': 'strategies' is empty");
  if (links.empty())
    throw ConfigError("scenario '" + name + "': 'links' is empty");
  if (methods.empty())
    throw ConfigError("scenario '" + name + "': 'methods' is empty");
  if (trials <= 0)
    throw ConfigError("scenario '" + name + "': trials must be > 0");
  if (glq_order < 1 || glq_order > 256)
    throw ConfigError("scenario '" + name + "': glq_order must lie in [1, 256]");
  if (!(eps > 0.0))
    throw ConfigError("scenario '" + name + "': eps must be > 0");
  if (!(gamma_dl >= 0.0) || !(gamma_ul >= 0.0))
    throw ConfigError("scenario '" + name + "': thresholds must be >= 0");
  cfg.validate();
  for (std::size_t i = 0; i < grid.size(); ++i)
    make_grid_point(*this, i, links.front()).cfg.validate();
}

GridPoint make_grid_point(const Scenario &s, std::size_t i, Link link) {
  GridPoint p;
  p.value = s.grid.at(i);
  p.cfg = s.cfg;
  double gdl = s.gamma_dl, gul = s.gamma_ul;
  switch (s.sweep_var) {
  case SweepVar::GammaDl:
    gdl = s.grid_linear[i];
    break;
  case SweepVar::GammaUl:
    gul = s.grid_linear[i];
    break;
  case SweepVar::TransmitPower:
    p.cfg.transmit_power_dbm = p.value;
    break;
  case SweepVar::Users:
    p.cfg.num_users = static_cast<int>(p.value);
    break;
  case SweepVar::AntennaSize:
    p.cfg.antenna_size = p.value;
    break;
  case SweepVar::Ports:
    p.cfg.num_ports = static_cast<int>(p.value);
    break;
  case SweepVar::ThresholdP:
  case SweepVar::ThresholdL:
    throw ConfigError("make_grid_point: not an outage sweep");
  }
  p.threshold = link == Link::Downlink ? gdl : gul;
  p.blocks = derive_blocks(p.cfg.num_ports, p.cfg.antenna_size, p.cfg.mu2, s.eps);
  return p;
}

Scenario parse_scenario(std::string_view text, const std::string &origin) {
  Scenario s;
  s.strategies = {StrategyKind::Dsps, StrategyKind::Deps, StrategyKind::Ucps, StrategyKind::Usps};
  s.links = {Link::Downlink};
  s.methods = {Method::Mc};

  using Setter = std::function<void(const std::string &, const std::string &)>;
  auto dbl = [](double &field) -> Setter {
    return [&field](const std::string &k, const std::string &v) { field = parse_double(k, v); };
  };
  auto integer = [](int &field) -> Setter {
    return [&field](const std::string &k, const std::string &v) { field = static_cast<int>(parse_long(k, v)); };
  };
  auto db = [](double &field) -> Setter {
    return [&field](const std::string &k, const std::string &v) { field = db_to_linear(parse_double(k, v)); };
  };

  bool has_grid = false;
  std::string grid_text;
  const std::map<std::string, Setter> setters = {
      {"name", [&](const std::string &, const std::string &v) { s.name = v; }},
      {"kind", [&](const std::string &, const std::string &v) { s.kind = parse_kind(v); }},
      {"sweep", [&](const std::string &, const std::string &v) { s.sweep_var = parse_sweep(v); }},
      {"grid",
       [&](const std::string &, const std::string &v) {
         has_grid = true;
         grid_text = v;
       }},
      {"strategies",
       [&](const std::string &, const std::string &v) {
         s.strategies.clear();
         for (const auto &t : split_list(v))
           s.strategies.push_back(parse_strategy(t));
       }},
      {"links",
       [&](const std::string &, const std::string &v) {
         s.links.clear();
         for (const auto &t : split_list(v))
           s.links.push_back(parse_link(t));
       }},
      {"methods",
       [&](const std::string &, const std::string &v) {
         s.methods.clear();
         for (const auto &t : split_list(v))
           s.methods.push_back(parse_method(t));
       }},
      {"trials", [&](const std::string &k, const std::string &v) { s.trials = parse_long(k, v); }},
      {"seed",
       [&](const std::string &k, const std::string &v) {
         const long x = parse_long(k, v);
         if (x < 0)
           throw ConfigError("scenario key 'seed': must be >= 0");
         s.seed = static_cast<std::uint64_t>(x);
       }},
      {"glq_order", integer(s.glq_order)},
      {"eps", dbl(s.eps)},
      {"M", integer(s.cfg.num_users)},
      {"N", integer(s.cfg.num_ports)},
      {"W", dbl(s.cfg.antenna_size)},
      {"mu2", dbl(s.cfg.mu2)},
      {"eta", dbl(s.cfg.eta)},
      {"rho", dbl(s.cfg.rho)},
      {"pt_dbm", dbl(s.cfg.transmit_power_dbm)},
      {"noise_dbm", dbl(s.cfg.noise_power_dbm)},
      {"t1", dbl(s.cfg.t1)},
      {"d", dbl(s.cfg.distance)},
      {"zeta", dbl(s.cfg.pathloss_exponent)},
      {"ref_gain", dbl(s.cfg.pathloss_ref)},
      {"gamma_dl_db", db(s.gamma_dl)},
      {"gamma_ul_db", db(s.gamma_ul)},
      {"b", dbl(s.marcum_b)},
      {"L", integer(s.fixed_L)},
      {"p", integer(s.fixed_p)},
      {"tol_abs", dbl(s.tol_abs)},
      {"ci_factor", dbl(s.ci_factor)},
      {"tol_rel", dbl(s.tol_rel)},
      {"check_bounds", [&](const std::string &k, const std::string &v) { s.check_bounds = parse_bool(k, v); }},
      {"check_ordering", [&](const std::string &k, const std::string &v) { s.check_ordering = parse_bool(k, v); }},
  };

  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    const auto eq = t.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected 'key = value', got '" + t + "'");
    const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError(where + ": unknown key '" + key + "'");
    if (!seen.insert(key).second)
      throw ConfigError(where + ": duplicate key '" + key + "'");
    try {
      it->second(key, value);
    } catch (const ConfigError &e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (!has_grid)
    throw ConfigError(origin + ": 'grid' is missing");
  s.grid = parse_grid(grid_text);
  s.grid_linear = s.grid;
  if (s.sweep_var == SweepVar::GammaDl || s.sweep_var == SweepVar::GammaUl)
    for (double &g : s.grid_linear)
      g = db_to_linear(g);
  s.validate();
  return s;
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (int i = 3; i <= 12; ++i)
    names.push_back("fig" + std::to_string(i));
  return names;
}

std::string builtin_scenario_text(const std::string &name) {
  const auto it = builtins().find(name);
  if (it == builtins().end())
    throw ConfigError("unknown built-in scenario '" + name + "'");
  return it->second;
}

Scenario load_scenario(const std::string &name_or_path) {
  if (builtins().count(name_or_path))
    return parse_scenario(builtins().at(name_or_path), name_or_path);
  std::ifstream f(name_or_path);
  if (!f) {
    if (name_or_path.find('/') == std::string::npos && name_or_path.find('.') == std::string::npos)
      throw ConfigError("unknown scenario '" + name_or_path + "'");
    throw IoError("cannot read scenario file '" + name_or_path + "'");
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str(), name_or_path);
}

} // namespace fama
