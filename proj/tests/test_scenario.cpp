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

#include "fama/errors.hpp"
#include "fama/report.hpp"
#include "fama/scenario.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace fama;

namespace {

const char *kTiny = R"(# small downlink sweep
name = tiny
sweep = gamma_dl_db
grid = 0, 5
M = 4
N = 20
W = 2
strategies = dsps, deps, fpa-sc
links = downlink
methods = mc, glq, closed
trials = 3000
seed = 9
glq_order = 32
)";

std::string to_csv(const std::vector<Row> &rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

} // namespace

TEST(ScenarioParse, Basic) {
  const Scenario s = parse_scenario(kTiny);
  EXPECT_EQ(s.name, "tiny");
  EXPECT_EQ(s.sweep_var, SweepVar::GammaDl);
  ASSERT_EQ(s.grid.size(), 2u);
  EXPECT_EQ(s.cfg.num_ports, 20);
  EXPECT_DOUBLE_EQ(s.cfg.antenna_size, 2.0);
  EXPECT_EQ(s.strategies.size(), 3u);
  EXPECT_EQ(s.trials, 3000);
  EXPECT_EQ(s.glq_order, 32);
}

TEST(ScenarioParse, RangeGrid) {
  const Scenario s = parse_scenario("name = r\nsweep = gamma_dl_db\ngrid = -10:20:2\nstrategies = dsps\n"
                                    "links = downlink\nmethods = glq\n");
  ASSERT_EQ(s.grid.size(), 16u);
  EXPECT_DOUBLE_EQ(s.grid.front(), -10.0);
  EXPECT_DOUBLE_EQ(s.grid.back(), 20.0);
}

TEST(ScenarioParse, DecibelsConvertedOnce) {
  const Scenario s = parse_scenario(std::string(kTiny) + "gamma_ul_db = 10\n");
  EXPECT_DOUBLE_EQ(s.gamma_ul, 10.0);
  EXPECT_DOUBLE_EQ(s.grid[1], 5.0);
  EXPECT_NEAR(s.grid_linear[1], std::pow(10.0, 0.5), 1e-15);
  const GridPoint gp = make_grid_point(s, 1, Link::Downlink);
  EXPECT_DOUBLE_EQ(gp.value, 5.0);
  EXPECT_NEAR(gp.threshold, std::pow(10.0, 0.5), 1e-15);
  // the uplink threshold of a downlink sweep is the fixed linear value
  EXPECT_DOUBLE_EQ(make_grid_point(s, 0, Link::Uplink).threshold, 10.0);
}

TEST(ScenarioParse, RejectsUnknownKeyWithLine) {
  try {
    parse_scenario(std::string(kTiny) + "antena = 3\n", "custom.txt");
    FAIL();
  } catch (const ConfigError &e) {
    const std::string w = e.what();
    EXPECT_NE(w.find("antena"), std::string::npos) << w;
    EXPECT_NE(w.find("custom.txt:14"), std::string::npos) << w;
  }
}

TEST(ScenarioParse, RejectsBadTokens) {
  EXPECT_THROW(parse_scenario("name = x\nsweep = gamma_dl_db\ngrid = 1\nstrategies = best\nlinks = downlink\n"
                              "methods = mc\n"),
               ConfigError);
  EXPECT_THROW(parse_scenario("name = x\nsweep = gamma_dl_db\ngrid = 1\nstrategies = dsps\nlinks = downlink\n"
                              "methods = exact\n"),
               ConfigError);
  EXPECT_THROW(parse_scenario(std::string(kTiny) + "N = 30\n"), ConfigError); // duplicate
  EXPECT_THROW(parse_scenario(std::string(kTiny) + "no equals sign\n"), ConfigError);
  EXPECT_THROW(parse_scenario("name = x\nsweep = M\ngrid = 2.5\nstrategies = dsps\nlinks = downlink\nmethods = mc\n"),
               ConfigError);
}

TEST(ScenarioParse, EmptyGridIsConfigError) {
  EXPECT_THROW(parse_scenario("name = x\nsweep = gamma_dl_db\ngrid =\nstrategies = dsps\nlinks = downlink\n"
                              "methods = mc\n"),
               ConfigError);
}

TEST(ScenarioParse, ToleranceMustBePositive) {
  Scenario s = parse_scenario(kTiny);
  s.tol_abs = 0.0;
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(Builtins, AllLoadAndValidate) {
  const auto names = builtin_scenario_names();
  ASSERT_EQ(names.size(), 10u);
  for (const auto &n : names) {
    const Scenario s = load_scenario(n);
    EXPECT_EQ(s.name, n);
    EXPECT_NO_THROW(s.validate());
    EXPECT_FALSE(s.grid.empty());
  }
  EXPECT_THROW(load_scenario("fig99"), ConfigError);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.txt"), IoError);
}

TEST(Builtins, UplinkThresholdSweepSettings) {
  const Scenario s = load_scenario("fig5");
  EXPECT_DOUBLE_EQ(s.cfg.transmit_power_dbm, 20.0);
  EXPECT_EQ(s.cfg.num_ports, 50);
  EXPECT_EQ(s.cfg.num_users, 4);
  EXPECT_DOUBLE_EQ(s.cfg.antenna_size, 4.0);
  EXPECT_DOUBLE_EQ(s.cfg.distance, 12.0);
  EXPECT_EQ(s.sweep_var, SweepVar::GammaUl);
}

TEST(Csv, SeventeenDigitsAndRoundTrip) {
  Row r{"s", "gamma_dl_db", 0.1, "dsps", "downlink", "glq", 1.0 / 3.0, 0.0, 0, 7};
  const std::string text = to_csv({r});
  EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos) << text;
  EXPECT_NE(text.find("0.33333333333333331"), std::string::npos) << text;
  std::istringstream is(text);
  const auto back = read_csv(is);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].value, r.value);
  EXPECT_EQ(back[0].sweep_value, r.sweep_value);
  EXPECT_EQ(back[0].seed, 7u);
  EXPECT_EQ(back[0].method, "glq");
}

TEST(Csv, UnwritablePathIsIoError) {
  EXPECT_THROW(write_csv("/nonexistent-dir/out.csv", {}), IoError);
}

TEST(Run, RowsCoverGridStrategiesMethods) {
  const Scenario s = parse_scenario(kTiny);
  const auto rows = run_scenario(s);
  // dsps: mc + glq, deps: mc + closed, fpa-sc: mc, per point
  EXPECT_EQ(rows.size(), 2u * 5u);
  for (const Row &r : rows) {
    EXPECT_GE(r.value, 0.0);
    EXPECT_LE(r.value, 1.0);
    EXPECT_EQ(r.scenario, "tiny");
  }
  EXPECT_DOUBLE_EQ(rows.front().sweep_value, 0.0);
  EXPECT_DOUBLE_EQ(rows.back().sweep_value, 5.0);
}

TEST(Run, DeterministicAcrossThreadCounts) {
  const Scenario s = parse_scenario(kTiny);
  const std::string a = to_csv(run_scenario(s, {ChannelModel::Block, 1}));
  EXPECT_EQ(a, to_csv(run_scenario(s, {ChannelModel::Block, 1})));
  EXPECT_EQ(a, to_csv(run_scenario(s, {ChannelModel::Block, 3})));
}

TEST(Run, ThresholdAndEigenRows) {
  const auto th = run_scenario(load_scenario("fig10"));
  ASSERT_EQ(th.size(), 20u);
  for (const Row &r : th) {
    EXPECT_EQ(r.strategy, "none");
    EXPECT_TRUE(r.method == "sfa" || r.method == "numeric");
  }
  const auto ev = run_scenario(load_scenario("fig12"));
  ASSERT_FALSE(ev.empty());
  EXPECT_EQ(ev.front().sweep_var, "eigen_index");
}

TEST(Svg, SelfContained) {
  const auto rows = run_scenario(parse_scenario(kTiny));
  std::ostringstream os;
  write_svg(os, rows, "tiny");
  const std::string svg = os.str();
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("polyline"), std::string::npos);
  EXPECT_EQ(svg.find("href"), std::string::npos); // no external resources
}
