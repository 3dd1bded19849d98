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

#include "fama/analytic.hpp"
#include "fama/errors.hpp"
#include "fama/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace fama;

namespace {

const std::vector<Strategy> kAll = {Strategy::dsps(), Strategy::deps(), Strategy::ucps(), Strategy::usps(),
                                    Strategy::fpa_sc(7)};

BlockStructure default_blocks(const SystemConfig &cfg) {
  return derive_blocks(cfg.num_ports, cfg.antenna_size, cfg.mu2);
}

} // namespace

TEST(Mc, ParallelEqualsSerial) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  for (Link link : {Link::Downlink, Link::Uplink}) {
    const double thr = link == Link::Downlink ? 1.0 : 10.0;
    const auto par = count_outages(cfg, b, kAll, link, thr, 0, 3000, 99);
    const auto ser = count_outages_serial(cfg, b, kAll, link, thr, 0, 3000, 99);
    EXPECT_EQ(par, ser);
  }
}

TEST(Mc, ThreadCountInvariance) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  const auto one = count_outages(cfg, b, kAll, Link::Uplink, 10.0, 0, 2000, 5, {ChannelModel::Block, 1});
  for (int t : {2, 3, 8})
    EXPECT_EQ(count_outages(cfg, b, kAll, Link::Uplink, 10.0, 0, 2000, 5, {ChannelModel::Block, t}), one);
}

TEST(Mc, ChunkInvariance) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  const auto whole = count_outages(cfg, b, kAll, Link::Downlink, 1.0, 0, 2500, 17);
  auto a = count_outages(cfg, b, kAll, Link::Downlink, 1.0, 0, 1000, 17);
  const auto c = count_outages(cfg, b, kAll, Link::Downlink, 1.0, 1000, 1500, 17);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += c[i];
  EXPECT_EQ(a, whole);
}

TEST(Mc, JakesParallelEqualsSerial) {
  SystemConfig cfg;
  cfg.num_ports = 20;
  const BlockStructure b = default_blocks(cfg);
  McOptions o;
  o.model = ChannelModel::Jakes;
  EXPECT_EQ(count_outages(cfg, b, kAll, Link::Downlink, 1.0, 0, 1000, 3, o),
            count_outages_serial(cfg, b, kAll, Link::Downlink, 1.0, 0, 1000, 3, ChannelModel::Jakes));
}

TEST(Mc, ConfidenceInterval) {
  const OutageEstimate e = OutageEstimate::from_counts(250, 1000);
  EXPECT_DOUBLE_EQ(e.probability, 0.25);
  EXPECT_NEAR(e.ci_half_width, 1.96 * std::sqrt(0.25 * 0.75 / 1000.0), 1e-15);
  EXPECT_EQ(e.trials, 1000);
  EXPECT_EQ(e.method, Method::Mc);
  EXPECT_DOUBLE_EQ(OutageEstimate::from_counts(0, 10).ci_half_width, 0.0);
}

TEST(Mc, AnalyticClampsAndRejectsNan) {
  EXPECT_DOUBLE_EQ(OutageEstimate::analytic(1.0 + 1e-12, Method::Glq).probability, 1.0);
  EXPECT_DOUBLE_EQ(OutageEstimate::analytic(-1e-15, Method::Glq).probability, 0.0);
  EXPECT_THROW(OutageEstimate::analytic(std::nan(""), Method::Glq), ModelError);
}

TEST(Mc, Errors) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  EXPECT_THROW(estimate_outage(cfg, b, Strategy::dsps(), Link::Downlink, 1.0, 0, 1), ConfigError);
  EXPECT_THROW(estimate_outage(cfg, b, Strategy::dsps(), Link::Downlink, -1.0, 10, 1), DomainError);
  EXPECT_THROW(estimate_outage(cfg, b, Strategy::dsps(), Link::Downlink, std::numeric_limits<double>::quiet_NaN(),
                               10, 1),
               DomainError);
  EXPECT_THROW(sweep({}, Strategy::dsps(), Link::Downlink, 10, 1), ConfigError);
}

TEST(Mc, ZeroThresholdNeverOutage) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  for (Link link : {Link::Downlink, Link::Uplink})
    for (long c : count_outages(cfg, b, kAll, link, 0.0, 0, 500, 1))
      EXPECT_EQ(c, 0);
}

TEST(Mc, MethodTokens) {
  for (Method m : {Method::Mc, Method::Glq, Method::Sfa, Method::Sfa2, Method::Closed, Method::LowerBound,
                   Method::LowerBoundClosed, Method::Nested})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("exact"), ConfigError);
}

// Downlink outage of DEPS/UCPS/USPS is independent of the selection rule.
TEST(Mc, NonSirStrategiesMatchClosedForm) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  const double gamma = 1.0;
  const double want = analytic::deps_downlink_closed(cfg.num_users, gamma).probability;
  const auto est = estimate_outage_many(cfg, b, {Strategy::deps(), Strategy::ucps(), Strategy::usps()},
                                        Link::Downlink, gamma, 40000, 4);
  for (const auto &e : est)
    EXPECT_NEAR(e.probability, want, 4.0 * e.ci_half_width / 1.96);
}

TEST(Mc, SweepSeedsPerPoint) {
  const SystemConfig cfg;
  const BlockStructure b = default_blocks(cfg);
  std::vector<GridPoint> grid;
  for (double g : {0.5, 1.0})
    grid.push_back({g, cfg, b, g});
  const auto r = sweep(grid, Strategy::dsps(), Link::Downlink, 2000, 8);
  ASSERT_EQ(r.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(r[i].estimate.probability,
              estimate_outage(cfg, b, Strategy::dsps(), Link::Downlink, grid[i].threshold, 2000, point_seed(8, i))
                  .probability);
  EXPECT_NE(point_seed(8, 0), point_seed(8, 1));
}
