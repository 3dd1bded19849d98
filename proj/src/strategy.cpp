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

#include "fama/strategy.hpp"
#include "fama/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace fama {

namespace {

std::size_t argmax(const std::vector<double> &v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best])
      best = i;
  return best;
}

} // namespace

Strategy Strategy::fpa_sc(int antennas) {
  if (antennas < 1)
    throw ConfigError("fpa-sc needs at least one antenna");
  return {StrategyKind::FpaSc, antennas};
}

Strategy Strategy::fpa_sc_for(const SystemConfig &cfg) { return fpa_sc(fpa_sc_antenna_count(cfg.antenna_size)); }

int fpa_sc_antenna_count(double antenna_size) {
  if (!(antenna_size > 0.0))
    throw ConfigError("antenna_size must be > 0");
  return static_cast<int>(std::floor(2.0 * antenna_size)) + 1;
}

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
  case StrategyKind::Dsps:
    return "dsps";
  case StrategyKind::Deps:
    return "deps";
  case StrategyKind::Ucps:
    return "ucps";
  case StrategyKind::Usps:
    return "usps";
  case StrategyKind::FpaSc:
    return "fpa-sc";
  }
  return "?";
}

std::string_view to_string(Link link) { return link == Link::Downlink ? "downlink" : "uplink"; }

StrategyKind parse_strategy(std::string_view token) {
  for (StrategyKind k : {StrategyKind::Dsps, StrategyKind::Deps, StrategyKind::Ucps, StrategyKind::Usps,
                         StrategyKind::FpaSc})
    if (token == to_string(k))
      return k;
  throw ConfigError("unknown strategy '" + std::string(token) + "'");
}

Link parse_link(std::string_view token) {
  if (token == "downlink" || token == "dl")
    return Link::Downlink;
  if (token == "uplink" || token == "ul")
    return Link::Uplink;
  throw ConfigError("unknown link '" + std::string(token) + "'");
}

std::size_t select_port(StrategyKind kind, const MetricDraw &m) {
  if (m.size() == 0)
    throw ModelError("select_port: empty metrics");
  switch (kind) {
  case StrategyKind::Dsps:
    return argmax(m.sir);
  case StrategyKind::Deps:
    return argmax(m.ehp);
  case StrategyKind::Ucps:
    return argmax(m.uplink_gain);
  case StrategyKind::Usps:
    return argmax(m.ul_snr);
  case StrategyKind::FpaSc:
    break;
  }
  throw ModelError("select_port: fpa-sc has no port to select, use fpa_sc_baseline");
}

double fpa_sc_baseline(const SystemConfig &cfg, int antennas, Link link, RandomStream &rng) {
  if (antennas < 1)
    throw ConfigError("fpa-sc needs at least one antenna");
  ChannelDraw d;
  d.num_ports = antennas;
  d.num_users = cfg.num_users;
  d.g.resize(static_cast<std::size_t>(antennas) * cfg.num_users);
  d.h.resize(antennas);
  // unit-variance per real dimension, matching the fluid-antenna marginals
  for (int n = 0; n < antennas; ++n) {
    for (int m = 0; m < cfg.num_users; ++m) {
      const double re = rng.next_normal();
      const double im = rng.next_normal();
      d.g[static_cast<std::size_t>(n) * cfg.num_users + m] = {re, im};
    }
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    d.h[n] = {re, im};
  }
  MetricDraw m;
  compute_metrics(cfg, d, m);
  if (link == Link::Downlink)
    return m.sir[argmax(m.sir)];
  return m.ul_snr[argmax(m.ul_snr)];
}

} // namespace fama
