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
#include "fama/rng.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace fama {

enum class Link { Downlink, Uplink };

enum class StrategyKind {
  Dsps, // max downlink SIR
  Deps, // max harvested energy
  Ucps, // max uplink channel gain
  Usps, // max uplink SNR
  FpaSc // selection combining over independent fixed antennas
};

struct Strategy {
  StrategyKind kind = StrategyKind::Dsps;
  int fpa_antennas = 0; // only for FpaSc

  static Strategy dsps() { return {StrategyKind::Dsps, 0}; }
  static Strategy deps() { return {StrategyKind::Deps, 0}; }
  static Strategy ucps() { return {StrategyKind::Ucps, 0}; }
  static Strategy usps() { return {StrategyKind::Usps, 0}; }
  static Strategy fpa_sc(int antennas);
  // K = floor(2W) + 1, the number of half-wavelength spaced antennas fitting in W.
  static Strategy fpa_sc_for(const SystemConfig &cfg);
};

int fpa_sc_antenna_count(double antenna_size);

std::string_view to_string(StrategyKind kind);
std::string_view to_string(Link link);
// Throws ConfigError naming the token.
StrategyKind parse_strategy(std::string_view token);
Link parse_link(std::string_view token);

// Selected port (0-based) for a fluid-antenna strategy; ties go to the lowest index.
// FpaSc is handled by fpa_sc_baseline and is rejected here.
std::size_t select_port(StrategyKind kind, const MetricDraw &m);

// One SC realization: K independent unit-power Rayleigh antennas, picks the
// antenna with the best link metric and returns that metric (SIR or uplink SNR).
double fpa_sc_baseline(const SystemConfig &cfg, int antennas, Link link, RandomStream &rng);

} // namespace fama
