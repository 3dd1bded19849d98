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
#include "fama/strategy.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace fama {

enum class Method { Mc, Glq, Sfa, Sfa2, Closed, LowerBound, LowerBoundClosed, Nested };

std::string_view to_string(Method m);
Method parse_method(std::string_view token);

struct OutageEstimate {
  double probability = 0.0;
  long trials = 0;             // 0 for analytic values
  double ci_half_width = 0.0;  // 95% normal approximation, MC only
  Method method = Method::Mc;

  static OutageEstimate from_counts(long outages, long trials);
  static OutageEstimate analytic(double p, Method m);
};

enum class ChannelModel { Block, Jakes };

struct McOptions {
  ChannelModel model = ChannelModel::Block;
  int threads = 0; // 0: OpenMP default
};

// Outage counts of trials [first, first + count) for each strategy, all
// strategies sharing the same channel draws. Trial t always consumes the
// substreams (seed, 2t) and (seed, 2t+1), so any split of the trial range
// yields the same totals.
std::vector<long> count_outages(const SystemConfig &cfg, const BlockStructure &blocks,
                                const std::vector<Strategy> &strategies, Link link, double threshold,
                                long first, long count, std::uint64_t seed, const McOptions &opts = {});

// Single-threaded reference of count_outages.
std::vector<long> count_outages_serial(const SystemConfig &cfg, const BlockStructure &blocks,
                                       const std::vector<Strategy> &strategies, Link link,
                                       double threshold, long first, long count, std::uint64_t seed,
                                       ChannelModel model = ChannelModel::Block);

// threshold is linear (SIR for the downlink, SNR for the uplink).
OutageEstimate estimate_outage(const SystemConfig &cfg, const BlockStructure &blocks, Strategy strategy,
                               Link link, double threshold, long trials, std::uint64_t seed,
                               const McOptions &opts = {});

std::vector<OutageEstimate> estimate_outage_many(const SystemConfig &cfg, const BlockStructure &blocks,
                                                 const std::vector<Strategy> &strategies, Link link,
                                                 double threshold, long trials, std::uint64_t seed,
                                                 const McOptions &opts = {});

struct GridPoint {
  double value = 0.0; // sweep coordinate as displayed (dB, dBm, count, ...)
  SystemConfig cfg;
  BlockStructure blocks;
  double threshold = 0.0; // linear
};

struct SweepResult {
  GridPoint point;
  OutageEstimate estimate;
};

// One estimate per grid point; point i uses seed mix_seed(seed, i).
std::vector<SweepResult> sweep(const std::vector<GridPoint> &grid, Strategy strategy, Link link, long trials,
                               std::uint64_t seed, const McOptions &opts = {});

std::uint64_t point_seed(std::uint64_t seed, std::size_t index);

} // namespace fama
