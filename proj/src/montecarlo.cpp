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

#include "fama/montecarlo.hpp"
#include "fama/errors.hpp"

#include <omp.h>

#include <cmath>
#include <memory>
#include <optional>
#include <string>

namespace fama {

std::string_view to_string(Method m) {
  switch (m) {
  case Method::Mc:
    return "mc";
  case Method::Glq:
    return "glq";
  case Method::Sfa:
    return "sfa";
  case Method::Sfa2:
    return "sfa2";
  case Method::Closed:
    return "closed";
  case Method::LowerBound:
    return "lb";
  case Method::LowerBoundClosed:
    return "lb-closed";
  case Method::Nested:
    return "nested";
  }
  return "?";
}

Method parse_method(std::string_view token) {
  for (Method m : {Method::Mc, Method::Glq, Method::Sfa, Method::Sfa2, Method::Closed, Method::LowerBound,
                   Method::LowerBoundClosed, Method::Nested})
    if (token == to_string(m))
      return m;
  throw ConfigError("unknown method '" + std::string(token) + "'");
}

OutageEstimate OutageEstimate::from_counts(long outages, long trials) {
  OutageEstimate e;
  e.trials = trials;
  e.probability = static_cast<double>(outages) / static_cast<double>(trials);
  e.ci_half_width = 1.96 * std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trials));
  e.method = Method::Mc;
  return e;
}

OutageEstimate OutageEstimate::analytic(double p, Method m) {
  if (std::isnan(p))
    throw ModelError("analytic evaluator produced NaN (" + std::string(to_string(m)) + ")");
  OutageEstimate e;
  e.probability = std::min(1.0, std::max(0.0, p));
  e.method = m;
  return e;
}

namespace {

void check_request(long count, double threshold) {
  if (count <= 0)
    throw ConfigError("trials must be >= 1");
  if (std::isnan(threshold) || std::isinf(threshold) || threshold < 0.0)
    throw DomainError("outage threshold must be finite and >= 0 (linear scale)");
}

// Per-thread scratch plus the per-trial kernel.
class TrialRunner {
public:
  TrialRunner(const SystemConfig &cfg, const BlockStructure &blocks, const std::vector<Strategy> &strategies,
              Link link, double threshold, std::uint64_t seed, const JakesSampler *jakes)
      : cfg_(cfg), blocks_(blocks), strategies_(strategies), link_(link), threshold_(threshold), seed_(seed),
        jakes_(jakes) {
    for (const Strategy &s : strategies_)
      needs_fa_ |= s.kind != StrategyKind::FpaSc;
  }

  void run(long t, std::vector<long> &counts) {
    if (needs_fa_) {
      RandomStream rng(seed_, 2 * static_cast<std::uint64_t>(t));
      if (jakes_)
        jakes_->sample(rng, draw_);
      else
        sample_draw(cfg_, blocks_, rng, draw_);
      compute_metrics(cfg_, draw_, metrics_);
    }
    for (std::size_t i = 0; i < strategies_.size(); ++i) {
      const Strategy &s = strategies_[i];
      double value;
      if (s.kind == StrategyKind::FpaSc) {
        RandomStream rng(seed_, 2 * static_cast<std::uint64_t>(t) + 1);
        value = fpa_sc_baseline(cfg_, s.fpa_antennas, link_, rng);
      } else {
        const std::size_t n = select_port(s.kind, metrics_);
        value = link_ == Link::Downlink ? metrics_.sir[n] : metrics_.ul_snr[n];
      }
      if (value < threshold_)
        ++counts[i];
    }
  }

private:
  const SystemConfig &cfg_;
  const BlockStructure &blocks_;
  const std::vector<Strategy> &strategies_;
  Link link_;
  double threshold_;
  std::uint64_t seed_;
  const JakesSampler *jakes_;
  bool needs_fa_ = false;
  ChannelDraw draw_;
  MetricDraw metrics_;
};

std::unique_ptr<JakesSampler> make_jakes(const SystemConfig &cfg, ChannelModel model) {
  if (model == ChannelModel::Jakes)
    return std::make_unique<JakesSampler>(cfg);
  return nullptr;
}

} // namespace

std::vector<long> count_outages_serial(const SystemConfig &cfg, const BlockStructure &blocks,
                                       const std::vector<Strategy> &strategies, Link link,
                                       double threshold, long first, long count, std::uint64_t seed,
                                       ChannelModel model) {
  check_request(count, threshold);
  const auto jakes = make_jakes(cfg, model);
  std::vector<long> counts(strategies.size(), 0);
  TrialRunner runner(cfg, blocks, strategies, link, threshold, seed, jakes.get());
  for (long t = first; t < first + count; ++t)
    runner.run(t, counts);
  return counts;
}

std::vector<long> count_outages(const SystemConfig &cfg, const BlockStructure &blocks,
                                const std::vector<Strategy> &strategies, Link link, double threshold,
                                long first, long count, std::uint64_t seed, const McOptions &opts) {
  check_request(count, threshold);
  const auto jakes = make_jakes(cfg, opts.model);
  const std::size_t k = strategies.size();
  std::vector<long> counts(k, 0);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    std::vector<long> local(k, 0);
    TrialRunner runner(cfg, blocks, strategies, link, threshold, seed, jakes.get());
#pragma omp for schedule(static)
    for (long t = first; t < first + count; ++t)
      runner.run(t, local);
#pragma omp critical
    for (std::size_t i = 0; i < k; ++i)
      counts[i] += local[i];
  }
  return counts;
}

std::vector<OutageEstimate> estimate_outage_many(const SystemConfig &cfg, const BlockStructure &blocks,
                                                 const std::vector<Strategy> &strategies, Link link,
                                                 double threshold, long trials, std::uint64_t seed,
                                                 const McOptions &opts) {
  const std::vector<long> counts = count_outages(cfg, blocks, strategies, link, threshold, 0, trials, seed, opts);
  std::vector<OutageEstimate> out;
  out.reserve(counts.size());
  for (long c : counts)
    out.push_back(OutageEstimate::from_counts(c, trials));
  return out;
}

OutageEstimate estimate_outage(const SystemConfig &cfg, const BlockStructure &blocks, Strategy strategy, Link link,
                               double threshold, long trials, std::uint64_t seed, const McOptions &opts) {
  return estimate_outage_many(cfg, blocks, {strategy}, link, threshold, trials, seed, opts).front();
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) { return mix_seed(seed, index); }

std::vector<SweepResult> sweep(const std::vector<GridPoint> &grid, Strategy strategy, Link link, long trials,
                               std::uint64_t seed, const McOptions &opts) {
  if (grid.empty())
    throw ConfigError("sweep: empty grid");
  std::vector<SweepResult> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const GridPoint &p = grid[i];
    out.push_back({p, estimate_outage(p.cfg, p.blocks, strategy, link, p.threshold, trials, point_seed(seed, i), opts)});
  }
  return out;
}

} // namespace fama
