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

// Serial reference vs OpenMP kernels: MC trial loop and GLQ table fills.

#include "fama/analytic.hpp"
#include "fama/montecarlo.hpp"

#include <benchmark/benchmark.h>

using namespace fama;
namespace an = fama::analytic;

namespace {

const std::vector<Strategy> kStrategies = {Strategy::dsps(), Strategy::deps(), Strategy::ucps(), Strategy::usps()};

SystemConfig bench_cfg() {
  SystemConfig c;
  c.antenna_size = 4.0;
  return c;
}

void BM_McSerial(benchmark::State &st) {
  const SystemConfig cfg = bench_cfg();
  const BlockStructure b = derive_blocks(cfg.num_ports, cfg.antenna_size, cfg.mu2);
  const long n = st.range(0);
  for (auto _ : st)
    benchmark::DoNotOptimize(count_outages_serial(cfg, b, kStrategies, Link::Uplink, 10.0, 0, n, 1));
  st.SetItemsProcessed(st.iterations() * n);
}

void BM_McParallel(benchmark::State &st) {
  const SystemConfig cfg = bench_cfg();
  const BlockStructure b = derive_blocks(cfg.num_ports, cfg.antenna_size, cfg.mu2);
  const long n = st.range(0);
  for (auto _ : st)
    benchmark::DoNotOptimize(count_outages(cfg, b, kStrategies, Link::Uplink, 10.0, 0, n, 1));
  st.SetItemsProcessed(st.iterations() * n);
}

template <an::Exec E> void BM_DspsDownlinkGlq(benchmark::State &st) {
  const SystemConfig cfg;
  const BlockStructure b = derive_blocks(cfg.num_ports, cfg.antenna_size, cfg.mu2);
  const auto &rule = specfun::gauss_laguerre_cached(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(an::dsps_downlink_glq(cfg, b, 2.0, rule, E));
}

template <an::Exec E> void BM_UspsUplinkNested(benchmark::State &st) {
  const SystemConfig cfg = bench_cfg();
  const BlockStructure b = derive_blocks(cfg.num_ports, cfg.antenna_size, cfg.mu2);
  const auto u = an::UplinkParams::from(cfg, 10.0);
  const auto &rule = specfun::gauss_laguerre_cached(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(an::usps_uplink_nested(u, b, rule, E));
}

} // namespace

BENCHMARK(BM_McSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DspsDownlinkGlq<an::Exec::Serial>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DspsDownlinkGlq<an::Exec::Parallel>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UspsUplinkNested<an::Exec::Serial>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UspsUplinkNested<an::Exec::Parallel>)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
