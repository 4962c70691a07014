/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <sstream>

#include "cyclocond/companion.hpp"
#include "cyclocond/numeric.hpp"
#include "cyclocond/scan.hpp"

using namespace cyclocond;

namespace {

void FrobeniusOrbit(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sum(n));
}

void FrobeniusColumnwiseParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sum_columnwise(n));
}

void FrobeniusColumnwiseSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::frobenius_sum_columnwise(n));
}

void NumericParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  NumericOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(cond_numeric(n, opts));
}

void NumericSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::cond_numeric(n, 1e-8));
}

ScanConfig scan_config() {
  ScanConfig cfg;
  cfg.squarefree_only = true;
  cfg.timestamp = false;
  cfg.jobs = omp_get_max_threads();
  return cfg;
}

void ScanParallel(benchmark::State& state) {
  const auto cfg = scan_config();
  for (auto _ : state) {
    std::ostringstream out;
    run_scan(2, static_cast<std::uint64_t>(state.range(0)), cfg, out);
    benchmark::DoNotOptimize(out.str());
  }
}

void ScanSerial(benchmark::State& state) {
  const auto cfg = scan_config();
  for (auto _ : state) {
    std::ostringstream out;
    reference::run_scan(2, static_cast<std::uint64_t>(state.range(0)), cfg, out);
    benchmark::DoNotOptimize(out.str());
  }
}

}  // namespace

BENCHMARK(FrobeniusOrbit)->Arg(105)->Arg(231)->Arg(1155)->Arg(8645)->Unit(benchmark::kMillisecond);
BENCHMARK(FrobeniusColumnwiseParallel)->Arg(105)->Arg(165)->Arg(231)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(FrobeniusColumnwiseSerial)->Arg(105)->Arg(165)->Arg(231)->Unit(benchmark::kMillisecond);
BENCHMARK(NumericParallel)->Arg(105)->Arg(210)->Arg(330)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(NumericSerial)->Arg(105)->Arg(210)->Arg(330)->Unit(benchmark::kMillisecond);
BENCHMARK(ScanParallel)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(ScanSerial)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
