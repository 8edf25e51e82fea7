// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gcmb/catalog.hpp"
#include "gcmb/parallel.hpp"
#include "gcmb/scan.hpp"
#include "gcmb/solver.hpp"

namespace {

const gcmb::Matroid& u48() {
  static const gcmb::Matroid m = gcmb::make_uniform(8, 4);
  return m;
}

void BM_ScanSerial(benchmark::State& state) {
  const gcmb::IsolationKernel kernel(u48(), gcmb::GroupSpec::parse("Z4"));
  for (auto _ : state) {
    auto scan = gcmb::scan_serial(kernel, gcmb::IsolationPredicate::strong_block,
                                  gcmb::LabelingReduction::none, {0, 65536});
    benchmark::DoNotOptimize(scan.isolating);
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const gcmb::IsolationKernel kernel(u48(), gcmb::GroupSpec::parse("Z4"));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto scan = gcmb::scan_parallel(kernel, gcmb::IsolationPredicate::strong_block,
                                    gcmb::LabelingReduction::none, {0, 65536}, jobs);
    benchmark::DoNotOptimize(scan.isolating);
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_ScanParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

struct BatchFixture {
  gcmb::Matroid m = gcmb::make_uniform(8, 4);
  gcmb::Labeling l{gcmb::GroupSpec::parse("Z6"), std::vector<int>{0, 1, 2, 3, 4, 5, 1, 2}};
  std::vector<gcmb::Signature> batch =
      gcmb::enumerate_signatures(l.group(), 4, l.fiber_sizes());
  gcmb::WeightVector w{3, -1, 4, 1, -5, 9, 2, -6};
};

void BM_SignatureBatchSerial(benchmark::State& state) {
  BatchFixture f;
  for (auto _ : state) {
    auto r = gcmb::solve_signature_batch_serial(f.m, f.l, f.batch, &f.w, false);
    benchmark::DoNotOptimize(r.best_index);
  }
}
BENCHMARK(BM_SignatureBatchSerial)->Unit(benchmark::kMillisecond);

void BM_SignatureBatchParallel(benchmark::State& state) {
  BatchFixture f;
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = gcmb::solve_signature_batch_parallel(f.m, f.l, f.batch, &f.w, false, jobs);
    benchmark::DoNotOptimize(r.best_index);
  }
}
BENCHMARK(BM_SignatureBatchParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
