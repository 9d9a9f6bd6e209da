// Copyright 2026 The Trapdoor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "trapdoor/distribution.hpp"
#include "trapdoor/learners.hpp"
#include "trapdoor/random.hpp"
#include "trapdoor/reductions.hpp"
#include "trapdoor/total_variation.hpp"

namespace {

using namespace trapdoor;

TrapdoorParams bench_params(std::size_t d) {
  Rng rng(17);
  std::vector<double> p(d);
  for (double& v : p) v = rng.uniform();
  return TrapdoorParams(0.1, ProbVector(std::move(p)));
}

void BM_Pmf(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const TrapdoorParams params = bench_params(d);
  const Sample atom = atom_at(d / 2, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmf(params, atom));
  }
}
BENCHMARK(BM_Pmf)->Arg(8)->Arg(16);

void BM_SampleDataset(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const TrapdoorParams params = bench_params(d);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_dataset(params, 1000, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SampleDataset)->Arg(16)->Arg(256);

void BM_TvProductBruteforce(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const ProbVector a = bench_params(d).success_probs();
  const ProbVector b = bench_params(d + 1).success_probs();
  const ProbVector b_trunc(
      std::vector<double>(b.values().begin(), b.values().begin() + d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tv_product_bruteforce(a, b_trunc));
  }
}
BENCHMARK(BM_TvProductBruteforce)->Arg(10)->Arg(16)->Arg(20);

void BM_LiftProductSamples(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  ProductDataset x(d);
  for (int i = 0; i < 1000; ++i) {
    Bits row(d);
    for (auto& bit : row) bit = rng.bernoulli(0.5) ? 1 : 0;
    x.append(std::move(row));
  }
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_product_samples(x, 0.1, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_LiftProductSamples)->Arg(16)->Arg(128);

void BM_LearnNonprivate(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const TrapdoorParams params = bench_params(d);
  const Dataset data = sample_dataset(params, 10000, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn_nonprivate(data, 0.1));
  }
}
BENCHMARK(BM_LearnNonprivate)->Arg(16)->Arg(256);

void BM_LearnDpKey(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const TrapdoorParams params = bench_params(d);
  const Dataset data = sample_dataset(params, 10000, 5);
  const PrivacyBudget budget(1.0, 1e-6);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn_dp_key(data, 0.1, budget, ++seed));
  }
}
BENCHMARK(BM_LearnDpKey)->Arg(16)->Arg(256);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
