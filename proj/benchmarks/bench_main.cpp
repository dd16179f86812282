// Copyright 2026 The isq-scatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "isq/abscatter.hpp"
#include "isq/smatrix.hpp"
#include "isq/specfun.hpp"
#include "isq/spectral.hpp"

namespace {

void BM_SEval(benchmark::State& state) {
  const isq::IntermediateChannel ch(isq::OrderNu(0.37), 1, 1.0);
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isq::s_eval(ch, isq::SheetPoint(k, 0.0)));
    k = k < 10.0 ? k * 1.01 : 0.1;
  }
}
BENCHMARK(BM_SEval);

void BM_JostReal(benchmark::State& state) {
  const isq::OrderNu nu(0.37);
  const double t = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isq::jost_f(nu, isq::Ray::kPositiveReal, t));
  }
}
BENCHMARK(BM_JostReal)->Arg(5)->Arg(120)->Arg(2000);

void BM_TotalAmplitude(benchmark::State& state) {
  const isq::FluxConfig cfg = isq::make_flux_config(0.3, {1, 1.2}, {-1, 0.8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(isq::total_amplitude(cfg, 1.3, 2.0));
  }
}
BENCHMARK(BM_TotalAmplitude);

void BM_BoundNorm(benchmark::State& state) {
  const isq::BoundState b(isq::IntermediateChannel(isq::OrderNu(0.4), 1, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isq::bound_state_norm(b));
  }
}
BENCHMARK(BM_BoundNorm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
