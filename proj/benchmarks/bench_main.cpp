#include <benchmark/benchmark.h>

#include "dpw/closure.hpp"
#include "dpw/factor.hpp"
#include "dpw/generators.hpp"
#include "dpw/graph.hpp"
#include "dpw/isometry.hpp"
#include "dpw/wheel_structure.hpp"

namespace {

void BM_Compose(benchmark::State& state) {
  const int n = 8;
  auto a = dpw::build_generator(n, {dpw::GenTag::C, 2});
  auto b = dpw::build_generator(n, {dpw::GenTag::H});
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.compose(b));
  }
}
BENCHMARK(BM_Compose);

void BM_CharMemberMinus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto c = dpw::build_generator(n, {dpw::GenTag::C, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpw::char_member_minus(n, c));
  }
}
BENCHMARK(BM_CharMemberMinus)->Arg(6)->Arg(8);

void BM_AllPairsBFS(benchmark::State& state) {
  auto w = dpw::wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    dpw::DistanceMatrix d(w);
    benchmark::DoNotOptimize(d.at(1, 2));
  }
}
BENCHMARK(BM_AllPairsBFS)->Arg(8)->Arg(9);

void BM_EnumerateWheel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto w = dpw::wheel(n);
  dpw::EnumerateOptions opts;
  opts.vertex_cap = n + 1;
  for (auto _ : state) {
    auto elems = dpw::enumerate_dp(w, opts);
    benchmark::DoNotOptimize(elems.size());
  }
}
BENCHMARK(BM_EnumerateWheel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ClosureMinus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gens = dpw::genset_minus(n);
  for (auto _ : state) {
    auto m = dpw::generate(dpw::Ambient::rim(n), gens, {});
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_ClosureMinus)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GreenByIdeals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = dpw::generate(dpw::Ambient::with_hub(n), dpw::genset_full(n), {});
  for (auto _ : state) {
    auto g = dpw::green(m, dpw::GreenMode::ByIdeals);
    benchmark::DoNotOptimize(g.d_count);
  }
}
BENCHMARK(BM_GreenByIdeals)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FactorFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  dpw::EnumerateOptions opts;
  opts.vertex_cap = n + 1;
  auto elems = dpw::enumerate_dp(dpw::wheel(n), opts);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& e = elems[i++ % elems.size()];
    benchmark::DoNotOptimize(dpw::factor_full(n, e));
  }
}
BENCHMARK(BM_FactorFull)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
