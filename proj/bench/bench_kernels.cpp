// Serial reference kernels against their OpenMP builds on the same inputs.
#include <benchmark/benchmark.h>

#include <cmath>

#include "galdual/kernels.hpp"
#include "galdual/random.hpp"

namespace {

using namespace galdual;

struct Fixture {
  Grid3 g;
  RealField f, out;
  explicit Fixture(int n) : g(Grid3::centered(n, 10.0)), f(g.size()), out(g.size()) {
    f = sample_real(g, [](const Vec3& x) { return std::exp(-x.squaredNorm() / 8) * std::cos(x[0] + 0.3 * x[1]); });
  }
};

template <kernels::Exec E>
void BM_Derivative4(benchmark::State& st) {
  Fixture fx(int(st.range(0)));
  for (auto _ : st) {
    if constexpr (E == kernels::Exec::serial)
      kernels::serial::derivative(fx.g, fx.f.data(), fx.out.data(), 1, 4, true);
    else
      kernels::parallel::derivative(fx.g, fx.f.data(), fx.out.data(), 1, 4, true);
    benchmark::DoNotOptimize(fx.out.data());
  }
  st.SetItemsProcessed(st.iterations() * int64_t(fx.g.size()));
}

template <kernels::Exec E>
void BM_Laplacian7(benchmark::State& st) {
  Fixture fx(int(st.range(0)));
  for (auto _ : st) {
    if constexpr (E == kernels::Exec::serial)
      kernels::serial::laplacian7(fx.g, fx.f.data(), fx.out.data(), false);
    else
      kernels::parallel::laplacian7(fx.g, fx.f.data(), fx.out.data(), false);
    benchmark::DoNotOptimize(fx.out.data());
  }
  st.SetItemsProcessed(st.iterations() * int64_t(fx.g.size()));
}

template <kernels::Exec E>
void BM_Dot(benchmark::State& st) {
  Fixture fx(int(st.range(0)));
  double s = 0;
  for (auto _ : st) {
    if constexpr (E == kernels::Exec::serial)
      s += kernels::serial::dot(fx.f.data(), fx.f.data(), fx.f.size());
    else
      s += kernels::parallel::dot(fx.f.data(), fx.f.data(), fx.f.size());
    benchmark::DoNotOptimize(s);
  }
  st.SetItemsProcessed(st.iterations() * int64_t(fx.g.size()));
}

template <kernels::Exec E>
void BM_Resample(benchmark::State& st) {
  Fixture fx(int(st.range(0)));
  const int order = int(st.range(1));
  kernels::AffineMap map{Rotation::from_axis_angle(Vec3(0.2, -0.4, 0.7)).matrix(), Vec3(0.3, -0.1, 0.2)};
  for (auto _ : st) {
    if constexpr (E == kernels::Exec::serial)
      kernels::serial::resample(fx.g, fx.f.data(), fx.g, map, order, false, fx.out.data());
    else
      kernels::parallel::resample(fx.g, fx.f.data(), fx.g, map, order, false, fx.out.data());
    benchmark::DoNotOptimize(fx.out.data());
  }
  st.SetItemsProcessed(st.iterations() * int64_t(fx.g.size()));
}

constexpr auto S = kernels::Exec::serial;
constexpr auto P = kernels::Exec::parallel;

}  // namespace

BENCHMARK(BM_Derivative4<S>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Derivative4<P>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Laplacian7<S>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Laplacian7<P>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dot<S>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dot<P>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Resample<S>)->Args({64, 2})->Args({64, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Resample<P>)->Args({64, 2})->Args({64, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
