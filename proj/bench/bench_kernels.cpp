#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ffgamma/kernels.hpp"
#include "ffgamma/laurent.hpp"

namespace {

using ffgamma::GaloisField;

std::vector<GaloisField::Raw> random_coeffs(const GaloisField& f, std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<GaloisField::Raw> v(n);
  for (auto& x : v) x = static_cast<GaloisField::Raw>(rng() % f.q());
  return v;
}

template <bool Parallel>
void BM_Convolve(benchmark::State& state) {
  const GaloisField& f = GaloisField::get(static_cast<unsigned>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_coeffs(f, n, 1), b = random_coeffs(f, n, 2);
  std::vector<GaloisField::Raw> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      ffgamma::kernels::convolve_parallel(f, a.data(), n, b.data(), n, out.data(), n);
    } else {
      ffgamma::kernels::convolve_serial(f, a.data(), n, b.data(), n, out.data(), n);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(static_cast<long>(n));
}

void BM_LaurentInverse(benchmark::State& state) {
  const GaloisField& f = GaloisField::get(3);
  const long prec = state.range(0);
  auto x = ffgamma::LaurentNum::from_rational(
      ffgamma::RationalK(ffgamma::Poly::from_ints(f, {1, 1}), ffgamma::Poly::from_ints(f, {1, 0, 1})),
      prec);
  for (auto _ : state) benchmark::DoNotOptimize(x.inv());
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Convolve, false)
    ->ArgsProduct({{256, 1024, 4096}, {3, 9}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(BM_Convolve, true)
    ->ArgsProduct({{256, 1024, 4096}, {3, 9}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LaurentInverse)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
