#include <benchmark/benchmark.h>

#include "binlcm/padic.hpp"

namespace {

constexpr std::uint64_t kN = 987'654'321;

void BM_Kummer(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binlcm::vp_binomial_kummer(kN, k, p));
    k = (k * 7919 + 1) % kN;
  }
}
BENCHMARK(BM_Kummer)->Arg(2)->Arg(3)->Arg(47);

void BM_Legendre(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binlcm::vp_binomial_legendre(kN, k, p));
    k = (k * 7919 + 1) % kN;
  }
}
BENCHMARK(BM_Legendre)->Arg(2)->Arg(3)->Arg(47);

}  // namespace
