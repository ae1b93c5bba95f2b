#include <benchmark/benchmark.h>

#include "sympent/entanglement.hpp"
#include "sympent/spectramap.hpp"

using namespace sympent;

namespace {

CMatrix random_hermitian(int n, std::uint64_t& rng) {
  CMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = gauss(rng);
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = cplx(gauss(rng), gauss(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_herm_eig(benchmark::State& state) {
  std::uint64_t rng = 7;
  const CMatrix h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(BM_herm_eig)->Arg(4)->Arg(8)->Arg(16);

void BM_svd(benchmark::State& state) {
  std::uint64_t rng = 7;
  const int n = static_cast<int>(state.range(0));
  CMatrix a(n, n);
  for (auto& z : a.data()) z = cplx(gauss(rng), gauss(rng));
  for (auto _ : state) benchmark::DoNotOptimize(svd(a));
}
BENCHMARK(BM_svd)->Arg(4)->Arg(8)->Arg(16);

void BM_analyze_ghz3(benchmark::State& state) {
  const MultipartiteState s = make_ghz(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_analyze_ghz3);

void BM_analyze_w3(benchmark::State& state) {
  const MultipartiteState s = make_w(3);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_analyze_w3);

void BM_analyze_haar(benchmark::State& state) {
  std::uint64_t rng = 99;
  const std::vector<int> dims(static_cast<size_t>(state.range(0)), 2);
  const MultipartiteState s = haar_state(dims, rng);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_analyze_haar)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
