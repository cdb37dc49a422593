// Psi and enumeration are memoized per process, so after the first iteration
// those benchmarks measure the warm-cache path. Bijection counting and the
// identity checks have no cache.

#include "prelie/enumerate.hpp"
#include "prelie/identities.hpp"
#include "prelie/monomial.hpp"
#include "prelie/projection.hpp"
#include "prelie/psi.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace prelie;

void BM_EnumeratePlanar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_planar(n).size());
  state.counters["trees"] = static_cast<double>(enumerate_planar(n).size());
}
BENCHMARK(BM_EnumeratePlanar)->DenseRange(6, 12, 2);

void BM_PsiMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_matrix(n).entry_sum());
}
BENCHMARK(BM_PsiMatrix)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_AlphaMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_matrix(n).entry_sum());
}
BENCHMARK(BM_AlphaMatrix)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

// A mid-order tree against the star.
void BM_CoeffBijections(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto& trees = enumerate_planar(n);
  const PlanarTree& star = trees.back();
  const PlanarTree& middle = trees[trees.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(coeff_c_bijections(middle, star));
}
BENCHMARK(BM_CoeffBijections)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

void BM_CoeffBijectionsAllPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto& trees = enumerate_planar(n);
  for (auto _ : state) {
    Integer total = 0;
    for (const auto& s : trees) {
      for (const auto& t : trees) total += coeff_c_bijections(s, t);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CoeffBijectionsAllPairs)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_TildeB(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tree& s = enumerate_nonplanar(n).back();
  const PlanarTree& tau = enumerate_planar(n).back();
  for (auto _ : state) benchmark::DoNotOptimize(count_tilde_b(s, tau));
}
BENCHMARK(BM_TildeB)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

void BM_IdentityExhaustive(benchmark::State& state) {
  const auto id = state.range(0) == 0 ? Identity::PreLie : Identity::Nap;
  for (auto _ : state) benchmark::DoNotOptimize(check_identity_exhaustive(id, 8).triples_checked);
}
BENCHMARK(BM_IdentityExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExpandAgBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_basis(ag_basis(n)).entry_sum());
}
BENCHMARK(BM_ExpandAgBasis)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
