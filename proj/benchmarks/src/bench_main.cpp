// Microbenchmarks for the bound-evaluation hot paths: entropy marginals and
// ordered bounds, the exact-rational covering LP, counting bounds, and
// determinant inequalities.  Inputs are deterministic (fixed seeds) so runs
// are comparable across revisions.

#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "fracbound/counting.hpp"
#include "fracbound/detineq.hpp"
#include "fracbound/entropy.hpp"
#include "fracbound/hypergraph.hpp"
#include "fracbound/lp.hpp"
#include "fracbound/relent.hpp"
#include "fracbound/setfn.hpp"

namespace {

using namespace fracbound;

Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Full-support joint distribution of n binary variables with exact weights.
JointDistribution binary_distribution(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(1, 20);
  const std::size_t outcomes = std::size_t{1} << n;
  std::vector<long> w(outcomes);
  long total = 0;
  for (auto& v : w) total += (v = weight(rng));
  std::vector<std::pair<std::vector<int>, Rational>> pmf;
  pmf.reserve(outcomes);
  for (std::size_t idx = 0; idx < outcomes; ++idx) {
    std::vector<int> outcome(n);
    for (int pos = 0; pos < n; ++pos) outcome[pos] = static_cast<int>((idx >> pos) & 1);
    pmf.push_back({std::move(outcome), fraction(w[idx], total)});
  }
  return JointDistribution(std::vector<int>(n, 2), std::move(pmf));
}

PosDefMatrix random_pd_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a)
    for (auto& v : row) v = entry(rng);
  std::vector<std::vector<double>> k(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < n; ++t) k[i][j] += a[i][t] * a[j][t];
      if (i == j) k[i][j] += 0.25;
    }
  return PosDefMatrix::from_rows(k);
}

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

void BM_EntropyAllMarginals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dist = binary_distribution(n, 11);
  // entropy_set_function pre-tabulates every subset entropy for small n, so
  // constructing it is where the marginalization work happens.
  for (auto _ : state) {
    const auto f = entropy_set_function(dist);
    benchmark::DoNotOptimize(f(full_set(n)));
  }
}
BENCHMARK(BM_EntropyAllMarginals)->Arg(4)->Arg(6)->Arg(8);

void BM_EntropyStrongBounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dist = binary_distribution(n, 12);
  const auto f = entropy_set_function(dist);
  const auto h = leave_one_out(n);
  const auto w = degree_covering(h);  // fractional partition: quasiregular
  const auto order = GroundOrder::natural(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strong_upper_bound(f, h, w, order));
    benchmark::DoNotOptimize(strong_lower_bound(f, h, w, order));
  }
}
BENCHMARK(BM_EntropyStrongBounds)->Arg(4)->Arg(6)->Arg(8);

void BM_DivergenceBounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<std::vector<Rational>> uniform(
      n, std::vector<Rational>(2, fraction(1, 2)));
  const MeasurePair pair(binary_distribution(n, 13), uniform);
  const auto h = leave_one_out(n);
  const auto w = degree_covering(h);
  const auto order = GroundOrder::natural(n);
  for (auto _ : state) benchmark::DoNotOptimize(divergence_bounds(pair, h, w, order));
}
BENCHMARK(BM_DivergenceBounds)->Arg(4)->Arg(6)->Arg(8);

void BM_CoveringLpKSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = k_sets(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_fractional_covering(h));
}
BENCHMARK(BM_CoveringLpKSets)->Arg(6)->Arg(8)->Arg(10);

void BM_CoveringLpCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Subset> edges;
  for (int i = 1; i <= n; ++i)
    edges.push_back(singleton(i) | singleton(i % n + 1));
  const Hypergraph h(n, std::move(edges));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_fractional_covering(h));
}
BENCHMARK(BM_CoveringLpCycle)->Arg(16)->Arg(32);

void BM_PackingOnTranspose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = transpose_hypergraph(k_sets(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_fractional_packing(h));
}
BENCHMARK(BM_PackingOnTranspose)->Arg(6)->Arg(8);

void BM_IndependentSetsExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, 21);
  for (auto _ : state) benchmark::DoNotOptimize(independent_sets_exact(g));
}
BENCHMARK(BM_IndependentSetsExact)->Arg(16)->Arg(20)->Arg(24);

void BM_IndependentSetBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, 22);
  for (auto _ : state) benchmark::DoNotOptimize(independent_set_bound(g));
}
BENCHMARK(BM_IndependentSetBound)->Arg(20)->Arg(40);

void BM_HomBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, 23);
  const auto k3 = complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(hom_bound(g, k3));
}
BENCHMARK(BM_HomBound)->Arg(12)->Arg(24);

void BM_HomCompleteBipartite(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto target = independence_gadget();
  for (auto _ : state) benchmark::DoNotOptimize(hom_complete_bipartite(a, a, target));
}
BENCHMARK(BM_HomCompleteBipartite)->Arg(1000)->Arg(10000);

void BM_DeterminantBounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = random_pd_matrix(n, 31);
  const auto h = singletons(n);
  const Weighting w(std::vector<Rational>(n, Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bounds(k, h, w));
}
BENCHMARK(BM_DeterminantBounds)->Arg(8)->Arg(12);

void BM_ClassicalDetInequalities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = random_pd_matrix(n, 32);
  const Subset split = full_set(n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_determinant_inequalities(k, split, 2));
}
BENCHMARK(BM_ClassicalDetInequalities)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
