// Seeded random inputs shared by the unit and acceptance tests.  Everything
// is driven by an explicit std::mt19937_64 so failures reproduce exactly.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "fracbound/counting.hpp"
#include "fracbound/detineq.hpp"
#include "fracbound/entropy.hpp"
#include "fracbound/hypergraph.hpp"
#include "fracbound/order.hpp"
#include "fracbound/rational.hpp"
#include "fracbound/relent.hpp"

namespace fracbound::testing {

// mpq_class(a, b) does not reduce to lowest terms on its own; GMP requires
// canonical operands, so every raw numerator/denominator pair goes through here.
inline Rational make_fraction(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline std::vector<int> random_alphabet_sizes(std::mt19937_64& rng, int n,
                                              int max_size = 3) {
  std::uniform_int_distribution<int> size_dist(2, max_size);
  std::vector<int> sizes(n);
  for (int& s : sizes) s = size_dist(rng);
  return sizes;
}

// Exact rational PMF: positive integer weights normalized by their sum, so
// probabilities add to exactly 1 and every outcome has positive mass.
inline JointDistribution random_rational_pmf(std::mt19937_64& rng,
                                             const std::vector<int>& sizes) {
  std::size_t points = 1;
  for (int s : sizes) points *= static_cast<std::size_t>(s);
  std::uniform_int_distribution<int> weight_dist(1, 20);
  std::vector<int> weights(points);
  long total = 0;
  for (int& w : weights) {
    w = weight_dist(rng);
    total += w;
  }
  std::vector<std::pair<std::vector<int>, Rational>> pmf;
  pmf.reserve(points);
  std::vector<int> outcome(sizes.size(), 0);
  for (std::size_t idx = 0; idx < points; ++idx) {
    pmf.push_back({outcome, make_fraction(weights[idx], total)});
    for (int pos = static_cast<int>(sizes.size()) - 1; pos >= 0; --pos) {
      if (++outcome[pos] < sizes[pos]) break;
      outcome[pos] = 0;
    }
  }
  return JointDistribution(sizes, std::move(pmf));
}

// Sparse variant: a random subset of outcomes gets positive mass (at least 2
// so the distribution is not deterministic).
inline JointDistribution random_sparse_pmf(std::mt19937_64& rng,
                                           const std::vector<int>& sizes) {
  std::size_t points = 1;
  for (int s : sizes) points *= static_cast<std::size_t>(s);
  std::uniform_int_distribution<int> weight_dist(0, 6);
  std::vector<int> weights(points, 0);
  long total = 0;
  int positive = 0;
  do {
    total = 0;
    positive = 0;
    for (int& w : weights) {
      w = weight_dist(rng);
      total += w;
      positive += w > 0;
    }
  } while (positive < 2);
  std::vector<std::pair<std::vector<int>, Rational>> pmf;
  std::vector<int> outcome(sizes.size(), 0);
  for (std::size_t idx = 0; idx < points; ++idx) {
    if (weights[idx] > 0) pmf.push_back({outcome, make_fraction(weights[idx], total)});
    for (int pos = static_cast<int>(sizes.size()) - 1; pos >= 0; --pos) {
      if (++outcome[pos] < sizes[pos]) break;
      outcome[pos] = 0;
    }
  }
  return JointDistribution(sizes, std::move(pmf));
}

inline std::vector<std::vector<Rational>> random_positive_marginals(
    std::mt19937_64& rng, const std::vector<int>& sizes) {
  std::uniform_int_distribution<int> weight_dist(1, 9);
  std::vector<std::vector<Rational>> marginals;
  marginals.reserve(sizes.size());
  for (int s : sizes) {
    std::vector<int> weights(s);
    long total = 0;
    for (int& w : weights) {
      w = weight_dist(rng);
      total += w;
    }
    std::vector<Rational> row;
    row.reserve(s);
    for (int w : weights) row.push_back(make_fraction(w, total));
    marginals.push_back(std::move(row));
  }
  return marginals;
}

inline MeasurePair random_measure_pair(std::mt19937_64& rng,
                                       const std::vector<int>& sizes) {
  return MeasurePair(random_rational_pmf(rng, sizes),
                     random_positive_marginals(rng, sizes));
}

inline PosDefMatrix random_pd_matrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a)
    for (double& x : row) x = entry(rng);
  std::vector<std::vector<double>> k(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double dot = 0;
      for (int t = 0; t < n; ++t) dot += a[i][t] * a[j][t];
      k[i][j] = k[j][i] = dot + (i == j ? 0.25 : 0.0);
    }
  return PosDefMatrix::from_rows(k);
}

inline GroundOrder random_order(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return GroundOrder(std::move(perm));
}

// Random hypergraph whose edges cover the ground set (singletons patch any
// element the random edges missed).
inline Hypergraph random_covering_hypergraph(std::mt19937_64& rng, int n,
                                             int max_edges = 6) {
  std::uniform_int_distribution<int> edge_count_dist(1, max_edges);
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, (1ull << n) - 1);
  std::vector<Subset> edges;
  const int m = edge_count_dist(rng);
  Subset covered = 0;
  for (int j = 0; j < m; ++j) {
    Subset s = mask_dist(rng);
    edges.push_back(s);
    covered |= s;
  }
  for (int i = 1; i <= n; ++i)
    if (!contains(covered, i)) edges.push_back(singleton(i));
  return Hypergraph(n, std::move(edges));
}

// Erdos-Renyi simple graph on n labeled vertices.
inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges), {});
}

inline std::vector<double> random_positive_vector(std::mt19937_64& rng,
                                                  std::size_t len) {
  std::uniform_real_distribution<double> entry(0.1, 4.0);
  std::vector<double> g(len);
  for (double& x : g) x = entry(rng);
  return g;
}

}  // namespace fracbound::testing
