#include "fracbound/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

Hypergraph::Hypergraph(int n, std::vector<Subset> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxGroundSize)
    throw precondition_error("ground set size out of range");
  if (edges_.empty()) throw precondition_error("hypergraph needs at least one edge");
  degree_.assign(n, 0);
  for (Subset s : edges_) {
    if (s == 0) throw precondition_error("empty hyperedge");
    if ((s & ~full_set(n)) != 0)
      throw precondition_error("hyperedge leaves the ground set");
    for (int i : subset_elements(s)) ++degree_[i - 1];
  }
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<Subset> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    Subset s = 0;
    for (int i : e) {
      if (i < 1 || i > n)
        throw precondition_error("edge element " + std::to_string(i) +
                                 " outside 1.." + std::to_string(n));
      s |= singleton(i);
    }
    masks.push_back(s);
  }
  return Hypergraph(n, std::move(masks));
}

std::pair<int, int> Hypergraph::degree_range(Subset s) const {
  if (s == 0) throw precondition_error("degree_range of empty subset");
  int lo = 0, hi = 0;
  bool first = true;
  for (int i : subset_elements(s)) {
    int d = degree(i);
    if (d == 0)
      throw precondition_error("element " + std::to_string(i) +
                               " lies in no hyperedge");
    if (first) {
      lo = hi = d;
      first = false;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return {lo, hi};
}

bool Hypergraph::covers_ground() const { return first_uncovered() == 0; }

int Hypergraph::first_uncovered() const {
  for (int i = 1; i <= n_; ++i)
    if (degree_[i - 1] == 0) return i;
  return 0;
}

Weighting::Weighting(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw precondition_error("empty weighting");
  for (const auto& v : values_)
    if (v < 0) throw precondition_error("negative weight " + rational_to_string(v));
}

const char* to_string(WeightingClass c) {
  switch (c) {
    case WeightingClass::Covering: return "covering";
    case WeightingClass::Packing: return "packing";
    case WeightingClass::Partition: return "partition";
    case WeightingClass::Neither: return "neither";
  }
  return "?";
}

std::vector<Rational> incident_sums(const Hypergraph& h, const Weighting& w) {
  if (w.size() != h.edge_count())
    throw precondition_error("weighting size does not match edge count");
  std::vector<Rational> sums(h.ground_size(), Rational(0));
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (int i : subset_elements(h.edge(j))) sums[i - 1] += w[j];
  return sums;
}

WeightingClass classify_weighting(const Hypergraph& h, const Weighting& w) {
  bool all_ge = true, all_le = true;
  for (const auto& s : incident_sums(h, w)) {
    if (s < 1) all_ge = false;
    if (s > 1) all_le = false;
  }
  if (all_ge && all_le) return WeightingClass::Partition;
  if (all_ge) return WeightingClass::Covering;
  if (all_le) return WeightingClass::Packing;
  return WeightingClass::Neither;
}

namespace {

Weighting degree_weighting(const Hypergraph& h, bool use_min) {
  if (int i = h.first_uncovered())
    throw precondition_error("element " + std::to_string(i) +
                             " lies in no hyperedge");
  std::vector<Rational> w;
  w.reserve(h.edge_count());
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto [lo, hi] = h.degree_range(h.edge(j));
    w.emplace_back(1, use_min ? lo : hi);
  }
  return Weighting(std::move(w));
}

}  // namespace

Weighting degree_covering(const Hypergraph& h) { return degree_weighting(h, true); }

Weighting degree_packing(const Hypergraph& h) { return degree_weighting(h, false); }

bool is_quasiregular(const Hypergraph& h) {
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto [lo, hi] = h.degree_range(h.edge(j));
    if (lo != hi) return false;
  }
  return true;
}

std::vector<RegularClass> quasiregular_decomposition(const Hypergraph& h) {
  if (!is_quasiregular(h)) throw precondition_error("hypergraph is not quasiregular");
  std::map<int, RegularClass> classes;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    int d = h.degree_range(h.edge(j)).first;
    auto& cls = classes[d];
    cls.degree = d;
    cls.vertices |= h.edge(j);
    cls.edge_indices.push_back(j);
  }
  std::vector<RegularClass> out;
  out.reserve(classes.size());
  for (auto& [d, cls] : classes) out.push_back(std::move(cls));
  return out;
}

Hypergraph complement_hypergraph(const Hypergraph& h) {
  std::vector<Subset> edges;
  edges.reserve(h.edge_count());
  const int n = h.ground_size();
  for (Subset s : h.edges()) {
    Subset c = complement_in(s, n);
    if (c == 0)
      throw precondition_error("complement of the full ground set is empty");
    edges.push_back(c);
  }
  return Hypergraph(n, std::move(edges));
}

Weighting dual_weighting(const Hypergraph& h, const Weighting& w) {
  if (w.size() != h.edge_count())
    throw precondition_error("weighting size does not match edge count");
  Rational total = w.total();
  if (total <= 1)
    throw precondition_error("dual weighting needs total weight > 1, got " +
                             rational_to_string(total));
  Rational denom = total - 1;
  std::vector<Rational> dual;
  dual.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) dual.push_back(w[j] / denom);
  return Weighting(std::move(dual));
}

Hypergraph transpose_hypergraph(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > static_cast<std::size_t>(kMaxGroundSize))
    throw precondition_error("transpose needs at most " +
                             std::to_string(kMaxGroundSize) + " edges");
  if (!h.covers_ground())
    throw precondition_error(
        "transpose needs every element covered (element " +
        std::to_string(h.first_uncovered()) + " is not)");
  std::vector<Subset> stars(h.ground_size(), Subset{0});
  for (std::size_t j = 0; j < m; ++j)
    for (int i : subset_elements(h.edge(j)))
      stars[i - 1] |= singleton(static_cast<int>(j) + 1);
  return Hypergraph(static_cast<int>(m), std::move(stars));
}

Hypergraph k_sets(int n, int k) {
  if (k < 1 || k > n) throw precondition_error("k_sets needs 1 <= k <= n");
  std::vector<Subset> edges;
  for (Subset s = 0; s <= full_set(n); ++s)
    if (subset_size(s) == k) edges.push_back(s);
  return Hypergraph(n, std::move(edges));
}

Hypergraph singletons(int n) { return k_sets(n, 1); }

Hypergraph leave_one_out(int n) {
  if (n < 2) throw precondition_error("leave_one_out needs n >= 2");
  return k_sets(n, n - 1);
}

Hypergraph consecutive_sets(int n, int k) {
  if (k < 1 || k > n) throw precondition_error("consecutive_sets needs 1 <= k <= n");
  std::vector<Subset> edges;
  edges.reserve(n);
  for (int j = 1; j <= n; ++j) {
    Subset s = 0;
    for (int i = j; i <= std::min(j + k - 1, n); ++i) s |= singleton(i);
    edges.push_back(s);
  }
  return Hypergraph(n, std::move(edges));
}

WeightedSums weighted_subset_sums(const std::vector<Rational>& a,
                                  const Hypergraph& h, const Weighting& w) {
  if (static_cast<int>(a.size()) != h.ground_size())
    throw precondition_error("vector length does not match ground set");
  for (const auto& v : a)
    if (v < 0) throw precondition_error("weighted_subset_sums needs nonnegative entries");
  if (w.size() != h.edge_count())
    throw precondition_error("weighting size does not match edge count");
  WeightedSums out{Rational(0), rational_sum(a)};
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Rational inner(0);
    for (int i : subset_elements(h.edge(j))) inner += a[i - 1];
    out.weighted += w[j] * inner;
  }
  return out;
}

std::pair<Hypergraph, Weighting> random_fractional_partition(int n,
                                                             std::mt19937_64& rng) {
  if (n < 2) throw precondition_error("random_fractional_partition needs n >= 2");
  std::uniform_int_distribution<int> edge_count_dist(1, 2 * n);
  std::uniform_int_distribution<Subset> mask_dist(1, full_set(n) - 1);
  const int m = edge_count_dist(rng);

  std::vector<Subset> edges;
  for (int t = 0; t < m; ++t) edges.push_back(mask_dist(rng));  // proper, nonempty

  // Random numerators small enough that no element can exceed weight 1 before
  // the singleton top-up: each of the m edges contributes at most 3/(4m).
  const long denom = 4L * m;
  std::uniform_int_distribution<long> numer_dist(0, 3);
  std::vector<Rational> weights;
  std::vector<Rational> incident(n, Rational(0));
  for (int t = 0; t < m; ++t) {
    Rational w(numer_dist(rng), denom);
    w.canonicalize();
    weights.push_back(w);
    for (int i : subset_elements(edges[t])) incident[i - 1] += w;
  }
  for (int i = 1; i <= n; ++i) {
    edges.push_back(singleton(i));
    weights.push_back(Rational(1) - incident[i - 1]);
  }
  return {Hypergraph(n, std::move(edges)), Weighting(std::move(weights))};
}

Hypergraph random_regular_collection(int n, int r, std::mt19937_64& rng) {
  if (n < 2 || r < 1) throw precondition_error("need n >= 2 and r >= 1");
  std::vector<Subset> edges;
  std::uniform_int_distribution<int> block_count_dist(2, n);
  for (int round = 0; round < r; ++round) {
    const int blocks = block_count_dist(rng);
    std::vector<Subset> parts(blocks, 0);
    // Guarantee no empty block: place one element per block first.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> block_dist(0, blocks - 1);
    for (int i = 0; i < n; ++i)
      parts[i < blocks ? i : block_dist(rng)] |= singleton(perm[i]);
    for (Subset b : parts)
      if (b != 0) edges.push_back(b);
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace fracbound
