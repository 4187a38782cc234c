#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "fracbound/rational.hpp"
#include "fracbound/subset.hpp"

namespace fracbound {

// A finite hypergraph on ground set {1, ..., n}: an ordered list of nonempty
// hyperedges.  Duplicate edges are allowed and kept positionally, since
// weights attach to positions.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<Subset> edges);

  // Convenience constructor from 1-based index lists.
  static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges);

  int ground_size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  Subset edge(std::size_t j) const { return edges_[j]; }
  const std::vector<Subset>& edges() const { return edges_; }

  // Number of hyperedges containing element i.
  int degree(int i) const { return degree_[i - 1]; }

  // Smallest / largest degree over the elements of s.  s must be nonempty and
  // each of its elements must lie in at least one edge.
  std::pair<int, int> degree_range(Subset s) const;

  // True when every element of the ground set lies in at least one edge.
  bool covers_ground() const;

  // First element with degree 0, or 0 if none.
  int first_uncovered() const;

 private:
  int n_;
  std::vector<Subset> edges_;
  std::vector<int> degree_;
};

// Nonnegative weights, one per hyperedge position.
class Weighting {
 public:
  explicit Weighting(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t j) const { return values_[j]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational total() const { return rational_sum(values_); }

 private:
  std::vector<Rational> values_;
};

// Incidence classification of a weighting against a hypergraph:
//   Covering:  sum of weights over edges containing i is >= 1 for every i
//   Packing:   ... <= 1 for every i
//   Partition: ... == 1 for every i
//   Neither:   some element sums above 1 and another below 1
enum class WeightingClass { Covering, Packing, Partition, Neither };

const char* to_string(WeightingClass c);

// Exact per-element incident weight sums (index i-1 holds the sum for i).
std::vector<Rational> incident_sums(const Hypergraph& h, const Weighting& w);

WeightingClass classify_weighting(const Hypergraph& h, const Weighting& w);

// Canonical covering weights 1 / min-degree(s) per edge.  Requires every
// element covered.
Weighting degree_covering(const Hypergraph& h);

// Canonical packing weights 1 / max-degree(s) per edge.  Requires every
// element covered.
Weighting degree_packing(const Hypergraph& h);

// True when the element degree is constant on every hyperedge (in which case
// degree_covering and degree_packing coincide and form a partition).
bool is_quasiregular(const Hypergraph& h);

// For a quasiregular hypergraph, the covered ground set splits into classes
// of constant degree; each edge lies inside exactly one class.
struct RegularClass {
  Subset vertices = 0;
  int degree = 0;
  std::vector<std::size_t> edge_indices;
};

std::vector<RegularClass> quasiregular_decomposition(const Hypergraph& h);

// The hypergraph whose j-th edge is the complement of the j-th edge of h.
// Every edge of h must be a proper subset of the ground set.
Hypergraph complement_hypergraph(const Hypergraph& h);

// Weights for the complement hypergraph: value[j] = w[j] / (total(w) - 1).
// Requires total(w) > 1.  Maps coverings to packings and vice versa, fixes
// partitions, and is an exact involution.
Weighting dual_weighting(const Hypergraph& h, const Weighting& w);

// Swap the roles of elements and edges: the transpose has one element per
// edge of h and, for each element i of h, the edge {j : i in edge j of h}
// (1-based edge indices).  Requires every element of h to be covered and
// at most kMaxGroundSize edges.
Hypergraph transpose_hypergraph(const Hypergraph& h);

// ---- stock collections -------------------------------------------------

// All k-element subsets of {1..n}, in lexicographic order of their masks.
Hypergraph k_sets(int n, int k);

// {1}, {2}, ..., {n}.
Hypergraph singletons(int n);

// All (n-1)-element subsets, i.e. complements of singletons.
Hypergraph leave_one_out(int n);

// Windows {j, ..., min(j+k-1, n)} for j = 1..n (the trailing windows are
// truncated, so there are always n edges).
Hypergraph consecutive_sets(int n, int k);

// ---- additivity sums ----------------------------------------------------

// For a nonnegative vector a (index i-1 holds a_i), the weighted sum
// sum_s w(s) * sum_{i in s} a_i together with sum_i a_i.  The weighted sum
// compares against the total according to the weighting class.
struct WeightedSums {
  Rational weighted;
  Rational total;
};

WeightedSums weighted_subset_sums(const std::vector<Rational>& a,
                                  const Hypergraph& h, const Weighting& w);

// ---- random instances ---------------------------------------------------

// A random hypergraph of proper nonempty subsets plus all singletons, with
// exact rational weights whose incident sums are 1 everywhere (top-up on the
// singleton edges).  Total weight is strictly above 1.  Deterministic in rng.
std::pair<Hypergraph, Weighting> random_fractional_partition(int n,
                                                             std::mt19937_64& rng);

// Union of r random set-partitions of {1..n} (each with at least two blocks):
// every element has degree exactly r, all edges are proper subsets, and the
// edge count exceeds r.  Deterministic in rng.
Hypergraph random_regular_collection(int n, int r, std::mt19937_64& rng);

}  // namespace fracbound
