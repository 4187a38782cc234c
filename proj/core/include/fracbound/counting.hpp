#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fracbound {

// A finite undirected graph with optional loops, vertices 1..n.  Loops are
// listed separately from the simple edges; degree() counts distinct proper
// neighbors only.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_loop(int v) const { return loop_[v - 1]; }
  bool any_loops() const;
  int degree(int v) const { return static_cast<int>(adj_[v - 1].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }

  // Adjacency including loops (a looped vertex is adjacent to itself).
  bool adjacent(int u, int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> loop_;
  std::vector<std::vector<int>> adj_;
};

// Target graphs for the inclusion-exclusion count are capped here: the sum
// ranges over all subsets of V(F).
inline constexpr int kHomTargetGuard = 20;

Graph complete_graph(int r);

// The two-vertex target whose homomorphism counts enumerate independent
// sets: vertex 1 is looped ("outside"), vertex 2 is not ("inside").
Graph independence_gadget();

// Vertices sorted by decreasing degree (ties by ascending label), and for
// each vertex the number of its neighbors that precede it in that order.
// The preceding-neighbor counts always sum to the edge count.
struct DegreeOrdering {
  std::vector<int> order;                // position -> vertex
  std::vector<int> preceding_neighbors;  // vertex-1 -> p(v)
};

DegreeOrdering degree_ordering(const Graph& g);

// Exact number of homomorphisms G -> F by backtracking.  Guarded when
// |V(F)|^|V(G)| exceeds 10^8 candidate maps.
std::uint64_t hom_count_exact(const Graph& g, const Graph& f);

// Exact number of independent vertex sets (loop-free graphs only); subset
// dynamic programming up to 20 vertices, split enumeration up to 40.
std::uint64_t independent_sets_exact(const Graph& g);

// Exact |Hom(K_{a,b}, F)| via neighborhood inclusion-exclusion, as a big
// integer (the values enter the degree-ordered bound through logarithms).
mpz_class hom_complete_bipartite(int a, int b, const Graph& f);

// log2 of a nonnegative big integer; -infinity for zero.
double log2_mpz(const mpz_class& z);

// A counting upper bound, carried in the log2 domain (the raw value can
// overflow double only in contrived cases; it is exp2 of the log value).
struct CountBound {
  double log2_value = 0;
  double value = 0;
};

// Degree-ordered product bound on |Hom(G, F)| for loop-free G:
//   prod over non-isolated v of |Hom(K_{p(v),p(v)}, F)|^{1/d(v)},
// times |V(F)| per isolated vertex.
CountBound hom_bound(const Graph& g, const Graph& f);

// Specialization to the independence gadget:
//   log2 bound = sum over non-isolated v of (p(v)+1)/d(v), plus 1 per
// isolated vertex.
CountBound independent_set_bound(const Graph& g);

// Specialization to F = complete graph on r labels (proper r-colorings).
CountBound coloring_bound(const Graph& g, int r);

}  // namespace fracbound
