#include "fracbound/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops)
    : n_(n), edges_(std::move(edges)), loop_(n, 0), adj_(n) {
  if (n < 1) throw precondition_error("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw precondition_error("edge endpoint outside 1.." + std::to_string(n));
    if (u == v)
      throw precondition_error("self-edge on vertex " + std::to_string(u) +
                               "; list loops separately");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw precondition_error("duplicate edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (int v : loops) {
    if (v < 1 || v > n)
      throw precondition_error("loop vertex outside 1.." + std::to_string(n));
    loop_[v - 1] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::any_loops() const {
  return std::any_of(loop_.begin(), loop_.end(), [](char c) { return c != 0; });
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return has_loop(u);
  const auto& a = adj_[u - 1];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph complete_graph(int r) {
  if (r < 1) throw precondition_error("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= r; ++u)
    for (int v = u + 1; v <= r; ++v) edges.push_back({u, v});
  return Graph(r, std::move(edges));
}

Graph independence_gadget() { return Graph(2, {{1, 2}}, {1}); }

DegreeOrdering degree_ordering(const Graph& g) {
  const int n = g.vertex_count();
  DegreeOrdering out;
  out.order.resize(n);
  for (int v = 1; v <= n; ++v) out.order[v - 1] = v;
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[out.order[k] - 1] = k;
  out.preceding_neighbors.assign(n, 0);
  for (int v = 1; v <= n; ++v)
    for (int u : g.neighbors(v))
      if (pos[u - 1] < pos[v - 1]) ++out.preceding_neighbors[v - 1];
  return out;
}

std::uint64_t hom_count_exact(const Graph& g, const Graph& f) {
  const int n = g.vertex_count();
  const int m = f.vertex_count();
  double space = std::pow(static_cast<double>(m), n);
  if (space > 1e8)
    throw guard_error("homomorphism search space " + std::to_string(space) +
                      " exceeds the 10^8 guard");

  std::vector<std::vector<int>> placed_neighbors(n);  // earlier-indexed only
  for (int v = 1; v <= n; ++v)
    for (int u : g.neighbors(v))
      if (u < v) placed_neighbors[v - 1].push_back(u);

  std::vector<int> image(n, 0);
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, int v) -> void {
    if (v > n) {
      ++count;
      return;
    }
    for (int w = 1; w <= m; ++w) {
      if (g.has_loop(v) && !f.has_loop(w)) continue;
      bool ok = true;
      for (int u : placed_neighbors[v - 1]) {
        if (!f.adjacent(image[u - 1], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v - 1] = w;
      self(self, v + 1);
    }
  };
  recurse(recurse, 1);
  return count;
}

namespace {

// independent-subset counts via subset DP: table[mask] = number of
// independent sets contained in mask (vertex i of the subgraph <-> bit i).
std::vector<std::uint64_t> independent_subset_table(
    const std::vector<std::uint64_t>& nbr_mask) {
  const int n = static_cast<int>(nbr_mask.size());
  std::vector<std::uint64_t> table(std::size_t(1) << n);
  table[0] = 1;
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);  // mask without v
    table[mask] = table[rest] + table[rest & ~nbr_mask[v]];
  }
  return table;
}

}  // namespace

std::uint64_t independent_sets_exact(const Graph& g) {
  if (g.any_loops())
    throw precondition_error("independent set counting expects a loop-free graph");
  const int n = g.vertex_count();
  if (n > 40) throw guard_error("independent set counting is guarded at 40 vertices");

  if (n <= 20) {
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 1; v <= n; ++v)
      for (int u : g.neighbors(v)) nbr[v - 1] |= std::uint64_t(1) << (u - 1);
    return independent_subset_table(nbr).back();
  }

  // Split enumeration: choose an independent subset of the front block A,
  // then count compatible independent subsets of the back block B by table.
  const int b_size = 20;
  const int a_size = n - b_size;
  std::vector<std::uint64_t> nbr_b(b_size, 0);  // B-internal adjacency
  for (int v = a_size + 1; v <= n; ++v)
    for (int u : g.neighbors(v))
      if (u > a_size) nbr_b[v - a_size - 1] |= std::uint64_t(1) << (u - a_size - 1);
  const auto table = independent_subset_table(nbr_b);

  std::vector<std::uint64_t> a_nbr_a(a_size, 0), a_nbr_b(a_size, 0);
  for (int v = 1; v <= a_size; ++v) {
    for (int u : g.neighbors(v)) {
      if (u <= a_size) a_nbr_a[v - 1] |= std::uint64_t(1) << (u - 1);
      else a_nbr_b[v - 1] |= std::uint64_t(1) << (u - a_size - 1);
    }
  }

  const std::uint64_t all_b = (std::uint64_t(1) << b_size) - 1;
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, int v, std::uint64_t chosen_a,
                     std::uint64_t blocked_b) -> void {
    if (v > a_size) {
      count += table[all_b & ~blocked_b];
      return;
    }
    self(self, v + 1, chosen_a, blocked_b);  // skip v
    if ((chosen_a & a_nbr_a[v - 1]) == 0)    // take v if compatible
      self(self, v + 1, chosen_a | (std::uint64_t(1) << (v - 1)),
           blocked_b | a_nbr_b[v - 1]);
  };
  recurse(recurse, 1, 0, 0);
  return count;
}

mpz_class hom_complete_bipartite(int a, int b, const Graph& f) {
  if (a < 0 || b < 0) throw precondition_error("bipartite sides must be nonnegative");
  if (a > 10000 || b > 10000)
    throw guard_error("bipartite side beyond the 10^4 guard");
  const int m = f.vertex_count();
  if (m > kHomTargetGuard)
    throw guard_error("target graph beyond " + std::to_string(kHomTargetGuard) +
                      " vertices");

  // Group the a-tuples of left images by their set T of distinct values:
  //   |Hom(K_{a,b}, F)| = sum_T surj(a, |T|) * |common neighborhood of T|^b,
  // where the empty T contributes only when a = 0.
  std::vector<std::uint64_t> nbr(m, 0);
  for (int w = 1; w <= m; ++w)
    for (int u = 1; u <= m; ++u)
      if (f.adjacent(w, u)) nbr[w - 1] |= std::uint64_t(1) << (u - 1);

  // surj[t] = number of surjections from an a-element set onto t labels.
  std::vector<mpz_class> surj(m + 1);
  surj[0] = (a == 0) ? 1 : 0;
  for (int t = 1; t <= m; ++t) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(t),
                  static_cast<unsigned long>(a));
    for (int u = 0; u < t; ++u) {
      mpz_class ways;
      mpz_bin_uiui(ways.get_mpz_t(), static_cast<unsigned long>(t),
                   static_cast<unsigned long>(u));
      total -= ways * surj[u];
    }
    surj[t] = total;
  }

  const std::uint64_t all = (m == 64) ? ~std::uint64_t(0)
                                      : (std::uint64_t(1) << m) - 1;
  mpz_class total = 0;
  for (std::uint64_t t_mask = 0; t_mask <= all; ++t_mask) {
    int t = std::popcount(t_mask);
    if (surj[t] == 0) continue;
    std::uint64_t common = all;
    for (std::uint64_t rest = t_mask; rest;) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      common &= nbr[w];
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(),
                  static_cast<unsigned long>(std::popcount(common)),
                  static_cast<unsigned long>(b));
    total += surj[t] * power;
    if (t_mask == all) break;  // avoid wrap when m == 64
  }
  return total;
}

double log2_mpz(const mpz_class& z) {
  if (z < 0) throw precondition_error("log2 of a negative integer");
  if (z == 0) return -std::numeric_limits<double>::infinity();
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

CountBound hom_bound(const Graph& g, const Graph& f) {
  if (g.any_loops())
    throw precondition_error("the degree-ordered bound expects a loop-free source");
  const auto ordering = degree_ordering(g);
  const double log2_target = std::log2(static_cast<double>(f.vertex_count()));
  double log2_total = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) {
      log2_total += log2_target;  // isolated vertex: free choice of image
      continue;
    }
    const int p = ordering.preceding_neighbors[v - 1];
    log2_total += log2_mpz(hom_complete_bipartite(p, p, f)) / d;
  }
  return {log2_total, std::exp2(log2_total)};
}

CountBound independent_set_bound(const Graph& g) {
  if (g.any_loops())
    throw precondition_error("the degree-ordered bound expects a loop-free source");
  const auto ordering = degree_ordering(g);
  double log2_total = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) {
      log2_total += 1.0;  // isolated vertex: in or out
      continue;
    }
    log2_total += static_cast<double>(ordering.preceding_neighbors[v - 1] + 1) / d;
  }
  return {log2_total, std::exp2(log2_total)};
}

CountBound coloring_bound(const Graph& g, int r) {
  if (r < 1) throw precondition_error("coloring bound needs at least one color");
  return hom_bound(g, complete_graph(r));
}

}  // namespace fracbound
