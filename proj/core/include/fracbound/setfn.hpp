#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fracbound/errors.hpp"
#include "fracbound/hypergraph.hpp"
#include "fracbound/order.hpp"
#include "fracbound/rational.hpp"
#include "fracbound/subset.hpp"

namespace fracbound {

// A real- or rational-valued function on subsets of {1..n} with f(empty) = 0.
// The bound machinery below is generic over the value type so that purely
// combinatorial checks can run exactly while entropy-like backends use double.
template <class V>
struct SetFunction {
  int n = 0;
  std::function<V(Subset)> eval;

  V operator()(Subset s) const { return eval(s); }
};

// Comparison slack per value type: exact types compare exactly, floating
// values get a fixed absolute tolerance (entropies here are O(10) nats, so an
// absolute slack is appropriate).
template <class V>
constexpr V value_slack() { return V(0); }

template <>
constexpr double value_slack<double>() { return 1e-9; }

inline double scale_by(double v, const Rational& c) { return v * to_double(c); }
inline Rational scale_by(const Rational& v, const Rational& c) { return v * c; }

inline constexpr int kEnumerationGuard = 20;

namespace detail {

inline void check_enumeration_size(int n, bool override_guard) {
  if (n > kEnumerationGuard && !override_guard)
    throw guard_error("ground set of size " + std::to_string(n) +
                      " exceeds the enumeration guard (" +
                      std::to_string(kEnumerationGuard) + ")");
}

template <class V>
std::vector<V> tabulate(const SetFunction<V>& f) {
  std::vector<V> table(std::size_t(1) << f.n);
  for (Subset s = 0; s <= full_set(f.n); ++s) table[s] = f(s);
  return table;
}

}  // namespace detail

// f(s | t) = f(s u t) - f(t) for disjoint s, t.
template <class V>
V conditional(const SetFunction<V>& f, Subset s, Subset t) {
  if ((s & t) != 0) throw precondition_error("conditional() needs disjoint subsets");
  return f(s | t) - f(t);
}

// Exhaustive submodularity check: f(s) + f(t) >= f(s|t) + f(s&t) for all
// pairs, enumerated in increasing (s, t) mask order; the first violating pair
// is reported.  Cost is 4^n, guarded at n <= kEnumerationGuard unless
// overridden.
template <class V>
struct SubmodularityWitness {
  bool submodular = true;
  Subset s = 0, t = 0;
  V violation{};  // f(s|t) + f(s&t) - f(s) - f(t) at the witness, if any
};

template <class V>
SubmodularityWitness<V> is_submodular(const SetFunction<V>& f,
                                      bool override_guard = false) {
  detail::check_enumeration_size(f.n, override_guard);
  const auto table = detail::tabulate(f);
  const V slack = value_slack<V>();
  for (Subset s = 0; s <= full_set(f.n); ++s) {
    for (Subset t = 0; t <= full_set(f.n); ++t) {
      V lhs = table[s] + table[t];
      V rhs = table[s | t] + table[s & t];
      if (rhs - lhs > slack) return {false, s, t, rhs - lhs};
    }
  }
  return {};
}

// sum_k f(pi_k | {pi_1..pi_{k-1}}); equals f(full) for every order.
template <class V>
V chain_rule_sum(const SetFunction<V>& f, const GroundOrder& order) {
  V total{};
  for (int k = 0; k < order.n(); ++k)
    total = total + conditional(f, singleton(order.element_at(k)), order.prefix(k));
  return total;
}

// True when f is nondecreasing along the prefixes of the given order.  This
// is the extra hypothesis that licenses covering/packing weights (rather than
// exact partitions) in the ordered bounds.
template <class V>
bool prefix_nondecreasing(const SetFunction<V>& f, const GroundOrder& order) {
  const V slack = value_slack<V>();
  V prev{};
  for (int k = 1; k <= order.n(); ++k) {
    V cur = f(order.prefix(k));
    if (prev - cur > slack) return false;
    prev = cur;
  }
  return true;
}

namespace detail {

template <class V>
void require_side(const SetFunction<V>& f, const Hypergraph& h, const Weighting& w,
                  const GroundOrder* order, bool upper) {
  if (f.n != h.ground_size())
    throw precondition_error("set function and hypergraph sizes differ");
  WeightingClass cls = classify_weighting(h, w);
  if (cls == WeightingClass::Partition) return;
  const bool licensed =
      upper ? cls == WeightingClass::Covering : cls == WeightingClass::Packing;
  if (!licensed)
    throw precondition_error(std::string("weighting classifies as ") + to_string(cls) +
                             ", but the " + (upper ? "upper" : "lower") +
                             " bound needs a " + (upper ? "covering" : "packing") +
                             " or partition");
  // Coverings/packings that are not partitions additionally need the function
  // to be nondecreasing along prefixes; check against the supplied order (or
  // the natural order for the order-free weak forms).
  GroundOrder natural = GroundOrder::natural(f.n);
  if (!prefix_nondecreasing(f, order ? *order : natural))
    throw precondition_error("non-partition weighting needs prefix-nondecreasing f");
}

}  // namespace detail

// Ordered upper bound: sum_s w(s) * f(s | before(s)) >= f(full) for
// submodular f, when w is a fractional partition (or a covering and f is
// prefix-nondecreasing).
template <class V>
V strong_upper_bound(const SetFunction<V>& f, const Hypergraph& h,
                     const Weighting& w, const GroundOrder& order) {
  detail::require_side(f, h, w, &order, /*upper=*/true);
  V total{};
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Subset s = h.edge(j);
    total = total + scale_by(conditional(f, s, order.before(s)), w[j]);
  }
  return total;
}

// Ordered lower bound: sum_s w(s) * f(s | complement(s) minus after(s))
// <= f(full) under the dual hypotheses.
template <class V>
V strong_lower_bound(const SetFunction<V>& f, const Hypergraph& h,
                     const Weighting& w, const GroundOrder& order) {
  detail::require_side(f, h, w, &order, /*upper=*/false);
  const int n = f.n;
  V total{};
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Subset s = h.edge(j);
    Subset t = complement_in(s, n) & ~order.after(s);
    total = total + scale_by(conditional(f, s, t), w[j]);
  }
  return total;
}

// Order-free forms: sum_s w(s) f(s) above, sum_s w(s) f(s | complement(s))
// below.  Wider gaps, no order bookkeeping.
template <class V>
V weak_upper_bound(const SetFunction<V>& f, const Hypergraph& h, const Weighting& w) {
  detail::require_side(f, h, w, nullptr, /*upper=*/true);
  V total{};
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    total = total + scale_by(f(h.edge(j)), w[j]);
  return total;
}

template <class V>
V weak_lower_bound(const SetFunction<V>& f, const Hypergraph& h, const Weighting& w) {
  detail::require_side(f, h, w, nullptr, /*upper=*/false);
  const int n = f.n;
  V total{};
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Subset s = h.edge(j);
    total = total + scale_by(conditional(f, s, complement_in(s, n)), w[j]);
  }
  return total;
}

// Both ordered bounds under the canonical degree weightings (1/min-degree
// above, 1/max-degree below).  For quasiregular hypergraphs the two
// weightings coincide in a fractional partition and the sandwich is tight in
// the regular cases.
template <class V>
struct DegreeBounds {
  V lower{}, exact{}, upper{};
  Weighting lower_weighting, upper_weighting;
};

template <class V>
DegreeBounds<V> degree_form_bounds(const SetFunction<V>& f, const Hypergraph& h,
                                   const GroundOrder& order) {
  Weighting up = degree_covering(h);
  Weighting down = degree_packing(h);
  DegreeBounds<V> out{strong_lower_bound(f, h, down, order), f(full_set(f.n)),
                      strong_upper_bound(f, h, up, order), down, up};
  return out;
}

// The two normalized bound gaps that the complement construction exchanges:
//   upper gap / total(w)  on (h, w)  ==  lower gap / total(dual w)  on the
// complement hypergraph with the dual weighting, for submodular f and any
// fractional partition w with total weight > 1 and proper edges.
template <class V>
struct NormalizedGapPair {
  V upper_side{};  // (sum_s w(s) f(s) - f(full)) / total(w)
  V lower_side{};  // (f(full) - sum weak lower on complement) / total(dual)
};

template <class V>
NormalizedGapPair<V> gap_duality_pair(const SetFunction<V>& f, const Hypergraph& h,
                                      const Weighting& w) {
  if (classify_weighting(h, w) != WeightingClass::Partition)
    throw precondition_error("gap duality needs a fractional partition");
  const V full = f(full_set(f.n));
  Hypergraph hc = complement_hypergraph(h);
  Weighting wd = dual_weighting(h, w);

  V upper_gap = weak_upper_bound(f, h, w) - full;
  V lower_gap = full - weak_lower_bound(f, hc, wd);

  Rational tw = w.total();
  Rational td = wd.total();
  return {scale_by(upper_gap, 1 / tw), scale_by(lower_gap, 1 / td)};
}

// Normalized weak-form gaps over the k-uniform collections, k = 1..n:
//   upper[k-1] = (1/deg_k) sum_{|s|=k} f(s)              - f(full)
//   lower[k-1] = f(full) - (1/deg_k) sum_{|s|=k} f(s | complement(s))
// with deg_k = C(n-1, k-1).  For submodular f with f(empty) = 0 both
// sequences are nonnegative, nonincreasing in k, and end at exactly 0.
template <class V>
struct GapSequences {
  std::vector<V> upper, lower;
};

template <class V>
GapSequences<V> uniform_gap_sequences(const SetFunction<V>& f,
                                      bool override_guard = false) {
  detail::check_enumeration_size(f.n, override_guard);
  const int n = f.n;
  const auto table = detail::tabulate(f);
  const V full = table[full_set(n)];

  std::vector<V> sum_plain(n + 1, V{}), sum_cond(n + 1, V{});
  for (Subset s = 1; s <= full_set(n); ++s) {
    int k = subset_size(s);
    sum_plain[k] = sum_plain[k] + table[s];
    sum_cond[k] = sum_cond[k] + (full - table[complement_in(s, n)]);
  }

  GapSequences<V> out;
  for (int k = 1; k <= n; ++k) {
    Rational inv_deg = 1 / binomial(n - 1, k - 1);
    out.upper.push_back(scale_by(sum_plain[k], inv_deg) - full);
    out.lower.push_back(full - scale_by(sum_cond[k], inv_deg));
  }
  return out;
}

// Randomized sanity check of fractional subadditivity: draws `trials` random
// fractional partitions and verifies the weak sandwich around f(full).
// Returns the first violating trial index, or -1 when all pass.
template <class V>
int fractional_subadditivity_check(const SetFunction<V>& f, int trials,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const V slack = value_slack<V>();
  const V full = f(full_set(f.n));
  for (int t = 0; t < trials; ++t) {
    auto [h, w] = random_fractional_partition(f.n, rng);
    V hi = weak_upper_bound(f, h, w);
    V lo = weak_lower_bound(f, h, w);
    if (full - hi > slack || lo - full > slack) return t;
  }
  return -1;
}

}  // namespace fracbound
