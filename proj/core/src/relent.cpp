#include "fracbound/relent.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

namespace {

void validate_marginals(const std::vector<std::vector<Rational>>& q,
                        const std::vector<int>* expected_sizes) {
  if (q.empty()) throw precondition_error("no reference marginals given");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].empty()) throw precondition_error("empty reference marginal");
    if (expected_sizes &&
        static_cast<int>(q[i].size()) != (*expected_sizes)[i])
      throw precondition_error("reference marginal " + std::to_string(i + 1) +
                               " does not match the coordinate alphabet");
    Rational total(0);
    for (const auto& v : q[i]) {
      if (v < 0) throw precondition_error("negative reference probability");
      total += v;
    }
    if (total != 1)
      throw precondition_error("reference marginal " + std::to_string(i + 1) +
                               " sums to " + rational_to_string(total));
  }
}

}  // namespace

MeasurePair::MeasurePair(JointDistribution p,
                         std::vector<std::vector<Rational>> q_marginals)
    : p_(std::move(p)), q_marginals_(std::move(q_marginals)) {
  if (static_cast<int>(q_marginals_.size()) != p_.n())
    throw precondition_error("reference marginal count does not match coordinates");
  const auto sizes = p_.alphabet_sizes();
  validate_marginals(q_marginals_, &sizes);
  for (const auto& [x, prob] : p_.support())
    for (int i = 0; i < p_.n(); ++i)
      if (q_marginals_[i][x[i]] == 0)
        throw precondition_error(
            "reference measure vanishes on a support symbol of coordinate " +
            std::to_string(i + 1));
}

Rational MeasurePair::q_prob(const std::vector<int>& outcome, Subset s) const {
  Rational q(1);
  for (int i : subset_elements(s)) q *= q_marginals_[i - 1][outcome[i - 1]];
  return q;
}

double relative_entropy(const MeasurePair& pair, Subset s) {
  if ((s & ~full_set(pair.n())) != 0)
    throw precondition_error("subset leaves the coordinate range");
  if (s == 0) return 0.0;
  const auto coords = subset_elements(s);
  double d = 0;
  for (const auto& [xs, p] : pair.p().marginal(s)) {
    Rational q(1);
    for (std::size_t k = 0; k < coords.size(); ++k)
      q *= pair.q_marginals()[coords[k] - 1][xs[k]];
    d += to_double(p) * (std::log(to_double(p)) - std::log(to_double(q)));
  }
  // Exact-match marginals can leave a tiny negative residue.
  if (d < 0 && d > -1e-12) d = 0;
  return d;
}

double conditional_relative_entropy(const MeasurePair& pair, Subset s, Subset t) {
  if ((s & t) != 0)
    throw precondition_error("conditional divergence needs disjoint subsets");
  return relative_entropy(pair, s | t) - relative_entropy(pair, t);
}

SetFunction<double> negated_divergence_set_function(const MeasurePair& pair) {
  const int n = pair.n();
  auto shared = std::make_shared<MeasurePair>(pair);
  const double work =
      std::ldexp(static_cast<double>(shared->p().support().size()), n);
  if (n <= kEnumerationGuard && work <= 5e7) {
    auto table = std::make_shared<std::vector<double>>(std::size_t(1) << n);
    for (Subset s = 0; s <= full_set(n); ++s)
      (*table)[s] = -relative_entropy(*shared, s);
    return {n, [table](Subset s) { return (*table)[s]; }};
  }
  return {n, [shared](Subset s) { return -relative_entropy(*shared, s); }};
}

DivergenceBounds divergence_bounds(const MeasurePair& pair, const Hypergraph& h,
                                   const Weighting& w, const GroundOrder& order) {
  if (pair.n() != h.ground_size())
    throw precondition_error("measure pair and hypergraph sizes differ");
  if (classify_weighting(h, w) != WeightingClass::Partition)
    throw precondition_error("divergence bounds need a fractional partition");
  auto neg = negated_divergence_set_function(pair);
  DivergenceBounds out;
  // The sandwich flips sign against the submodular -d: what bounds -d from
  // above bounds d from below.
  out.lower = -strong_upper_bound(neg, h, w, order);
  out.upper = -strong_lower_bound(neg, h, w, order);
  out.divergence = -neg(full_set(pair.n()));
  return out;
}

namespace {

struct ProductSpace {
  std::vector<int> sizes;
  std::vector<std::size_t> stride;  // last coordinate fastest
  std::size_t total = 1;

  explicit ProductSpace(const std::vector<std::vector<Rational>>& q) {
    const std::size_t guard = 1'000'000;
    sizes.reserve(q.size());
    for (const auto& m : q) sizes.push_back(static_cast<int>(m.size()));
    stride.assign(sizes.size(), 1);
    for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i)
      stride[i] = stride[i + 1] * sizes[i + 1];
    for (int sz : sizes) {
      total *= sz;
      if (total > guard)
        throw guard_error("product space exceeds the 10^6 point guard");
    }
  }
};

double ent_term(double mass, double mean_g, double mean_glng) {
  // Ent contribution Q(cell) * (E[g ln g] - E[g] ln E[g]) for one cell.
  return mass * (mean_glng - mean_g * std::log(mean_g));
}

}  // namespace

TensorizationCheck tensorization_check(
    const std::vector<std::vector<Rational>>& q_marginals,
    const std::vector<double>& g, const Hypergraph& h) {
  validate_marginals(q_marginals, nullptr);
  const int n = static_cast<int>(q_marginals.size());
  if (n != h.ground_size())
    throw precondition_error("marginal count does not match the ground set");

  auto [lo, hi] = [&] {
    int mn = h.degree(1), mx = h.degree(1);
    for (int i = 2; i <= n; ++i) {
      mn = std::min(mn, h.degree(i));
      mx = std::max(mx, h.degree(i));
    }
    return std::pair<int, int>{mn, mx};
  }();
  if (lo != hi || lo < 1)
    throw precondition_error("tensorization needs an r-regular hypergraph");
  const int r = lo;

  ProductSpace space(q_marginals);
  if (g.size() != space.total)
    throw precondition_error("function length " + std::to_string(g.size()) +
                             " does not match the product space (" +
                             std::to_string(space.total) + " points)");
  for (double v : g)
    if (!(v > 0)) throw precondition_error("tensorization needs strictly positive g");

  // Per-coordinate probabilities as doubles, digit views of every index.
  std::vector<std::vector<double>> q(n);
  for (int i = 0; i < n; ++i)
    for (const auto& v : q_marginals[i]) q[i].push_back(to_double(v));

  std::vector<int> digits(n, 0);
  std::vector<double> q_full(space.total);
  std::vector<std::vector<int>> digit_table(space.total, std::vector<int>(n));
  for (std::size_t idx = 0; idx < space.total; ++idx) {
    double prob = 1;
    for (int i = 0; i < n; ++i) prob *= q[i][digits[i]];
    q_full[idx] = prob;
    digit_table[idx] = digits;
    for (int i = n - 1; i >= 0; --i) {  // odometer, last coordinate fastest
      if (++digits[i] < space.sizes[i]) break;
      digits[i] = 0;
    }
  }

  TensorizationCheck out;
  out.regularity = r;

  double mean_g = 0, mean_glng = 0;
  for (std::size_t idx = 0; idx < space.total; ++idx) {
    mean_g += q_full[idx] * g[idx];
    mean_glng += q_full[idx] * g[idx] * std::log(g[idx]);
  }
  out.lhs = mean_glng - mean_g * std::log(mean_g);

  std::vector<double> cell_g(space.total), cell_glng(space.total);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    const Subset s = h.edge(j);
    std::fill(cell_g.begin(), cell_g.end(), 0.0);
    std::fill(cell_glng.begin(), cell_glng.end(), 0.0);
    for (std::size_t idx = 0; idx < space.total; ++idx) {
      const auto& d = digit_table[idx];
      double qs = 1;
      std::size_t cell = idx;
      for (int i : subset_elements(s)) {
        qs *= q[i - 1][d[i - 1]];
        cell -= d[i - 1] * space.stride[i - 1];
      }
      cell_g[cell] += qs * g[idx];
      cell_glng[cell] += qs * g[idx] * std::log(g[idx]);
    }
    for (std::size_t cell = 0; cell < space.total; ++cell) {
      if (cell_g[cell] == 0) continue;  // not a valid cell for this edge
      const auto& d = digit_table[cell];
      double q_rest = 1;
      for (int i = 1; i <= n; ++i)
        if (!contains(s, i)) q_rest *= q[i - 1][d[i - 1]];
      out.rhs += ent_term(q_rest, cell_g[cell], cell_glng[cell]);
    }
  }
  out.rhs /= r;
  return out;
}

}  // namespace fracbound
