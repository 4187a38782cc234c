#include "fracbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

JointDistribution::JointDistribution(
    std::vector<int> alphabet_sizes,
    std::vector<std::pair<std::vector<int>, Rational>> pmf)
    : alphabet_sizes_(std::move(alphabet_sizes)) {
  const int n = static_cast<int>(alphabet_sizes_.size());
  if (n < 1 || n > kMaxGroundSize)
    throw precondition_error("distribution needs between 1 and 63 coordinates");
  for (int a : alphabet_sizes_)
    if (a < 1) throw precondition_error("alphabet sizes must be positive");

  std::map<std::vector<int>, Rational> acc;
  for (auto& [x, p] : pmf) {
    if (static_cast<int>(x.size()) != n)
      throw precondition_error("outcome arity does not match coordinate count");
    for (int i = 0; i < n; ++i)
      if (x[i] < 0 || x[i] >= alphabet_sizes_[i])
        throw precondition_error("outcome symbol out of alphabet range");
    if (p < 0) throw precondition_error("negative probability");
    if (p == 0) continue;
    auto [it, inserted] = acc.emplace(x, p);
    if (!inserted)
      throw precondition_error("duplicate outcome in pmf");
  }
  if (acc.empty()) throw precondition_error("empty support");
  Rational total(0);
  for (auto& [x, p] : acc) total += p;
  if (total != 1)
    throw precondition_error("probabilities sum to " + rational_to_string(total) +
                             ", expected 1");
  support_.assign(acc.begin(), acc.end());
}

std::vector<std::pair<std::vector<int>, Rational>> JointDistribution::marginal(
    Subset s) const {
  const auto coords = subset_elements(s);
  std::map<std::vector<int>, Rational> acc;
  for (const auto& [x, p] : support_) {
    std::vector<int> key;
    key.reserve(coords.size());
    for (int i : coords) key.push_back(x[i - 1]);
    acc[key] += p;
  }
  return {acc.begin(), acc.end()};
}

double units_factor(EntropyUnits units) {
  return units == EntropyUnits::Nats ? 1.0 : 1.0 / std::log(2.0);
}

double shannon_entropy(const std::vector<std::pair<std::vector<int>, Rational>>& pmf,
                       EntropyUnits units) {
  double h = 0;
  for (const auto& [x, p] : pmf) {
    if (p == 0) continue;
    double pd = to_double(p);
    h -= pd * std::log(pd);
  }
  // Clamp the tiny negative drift a one-point pmf can produce.
  if (h < 0 && h > -1e-15) h = 0;
  return h * units_factor(units);
}

double joint_entropy(const JointDistribution& dist, Subset s, EntropyUnits units) {
  if ((s & ~full_set(dist.n())) != 0)
    throw precondition_error("subset leaves the coordinate range");
  return shannon_entropy(dist.marginal(s), units);
}

double conditional_entropy(const JointDistribution& dist, Subset s, Subset t,
                           EntropyUnits units) {
  if ((s & t) != 0) throw precondition_error("conditional entropy needs disjoint subsets");
  return joint_entropy(dist, s | t, units) - joint_entropy(dist, t, units);
}

SetFunction<double> entropy_set_function(const JointDistribution& dist) {
  const int n = dist.n();
  auto shared = std::make_shared<JointDistribution>(dist);
  // Precompute every subset entropy when that is cheap; fall back to
  // marginalizing on demand for large ground sets.
  const double work = std::ldexp(static_cast<double>(shared->support().size()), n);
  if (n <= kEnumerationGuard && work <= 5e7) {
    auto table = std::make_shared<std::vector<double>>(std::size_t(1) << n);
    for (Subset s = 0; s <= full_set(n); ++s)
      (*table)[s] = shannon_entropy(shared->marginal(s));
    return {n, [table](Subset s) { return (*table)[s]; }};
  }
  return {n, [shared](Subset s) { return shannon_entropy(shared->marginal(s)); }};
}

SetFunction<double> prefix_conditional_entropy_set_function(
    const JointDistribution& dist, const GroundOrder& order) {
  auto f = entropy_set_function(dist);
  auto ord = std::make_shared<GroundOrder>(order);
  return {dist.n(), [f, ord](Subset s) -> double {
            if (s == 0) return 0.0;
            Subset t = ord->before(s);
            return f(s | t) - f(t);
          }};
}

double erasure_entropy(const JointDistribution& dist, EntropyUnits units) {
  const int n = dist.n();
  auto f = entropy_set_function(dist);
  double total = 0;
  for (int i = 1; i <= n; ++i)
    total += f(full_set(n)) - f(complement_in(singleton(i), n));
  return total * units_factor(units);
}

Correlations correlations(const JointDistribution& dist, int k) {
  const int n = dist.n();
  if (k < 1 || k > n) throw precondition_error("correlations needs 1 <= k <= n");
  auto f = entropy_set_function(dist);
  const double full = f(full_set(n));
  double sum_values = 0, sum_conditionals = 0;
  for (Subset s = 1; s <= full_set(n); ++s) {
    if (subset_size(s) != k) continue;
    sum_values += f(s);
    sum_conditionals += full - f(complement_in(s, n));
  }
  const double coeff = 1.0 / to_double(Rational(binomial(n - 1, k - 1)));
  return {coeff * sum_values - full, full - coeff * sum_conditionals};
}

NonSubmodularWitness non_submodular_conditional_entropy_example() {
  // Four bits: X1, X2, X3 independent and fair, X4 = X2.
  std::vector<std::pair<std::vector<int>, Rational>> pmf;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        pmf.push_back({{a, b, c, b}, Rational(1, 8)});
  JointDistribution dist({2, 2, 2, 2}, std::move(pmf));
  return {std::move(dist), GroundOrder::natural(4), make_subset({1, 3}),
          make_subset({3, 4})};
}

EntropyPowerBound entropy_power_bound(const JointDistribution& dist,
                                      const Hypergraph& h, const Weighting& w,
                                      double c) {
  if (dist.n() != h.ground_size())
    throw precondition_error("distribution and hypergraph sizes differ");
  if (classify_weighting(h, w) != WeightingClass::Partition)
    throw precondition_error("entropy power bound needs a fractional partition");
  if (!(c > 0)) throw precondition_error("entropy power exponent must be positive");

  const int n = dist.n();
  auto f = entropy_set_function(dist);
  EntropyPowerBound out;
  out.lhs = std::exp(c * f(full_set(n)) / n);
  Rational coeff_total(0);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Subset s = h.edge(j);
    Rational coeff = w[j] * subset_size(s) / n;
    coeff_total += coeff;
    out.rhs += to_double(coeff) * std::exp(c * f(s) / subset_size(s));
  }
  if (coeff_total != 1)
    throw precondition_error("mixture coefficients do not sum to 1");
  return out;
}

std::vector<double> entropy_power_sequence(const JointDistribution& dist, double c) {
  const int n = dist.n();
  if (n > kEnumerationGuard)
    throw guard_error("ground set of size " + std::to_string(n) +
                      " exceeds the enumeration guard");
  if (!(c > 0)) throw precondition_error("entropy power exponent must be positive");
  auto f = entropy_set_function(dist);

  std::vector<double> sums(n + 1, 0.0);
  for (Subset s = 1; s <= full_set(n); ++s) {
    int k = subset_size(s);
    sums[k] += std::exp(c * f(s) / k);
  }
  std::vector<double> out;
  for (int m = 0; m <= n - 1; ++m) {
    int k = n - m;
    out.push_back(sums[k] / to_double(binomial(n, k)));
  }
  return out;
}

}  // namespace fracbound
