#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fracbound/hypergraph.hpp"
#include "fracbound/order.hpp"
#include "fracbound/rational.hpp"
#include "fracbound/setfn.hpp"
#include "fracbound/subset.hpp"

namespace fracbound {

enum class EntropyUnits { Nats, Bits };

// A joint distribution of n discrete coordinates with exact rational
// probabilities.  Outcomes are 0-based per coordinate; zero-probability
// entries are dropped at construction; the rest must sum to exactly 1.
class JointDistribution {
 public:
  JointDistribution(std::vector<int> alphabet_sizes,
                    std::vector<std::pair<std::vector<int>, Rational>> pmf);

  int n() const { return static_cast<int>(alphabet_sizes_.size()); }
  const std::vector<int>& alphabet_sizes() const { return alphabet_sizes_; }

  // Support in lexicographic outcome order, probabilities all positive.
  const std::vector<std::pair<std::vector<int>, Rational>>& support() const {
    return support_;
  }

  // Exact marginal on the coordinates of s (ascending): outcomes are the
  // projections, probabilities the exact sums.  marginal(empty) is the
  // one-point distribution on the empty outcome.
  std::vector<std::pair<std::vector<int>, Rational>> marginal(Subset s) const;

 private:
  std::vector<int> alphabet_sizes_;
  std::vector<std::pair<std::vector<int>, Rational>> support_;
};

double units_factor(EntropyUnits units);  // 1 for nats, 1/ln 2 for bits

// Shannon entropy of an exact pmf, in nats unless told otherwise.
double shannon_entropy(const std::vector<std::pair<std::vector<int>, Rational>>& pmf,
                       EntropyUnits units = EntropyUnits::Nats);

double joint_entropy(const JointDistribution& dist, Subset s,
                     EntropyUnits units = EntropyUnits::Nats);

// H(X_s | X_t) = H(X_{s u t}) - H(X_t); s and t must be disjoint.
double conditional_entropy(const JointDistribution& dist, Subset s, Subset t,
                           EntropyUnits units = EntropyUnits::Nats);

// The submodular subset-entropy function s -> H(X_s) in nats.  Values for
// small ground sets are precomputed; larger ones marginalize per call.
SetFunction<double> entropy_set_function(const JointDistribution& dist);

// s -> H(X_s | X_before(s)) under the given order.  NOT submodular in
// general, which is why the ordered bounds cannot be bootstrapped from it.
SetFunction<double> prefix_conditional_entropy_set_function(
    const JointDistribution& dist, const GroundOrder& order);

// sum_i H(X_i | X_everything-else).
double erasure_entropy(const JointDistribution& dist,
                       EntropyUnits units = EntropyUnits::Nats);

// Normalized k-set gaps of the entropy function (coefficient
// 1/binomial(n-1, k-1) over all k-element subsets):
//   total:      averaged sum of H(X_s) minus H(X), the upper-bound gap;
//   dual_total: H(X) minus the averaged sum of H(X_s | X_complement).
// At k = 1 these are the classical total correlation (equal to the
// divergence from the product of marginals) and its erasure-style dual;
// at k = n both vanish.
struct Correlations {
  double total = 0;
  double dual_total = 0;
};

Correlations correlations(const JointDistribution& dist, int k = 1);

// Witness that s -> H(X_s | X_before(s)) fails submodularity: four bits with
// X4 a copy of X2, natural order, s = {1,3}, t = {3,4}.
struct NonSubmodularWitness {
  JointDistribution dist;
  GroundOrder order;
  Subset s = 0, t = 0;
};

NonSubmodularWitness non_submodular_conditional_entropy_example();

// Entropy-power style mixture bound: for a fractional partition w of h,
//   exp(c H(X)/n) <= sum_s w(s) (|s|/n) exp(c H(X_s)/|s|).
// The mixture coefficients w(s)|s|/n sum to exactly 1.
struct EntropyPowerBound {
  double lhs = 0;
  double rhs = 0;
};

EntropyPowerBound entropy_power_bound(const JointDistribution& dist,
                                      const Hypergraph& h, const Weighting& w,
                                      double c = 2.0);

// Averages of exp(c H(X_s)/|s|) over the uniform collections, indexed by the
// number m = 0..n-1 of dropped coordinates (subset size n - m).  The sequence
// is nondecreasing in m.
std::vector<double> entropy_power_sequence(const JointDistribution& dist,
                                           double c = 2.0);

}  // namespace fracbound
