#pragma once

#include <utility>
#include <vector>

#include "fracbound/entropy.hpp"
#include "fracbound/hypergraph.hpp"
#include "fracbound/order.hpp"
#include "fracbound/rational.hpp"
#include "fracbound/setfn.hpp"

namespace fracbound {

// A joint distribution P together with a product reference measure Q given by
// per-coordinate marginals.  Absolute continuity of every P-marginal against
// the matching Q-marginal is checked at construction (each coordinate symbol
// appearing in the support of P must carry positive Q-mass), which keeps
// every subset divergence finite.
class MeasurePair {
 public:
  MeasurePair(JointDistribution p, std::vector<std::vector<Rational>> q_marginals);

  const JointDistribution& p() const { return p_; }
  const std::vector<std::vector<Rational>>& q_marginals() const { return q_marginals_; }
  int n() const { return p_.n(); }

  // Product reference probability of one outcome restricted to s.
  Rational q_prob(const std::vector<int>& outcome, Subset s) const;

 private:
  JointDistribution p_;
  std::vector<std::vector<Rational>> q_marginals_;
};

// D(P_s || Q_s) in nats; zero on the empty set.
double relative_entropy(const MeasurePair& pair, Subset s);

// d(s | t) = d(s u t) - d(t) with d(s) = D(P_s || Q_s); grows when more is
// conditioned on, mirroring (with the opposite sign) how entropy shrinks.
double conditional_relative_entropy(const MeasurePair& pair, Subset s, Subset t);

// s -> -D(P_s || Q_s): submodular, zero on the empty set, so the whole
// ordered-bound machinery applies to it directly.
SetFunction<double> negated_divergence_set_function(const MeasurePair& pair);

// Reversed sandwich for a fractional partition w and order:
//   lower  = sum_s w(s) d(s | before(s))            <= D(P || Q)
//   upper  = sum_s w(s) d(s | complement minus after) >= D(P || Q)
struct DivergenceBounds {
  double lower = 0;
  double divergence = 0;
  double upper = 0;
};

DivergenceBounds divergence_bounds(const MeasurePair& pair, const Hypergraph& h,
                                   const Weighting& w, const GroundOrder& order);

// Entropy functional Ent_Q(g) = E_Q[g ln g] - (E_Q g) ln(E_Q g) for positive g
// on the product space of q_marginals, with g indexed in odometer order
// (last coordinate fastest).  For an r-regular hypergraph,
//   Ent_Q(g) <= (1/r) sum_s E_Q[ Ent over the s-coordinates of g ].
struct TensorizationCheck {
  double lhs = 0;  // Ent_Q(g)
  double rhs = 0;  // (1/r) sum over edges of expected partial Ent
  int regularity = 0;
};

TensorizationCheck tensorization_check(
    const std::vector<std::vector<Rational>>& q_marginals,
    const std::vector<double>& g, const Hypergraph& h);

}  // namespace fracbound
