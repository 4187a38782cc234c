#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fracbound/hypergraph.hpp"
#include "fracbound/rational.hpp"

namespace fracbound {

// A small exact-rational linear program:
//     optimize c'x  subject to  Ax (<=|=|>=) b,  x >= 0.
// Solved with a dense two-phase simplex using Bland's pivoting rule, so the
// result is exact and the pivot sequence (hence the reported optimum vertex)
// is deterministic.
enum class Sense { LessEq, Eq, GreaterEq };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;
};

class LinearProgram {
 public:
  // n_vars nonnegative variables; maximize=false minimizes the objective.
  LinearProgram(std::size_t n_vars, std::vector<Rational> objective, bool maximize);

  void add_constraint(LinearConstraint c);

  LpResult solve() const;

 private:
  std::size_t n_vars_;
  std::vector<Rational> objective_;
  bool maximize_;
  std::vector<LinearConstraint> constraints_;
};

// Minimum-cost fractional covering of h: minimize sum_j cost_j * w_j subject
// to incident weight >= 1 at every element.  Every element must lie in some
// edge (otherwise the program is infeasible and we refuse upfront); costs
// must be nonnegative.  Returns the optimal weighting and its cost.
std::pair<Weighting, Rational> optimal_fractional_covering(
    const Hypergraph& h, const std::vector<Rational>& costs);

std::pair<Weighting, Rational> optimal_fractional_covering(const Hypergraph& h);

// Maximum-reward fractional packing of h: maximize sum_j reward_j * w_j
// subject to incident weight <= 1 at every element.
std::pair<Weighting, Rational> optimal_fractional_packing(
    const Hypergraph& h, const std::vector<Rational>& rewards);

std::pair<Weighting, Rational> optimal_fractional_packing(const Hypergraph& h);

}  // namespace fracbound
