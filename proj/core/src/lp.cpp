#include "fracbound/lp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

LinearProgram::LinearProgram(std::size_t n_vars, std::vector<Rational> objective,
                             bool maximize)
    : n_vars_(n_vars), objective_(std::move(objective)), maximize_(maximize) {
  if (objective_.size() != n_vars_)
    throw precondition_error("objective length does not match variable count");
}

void LinearProgram::add_constraint(LinearConstraint c) {
  if (c.coeffs.size() != n_vars_)
    throw precondition_error("constraint length does not match variable count");
  constraints_.push_back(std::move(c));
}

namespace {

// Dense simplex tableau.  Rows 0..m-1 are constraints, row m is the reduced
// cost row of the objective currently being minimized; column layout is
// [structural | slack/surplus | artificial | rhs].
struct Tableau {
  std::size_t rows = 0, cols = 0;  // cols excludes the rhs column
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;  // per row: basic column

  Rational& at(std::size_t i, std::size_t j) { return t[i][j]; }
  Rational& rhs(std::size_t i) { return t[i][cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = 1 / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Rational factor = t[i][pc];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Minimizes the objective held in row `rows`.  Entering column: lowest
  // index with negative reduced cost; leaving row: lowest basic variable
  // among the ratio-test ties (Bland's rule, no cycling).
  LpStatus run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && t[rows][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return LpStatus::Optimal;

      std::size_t leave = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / t[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult LinearProgram::solve() const {
  const std::size_t m = constraints_.size();

  // Normalize to nonnegative right-hand sides.
  std::vector<LinearConstraint> rows = constraints_;
  for (auto& c : rows) {
    if (c.rhs < 0) {
      for (auto& a : c.coeffs) a = -a;
      c.rhs = -c.rhs;
      if (c.sense == Sense::LessEq) c.sense = Sense::GreaterEq;
      else if (c.sense == Sense::GreaterEq) c.sense = Sense::LessEq;
    }
  }

  std::size_t n_slack = 0, n_art = 0;
  for (const auto& c : rows) {
    if (c.sense != Sense::Eq) ++n_slack;
    if (c.sense != Sense::LessEq) ++n_art;
  }

  Tableau tab;
  tab.rows = m;
  tab.cols = n_vars_ + n_slack + n_art;
  tab.t.assign(m + 1, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.assign(m, 0);

  const std::size_t slack0 = n_vars_;
  const std::size_t art0 = n_vars_ + n_slack;
  std::vector<bool> is_art(tab.cols, false);
  for (std::size_t j = art0; j < tab.cols; ++j) is_art[j] = true;

  std::size_t si = 0, ai = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n_vars_; ++j) tab.at(i, j) = rows[i].coeffs[j];
    tab.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEq:
        tab.at(i, slack0 + si) = 1;
        tab.basis[i] = slack0 + si++;
        break;
      case Sense::GreaterEq:
        tab.at(i, slack0 + si++) = -1;
        tab.at(i, art0 + ai) = 1;
        tab.basis[i] = art0 + ai++;
        break;
      case Sense::Eq:
        tab.at(i, art0 + ai) = 1;
        tab.basis[i] = art0 + ai++;
        break;
    }
  }

  std::vector<bool> allow_all(tab.cols, true);

  if (n_art > 0) {
    // Phase 1: minimize the sum of artificials.
    for (std::size_t j = art0; j < tab.cols; ++j) tab.at(m, j) = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis[i]]) continue;
      for (std::size_t j = 0; j <= tab.cols; ++j) tab.at(m, j) -= tab.t[i][j];
    }
    tab.run(allow_all);  // cannot be unbounded: objective bounded below by 0
    if (tab.rhs(m) != 0) return {LpStatus::Infeasible, Rational(0), {}};

    // Pivot any artificial that is still basic (at value 0) out of the basis,
    // or drop its row as redundant by leaving it; either way artificials may
    // not re-enter in phase 2.
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis[i]]) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (tab.t[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: install the real objective in the bottom row.
  std::vector<bool> allowed(tab.cols, true);
  for (std::size_t j = art0; j < tab.cols; ++j) allowed[j] = false;
  for (std::size_t j = 0; j <= tab.cols; ++j) tab.at(m, j) = 0;
  for (std::size_t j = 0; j < n_vars_; ++j)
    tab.at(m, j) = maximize_ ? -objective_[j] : objective_[j];
  for (std::size_t i = 0; i < m; ++i) {
    Rational c = tab.at(m, tab.basis[i]);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= tab.cols; ++j) tab.at(m, j) -= c * tab.t[i][j];
  }

  if (tab.run(allowed) == LpStatus::Unbounded)
    return {LpStatus::Unbounded, Rational(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n_vars_, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n_vars_) res.x[tab.basis[i]] = tab.rhs(i);
  // Bottom-right holds -z for the minimized objective.
  res.objective = maximize_ ? tab.rhs(m) : -tab.rhs(m);
  return res;
}

namespace {

std::pair<Weighting, Rational> solve_incidence_lp(const Hypergraph& h,
                                                  const std::vector<Rational>& costs,
                                                  bool covering) {
  if (costs.size() != h.edge_count())
    throw precondition_error("cost vector length does not match edge count");
  for (const auto& c : costs)
    if (c < 0) throw precondition_error("negative cost " + rational_to_string(c));
  if (covering) {
    if (int i = h.first_uncovered())
      throw precondition_error("element " + std::to_string(i) +
                               " lies in no hyperedge: no covering exists");
  }

  LinearProgram lp(h.edge_count(), costs, /*maximize=*/!covering);
  for (int i = 1; i <= h.ground_size(); ++i) {
    if (h.degree(i) == 0) continue;  // packing: vacuous constraint
    LinearConstraint c;
    c.coeffs.assign(h.edge_count(), Rational(0));
    for (std::size_t j = 0; j < h.edge_count(); ++j)
      if (contains(h.edge(j), i)) c.coeffs[j] = 1;
    c.sense = covering ? Sense::GreaterEq : Sense::LessEq;
    c.rhs = 1;
    lp.add_constraint(std::move(c));
  }

  LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal)
    throw precondition_error(std::string("incidence LP is ") + to_string(res.status));
  return {Weighting(res.x), res.objective};
}

}  // namespace

std::pair<Weighting, Rational> optimal_fractional_covering(
    const Hypergraph& h, const std::vector<Rational>& costs) {
  return solve_incidence_lp(h, costs, true);
}

std::pair<Weighting, Rational> optimal_fractional_covering(const Hypergraph& h) {
  return solve_incidence_lp(h, std::vector<Rational>(h.edge_count(), Rational(1)), true);
}

std::pair<Weighting, Rational> optimal_fractional_packing(
    const Hypergraph& h, const std::vector<Rational>& rewards) {
  return solve_incidence_lp(h, rewards, false);
}

std::pair<Weighting, Rational> optimal_fractional_packing(const Hypergraph& h) {
  return solve_incidence_lp(h, std::vector<Rational>(h.edge_count(), Rational(1)), false);
}

}  // namespace fracbound
