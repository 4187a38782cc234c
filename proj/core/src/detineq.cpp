#include "fracbound/detineq.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "fracbound/errors.hpp"
#include "fracbound/rational.hpp"

namespace fracbound {

namespace {

constexpr double kSymmetrySlack = 1e-12;
constexpr double kPivotFloor = 1e-10;

Eigen::MatrixXd submatrix(const PosDefMatrix& k, Subset s) {
  const auto idx = subset_elements(s);
  Eigen::MatrixXd m(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      m(r, c) = k(idx[r] - 1, idx[c] - 1);
  return m;
}

// Sum of log pivots of the pivoted LDL^T factorization; throws if any pivot
// dips below the positive-definiteness floor.
double log_det_ldlt(const Eigen::MatrixXd& m, double pivot_floor) {
  if (m.rows() == 0) return 0.0;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() != Eigen::Success)
    throw precondition_error("factorization failed: matrix is not positive definite");
  const auto d = ldlt.vectorD();
  double sum = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d(i) > pivot_floor))
      throw precondition_error("factorization pivot " + std::to_string(d(i)) +
                               " below the positive-definiteness floor");
    sum += std::log(d(i));
  }
  return sum;
}

}  // namespace

PosDefMatrix::PosDefMatrix(int n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n < 1 || n > kMaxGroundSize)
    throw precondition_error("matrix size out of range");
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw precondition_error("entry count does not match the declared size");

  double max_abs = 0, max_diag = 0;
  for (int i = 0; i < n; ++i) {
    max_diag = std::max(max_diag, (*this)(i, i));
    for (int j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs((*this)(i, j)));
  }
  const double sym_tol = kSymmetrySlack * std::max(max_abs, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > sym_tol)
        throw precondition_error("matrix is not symmetric at (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")");
  if (!(max_diag > 0))
    throw precondition_error("matrix has no positive diagonal entry");

  // Validate positive definiteness of the full matrix once, up front.
  log_det_ldlt(submatrix(*this, full_set(n)), kPivotFloor * max_diag);
}

PosDefMatrix PosDefMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw precondition_error("matrix rows have inconsistent lengths");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PosDefMatrix(n, std::move(flat));
}

double log_principal_minor(const PosDefMatrix& k, Subset s) {
  if ((s & ~full_set(k.size())) != 0)
    throw precondition_error("subset leaves the matrix index range");
  if (s == 0) return 0.0;
  return log_det_ldlt(submatrix(k, s), 0.0);
}

double principal_minor(const PosDefMatrix& k, Subset s) {
  return std::exp(log_principal_minor(k, s));
}

SetFunction<double> logdet_set_function(const PosDefMatrix& k) {
  auto shared = std::make_shared<PosDefMatrix>(k);
  return {k.size(), [shared](Subset s) { return log_principal_minor(*shared, s); }};
}

SetFunction<double> gaussian_entropy_set_function(const PosDefMatrix& k) {
  auto shared = std::make_shared<PosDefMatrix>(k);
  const double log_2pie = std::log(2.0 * std::numbers::pi) + 1.0;
  return {k.size(), [shared, log_2pie](Subset s) {
            if (s == 0) return 0.0;
            return 0.5 * (subset_size(s) * log_2pie + log_principal_minor(*shared, s));
          }};
}

DeterminantBounds determinant_bounds(const PosDefMatrix& k, const Hypergraph& h,
                                     const Weighting& w) {
  if (k.size() != h.ground_size())
    throw precondition_error("matrix and hypergraph sizes differ");
  if (classify_weighting(h, w) != WeightingClass::Partition)
    throw precondition_error("determinant bounds need a fractional partition");

  const int n = k.size();
  DeterminantBounds out;
  out.log_det = log_principal_minor(k, full_set(n));
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    Subset s = h.edge(j);
    Subset c = complement_in(s, n);
    if (c == 0)
      throw precondition_error("lower product needs proper hyperedges");
    double wj = to_double(w[j]);
    out.log_upper += wj * log_principal_minor(k, s);
    out.log_lower += wj * (out.log_det - log_principal_minor(k, c));
  }
  out.det = std::exp(out.log_det);
  out.upper = std::exp(out.log_upper);
  out.lower = std::exp(out.log_lower);
  return out;
}

ClassicalDeterminantInequalities classical_determinant_inequalities(
    const PosDefMatrix& k, Subset split_subset, int level) {
  const int n = k.size();
  if (n > kEnumerationGuard)
    throw guard_error("level sums enumerate all subsets; size " +
                      std::to_string(n) + " exceeds the guard");
  if (split_subset == 0 || split_subset == full_set(n) ||
      (split_subset & ~full_set(n)) != 0)
    throw precondition_error("split subset must be proper and nonempty");
  if (level < 1 || level > n)
    throw precondition_error("level must lie in 1..n");

  ClassicalDeterminantInequalities out;
  out.log_det = log_principal_minor(k, full_set(n));
  for (int i = 0; i < n; ++i) out.diagonal_rhs += std::log(k(i, i));
  out.split_subset = split_subset;
  out.split_rhs = log_principal_minor(k, split_subset) +
                  log_principal_minor(k, complement_in(split_subset, n));
  out.level = level;
  out.level_lhs = to_double(binomial(n - 1, level - 1)) * out.log_det;
  for (Subset s = 1; s <= full_set(n); ++s)
    if (subset_size(s) == level) out.level_rhs += log_principal_minor(k, s);
  return out;
}

}  // namespace fracbound
