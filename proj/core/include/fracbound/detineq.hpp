#pragma once

#include <vector>

#include "fracbound/hypergraph.hpp"
#include "fracbound/setfn.hpp"
#include "fracbound/subset.hpp"

namespace fracbound {

// A symmetric positive definite matrix, validated at construction:
// symmetry to 1e-12 (relative to the largest entry) and every factorization
// pivot above 1e-10 times the largest diagonal entry.
class PosDefMatrix {
 public:
  PosDefMatrix(int n, std::vector<double> row_major);

  static PosDefMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[i * n_ + j]; }  // 0-based

 private:
  int n_;
  std::vector<double> a_;
};

// ln det of the principal submatrix indexed by s (1-based elements);
// 0 for the empty set.  Computed from a pivoted factorization, so the
// determinant itself is never formed.
double log_principal_minor(const PosDefMatrix& k, Subset s);

double principal_minor(const PosDefMatrix& k, Subset s);

// s -> ln det K(s): submodular with value 0 on the empty set, but NOT
// monotone, so only fractional partitions are accepted by the bounds below.
SetFunction<double> logdet_set_function(const PosDefMatrix& k);

// s -> differential entropy of a centered Gaussian with covariance K(s):
//   0.5 * (|s| ln(2 pi e) + ln det K(s)).
SetFunction<double> gaussian_entropy_set_function(const PosDefMatrix& k);

// Determinant sandwich for a fractional partition w of h:
//   prod_s (det K / det K(complement s))^{w(s)} <= det K <= prod_s det K(s)^{w(s)},
// reported in the log domain alongside the exponentiated values.  The lower
// product needs every edge to be a proper subset.
struct DeterminantBounds {
  double log_lower = 0, log_det = 0, log_upper = 0;
  double lower = 0, det = 0, upper = 0;
};

DeterminantBounds determinant_bounds(const PosDefMatrix& k, const Hypergraph& h,
                                     const Weighting& w);

// The three classical specializations, in the log domain:
//   diagonal:   ln det K <= sum_i ln K_ii
//   split:      ln det K <= ln det K(s) + ln det K(complement s)
//   level-k:    C(n-1, k-1) ln det K <= sum_{|s|=k} ln det K(s)
struct ClassicalDeterminantInequalities {
  double log_det = 0;
  double diagonal_rhs = 0;
  Subset split_subset = 0;
  double split_rhs = 0;
  int level = 0;
  double level_lhs = 0;
  double level_rhs = 0;
};

ClassicalDeterminantInequalities classical_determinant_inequalities(
    const PosDefMatrix& k, Subset split_subset, int level);

}  // namespace fracbound
