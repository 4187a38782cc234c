#pragma once

#include <vector>

#include "fracbound/subset.hpp"

namespace fracbound {

// A total order on the ground set {1, ..., n}, given as a permutation.
// Used to form the "everything placed before s" / "everything placed after s"
// conditioning sets that appear in the ordered bounds.
class GroundOrder {
 public:
  // perm[k] is the element occupying position k (both 1-based elements and
  // 0-based positions).  Throws precondition_error unless perm is a
  // permutation of 1..n.
  explicit GroundOrder(std::vector<int> perm);

  static GroundOrder natural(int n);

  int n() const { return static_cast<int>(order_.size()); }

  // Element at position k (0-based position).
  int element_at(int k) const { return order_[k]; }

  // 0-based position of element i.
  int position_of(int i) const { return position_[i - 1]; }

  // First k elements of the order, as a subset.  prefix(0) is empty.
  Subset prefix(int k) const;

  // Elements placed strictly before every element of s.  s must be nonempty.
  Subset before(Subset s) const;

  // Elements placed strictly after every element of s.  s must be nonempty.
  Subset after(Subset s) const;

  const std::vector<int>& as_vector() const { return order_; }

 private:
  std::vector<int> order_;     // position -> element
  std::vector<int> position_;  // element-1 -> position
};

}  // namespace fracbound
