#include "fracbound/order.hpp"

#include <algorithm>
#include <string>

#include "fracbound/errors.hpp"

namespace fracbound {

GroundOrder::GroundOrder(std::vector<int> perm) : order_(std::move(perm)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1 || n > kMaxGroundSize)
    throw precondition_error("ground order size out of range");
  position_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    int e = order_[k];
    if (e < 1 || e > n || position_[e - 1] != -1)
      throw precondition_error("order is not a permutation of 1.." + std::to_string(n));
    position_[e - 1] = k;
  }
}

GroundOrder GroundOrder::natural(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  return GroundOrder(std::move(perm));
}

Subset GroundOrder::prefix(int k) const {
  Subset s = 0;
  for (int j = 0; j < k; ++j) s |= singleton(order_[j]);
  return s;
}

Subset GroundOrder::before(Subset s) const {
  if (s == 0) throw precondition_error("before() requires a nonempty subset");
  int first = n();
  for (int i : subset_elements(s)) first = std::min(first, position_of(i));
  return prefix(first);
}

Subset GroundOrder::after(Subset s) const {
  if (s == 0) throw precondition_error("after() requires a nonempty subset");
  int last = -1;
  for (int i : subset_elements(s)) last = std::max(last, position_of(i));
  Subset out = 0;
  for (int k = last + 1; k < n(); ++k) out |= singleton(order_[k]);
  return out;
}

}  // namespace fracbound
