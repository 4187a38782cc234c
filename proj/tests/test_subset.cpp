#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracbound/errors.hpp"
#include "fracbound/order.hpp"
#include "fracbound/subset.hpp"

using namespace fracbound;

TEST_CASE("subset primitives use 1-based elements") {
  const Subset s = make_subset({1, 3, 5});
  CHECK(contains(s, 1));
  CHECK(!contains(s, 2));
  CHECK(subset_size(s) == 3);
  CHECK(subset_elements(s) == std::vector<int>{1, 3, 5});
  CHECK(full_set(3) == make_subset({1, 2, 3}));
  CHECK(complement_in(s, 5) == make_subset({2, 4}));
  CHECK((singleton(4) | singleton(4)) == singleton(4));
}

TEST_CASE("make_subset validates range") {
  CHECK_THROWS_AS(make_subset({0}), precondition_error);
  CHECK_THROWS_AS(make_subset({64}), precondition_error);
}

TEST_CASE("GroundOrder validates permutations") {
  CHECK_THROWS_AS(GroundOrder({1, 1, 2}), precondition_error);
  CHECK_THROWS_AS(GroundOrder({0, 1, 2}), precondition_error);
  CHECK_THROWS_AS(GroundOrder({2, 3, 4}), precondition_error);
  CHECK_NOTHROW(GroundOrder({3, 1, 2}));
}

TEST_CASE("before/after partition the complement of each element") {
  const GroundOrder order({2, 4, 1, 3});  // positions: 2,4,1,3
  CHECK(order.element_at(0) == 2);  // positions are 0-based
  CHECK(order.element_at(1) == 4);
  CHECK(order.position_of(3) == 3);
  CHECK(order.position_of(2) == 0);
  CHECK(order.prefix(0) == 0);
  CHECK(order.prefix(2) == make_subset({2, 4}));
  CHECK(order.before(singleton(1)) == make_subset({2, 4}));
  CHECK(order.after(singleton(1)) == make_subset({3}));
  // for a block, before = strictly earlier than all, after = strictly later
  const Subset s = make_subset({4, 1});
  CHECK(order.before(s) == make_subset({2}));
  CHECK(order.after(s) == make_subset({3}));
  CHECK_THROWS_AS(order.before(Subset{0}), precondition_error);
}

TEST_CASE("natural order is the identity") {
  const GroundOrder order = GroundOrder::natural(4);
  CHECK(order.as_vector() == std::vector<int>{1, 2, 3, 4});
  CHECK(order.before(make_subset({3})) == make_subset({1, 2}));
  CHECK(order.after(make_subset({3})) == make_subset({4}));
}
