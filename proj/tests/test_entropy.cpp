#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracbound/entropy.hpp"
#include "fracbound/errors.hpp"
#include "fracbound/setfn.hpp"
#include "support/generators.hpp"

using namespace fracbound;

namespace {
constexpr double kTol = 1e-12;
const double kLn2 = std::log(2.0);

JointDistribution xor_triple() {
  return JointDistribution(
      {2, 2, 2}, {{{0, 0, 0}, Rational(1, 4)},
                  {{0, 1, 1}, Rational(1, 4)},
                  {{1, 0, 1}, Rational(1, 4)},
                  {{1, 1, 0}, Rational(1, 4)}});
}
}  // namespace

TEST_CASE("construction validates the PMF") {
  CHECK_THROWS_AS(JointDistribution({2}, {{{0}, Rational(1, 2)}}),
                  precondition_error);  // does not sum to 1
  CHECK_THROWS_AS(JointDistribution({2}, {{{0}, Rational(1, 2)},
                                          {{0}, Rational(1, 2)}}),
                  precondition_error);  // duplicate outcome
  CHECK_THROWS_AS(JointDistribution({2}, {{{2}, Rational(1)}}),
                  precondition_error);  // symbol out of range
  CHECK_THROWS_AS(JointDistribution({2}, {{{0, 0}, Rational(1)}}),
                  precondition_error);  // arity mismatch
  CHECK_THROWS_AS(JointDistribution({2}, {{{0}, Rational(3, 2)},
                                          {{1}, Rational(-1, 2)}}),
                  precondition_error);  // negative mass
  // zero-probability outcomes are dropped
  const JointDistribution d({2}, {{{0}, Rational(1)}, {{1}, Rational(0)}});
  CHECK(d.support().size() == 1);
}

TEST_CASE("marginals are exact rationals") {
  const auto d = xor_triple();
  const auto m1 = d.marginal(make_subset({1}));
  REQUIRE(m1.size() == 2);
  for (const auto& [outcome, p] : m1) CHECK(p == Rational(1, 2));
  const auto m12 = d.marginal(make_subset({1, 2}));
  REQUIRE(m12.size() == 4);
  for (const auto& [outcome, p] : m12) CHECK(p == Rational(1, 4));
}

TEST_CASE("entropies of the xor triple") {
  const auto d = xor_triple();
  CHECK(joint_entropy(d, full_set(3)) == doctest::Approx(2 * kLn2).epsilon(kTol));
  for (int i = 1; i <= 3; ++i)
    CHECK(joint_entropy(d, singleton(i)) == doctest::Approx(kLn2).epsilon(kTol));
  // any two coordinates determine the third
  CHECK(conditional_entropy(d, singleton(3), make_subset({1, 2})) ==
        doctest::Approx(0.0).epsilon(kTol));
  CHECK(conditional_entropy(d, singleton(3), singleton(1)) ==
        doctest::Approx(kLn2).epsilon(kTol));
  CHECK(joint_entropy(d, full_set(3), EntropyUnits::Bits) ==
        doctest::Approx(2.0).epsilon(kTol));
}

TEST_CASE("entropy set function is submodular and chain-rule consistent") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto d = testing::random_sparse_pmf(rng, testing::random_alphabet_sizes(rng, n));
    const auto f = entropy_set_function(d);
    CHECK(is_submodular(f).submodular);
    const auto order = testing::random_order(rng, n);
    CHECK(chain_rule_sum(f, order) ==
          doctest::Approx(joint_entropy(d, full_set(n))).epsilon(1e-9));
    CHECK(prefix_nondecreasing(f, order));
  }
}

TEST_CASE("singleton gaps are the two correlation measures") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto d = testing::random_rational_pmf(rng, testing::random_alphabet_sizes(rng, n));
    const auto f = entropy_set_function(d);
    const double joint = f(full_set(n));
    const auto corr = correlations(d);

    // sum of marginal entropies minus the joint entropy
    double marginal_sum = 0;
    for (int i = 1; i <= n; ++i) marginal_sum += f(singleton(i));
    CHECK(corr.total == doctest::Approx(marginal_sum - joint).epsilon(1e-9));

    // joint entropy minus the erasure sum
    CHECK(corr.dual_total ==
          doctest::Approx(joint - erasure_entropy(d)).epsilon(1e-9));

    // and the erasure identity ties the two via the leave-one-out collection
    double loo_sum = 0;
    for (int i = 1; i <= n; ++i) loo_sum += f(complement_in(singleton(i), n));
    CHECK((n - 1) * joint - loo_sum + corr.dual_total ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("prefix conditional entropies are not submodular in general") {
  const auto wit = non_submodular_conditional_entropy_example();
  const auto f = prefix_conditional_entropy_set_function(wit.dist, wit.order);
  CHECK(conditional_entropy(wit.dist, singleton(4), make_subset({1, 2, 3})) ==
        doctest::Approx(0.0).epsilon(kTol));
  CHECK(conditional_entropy(wit.dist, singleton(4), make_subset({1, 3})) ==
        doctest::Approx(kLn2).epsilon(kTol));
  const auto check = is_submodular(f);
  CHECK(!check.submodular);
  // the designated witness pair violates by exactly ln 2
  const double delta =
      f(wit.s | wit.t) + f(wit.s & wit.t) - f(wit.s) - f(wit.t);
  CHECK(delta == doctest::Approx(kLn2).epsilon(kTol));
}

TEST_CASE("entropy power inequality for fractional partitions") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto d = testing::random_rational_pmf(rng, testing::random_alphabet_sizes(rng, n));
    const auto [h, w] = random_fractional_partition(n, rng);
    const auto bound = entropy_power_bound(d, h, w);
    CHECK(bound.lhs <= bound.rhs + 1e-9);
  }
}

TEST_CASE("entropy power sequence is nondecreasing") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto d = testing::random_rational_pmf(rng, testing::random_alphabet_sizes(rng, n));
    const auto seq = entropy_power_sequence(d);
    REQUIRE(seq.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < seq.size(); ++i)
      CHECK(seq[i] >= seq[i - 1] - 1e-9);
  }
}

TEST_CASE("erasure entropy sums conditionals on complements") {
  const auto d = xor_triple();
  // each coordinate is determined by the other two
  CHECK(erasure_entropy(d) == doctest::Approx(0.0).epsilon(kTol));

  // uniform on {(0,0),(0,1),(1,0)}: H(X1|X2) + H(X2|X1) = (4/3) ln 2 < ln 3
  const JointDistribution tri({2, 2}, {{{0, 0}, Rational(1, 3)},
                                       {{0, 1}, Rational(1, 3)},
                                       {{1, 0}, Rational(1, 3)}});
  CHECK(erasure_entropy(tri) == doctest::Approx(4.0 / 3.0 * kLn2).epsilon(kTol));
  CHECK(erasure_entropy(tri) < joint_entropy(tri, full_set(2)));
}

TEST_CASE("correlations at other set sizes") {
  const JointDistribution copy({2, 2}, {{{0, 0}, Rational(1, 2)},
                                        {{1, 1}, Rational(1, 2)}});
  const auto k1 = correlations(copy, 1);
  CHECK(k1.total == doctest::Approx(kLn2).epsilon(kTol));
  CHECK(k1.dual_total == doctest::Approx(kLn2).epsilon(kTol));
  const auto kn = correlations(copy, 2);
  CHECK(kn.total == doctest::Approx(0.0).epsilon(kTol));
  CHECK(kn.dual_total == doctest::Approx(0.0).epsilon(kTol));
  CHECK_THROWS_AS(correlations(copy, 3), precondition_error);

  // independent coordinates: zero at every k
  const JointDistribution indep({2, 2}, {{{0, 0}, Rational(1, 4)},
                                         {{0, 1}, Rational(1, 4)},
                                         {{1, 0}, Rational(1, 4)},
                                         {{1, 1}, Rational(1, 4)}});
  for (int k = 1; k <= 2; ++k) {
    const auto c = correlations(indep, k);
    CHECK(c.total == doctest::Approx(0.0).epsilon(kTol));
    CHECK(c.dual_total == doctest::Approx(0.0).epsilon(kTol));
  }
}

TEST_CASE("product distributions collapse the sandwich to equality") {
  // two independent coordinates with distinct non-uniform laws, n = 3
  std::vector<std::pair<std::vector<int>, Rational>> pmf;
  const std::vector<std::vector<Rational>> laws{
      {Rational(1, 3), Rational(2, 3)},
      {Rational(1, 4), Rational(3, 4)},
      {Rational(2, 5), Rational(3, 5)}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        pmf.push_back({{a, b, c}, laws[0][a] * laws[1][b] * laws[2][c]});
  const JointDistribution d({2, 2, 2}, std::move(pmf));
  const auto f = entropy_set_function(d);
  const double joint = f(full_set(3));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [h, w] = random_fractional_partition(3, rng);
    const auto order = testing::random_order(rng, 3);
    CHECK(strong_upper_bound(f, h, w, order) == doctest::Approx(joint).epsilon(1e-9));
    CHECK(strong_lower_bound(f, h, w, order) == doctest::Approx(joint).epsilon(1e-9));
    CHECK(weak_upper_bound(f, h, w) == doctest::Approx(joint).epsilon(1e-9));
    CHECK(weak_lower_bound(f, h, w) == doctest::Approx(joint).epsilon(1e-9));
  }
}

TEST_CASE("bounds functions agree with direct formulas on a partition") {
  const auto d = xor_triple();
  const auto f = entropy_set_function(d);
  const Hypergraph h = k_sets(3, 2);
  const Weighting w(std::vector<Rational>(3, Rational(1, 2)));
  const auto order = GroundOrder::natural(3);
  const double joint = 2 * kLn2;
  CHECK(weak_upper_bound(f, h, w) == doctest::Approx(3 * kLn2).epsilon(kTol));
  CHECK(weak_lower_bound(f, h, w) == doctest::Approx(1.5 * kLn2).epsilon(kTol));
  const double su = strong_upper_bound(f, h, w, order);
  const double sl = strong_lower_bound(f, h, w, order);
  CHECK(sl <= joint + kTol);
  CHECK(joint <= su + kTol);
  CHECK(su <= 3 * kLn2 + kTol);
  CHECK(1.5 * kLn2 <= sl + kTol);
}
