#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skewmorph/cycles.hpp"
#include "skewmorph/skew.hpp"

using namespace skewmorph;
using skewmorph::testing::reference_verify;

namespace {

// Doubling map on Z_21: an automorphism with orbit lengths 1,6,3,6,2,3.
SkewMorphism z21_fixture() {
  const GroupPtr g = FiniteGroup::cyclic(21);
  const auto perm =
      parse_cycles("(0)(1,2,4,8,16,11)(3,6,12)(5,10,20,19,17,13)(7,14)(9,18,15)", 21);
  const VerifyResult r = verify(g, perm);
  REQUIRE(accepted(r));
  return skew_of(r);
}

// Order-9 non-automorphism of Z_18.
SkewMorphism z18_order9_fixture() {
  const GroupPtr g = FiniteGroup::cyclic(18);
  const auto perm = parse_cycles("(0)(1,15,17,7,3,5,13,9,11)(2,14,8)(4,10,16)(6)(12)", 18);
  const VerifyResult r = verify(g, perm);
  REQUIRE(accepted(r));
  return skew_of(r);
}

// Order-6 kernel-preserving skew-morphism of Z_18 with periodicity 2.
SkewMorphism z18_order6_fixture() {
  const GroupPtr g = FiniteGroup::cyclic(18);
  const auto perm = parse_cycles("(0)(1,5,13,11,7,17)(2,16,8,10,14,4)(3,15)(6,12)(9)", 18);
  const VerifyResult r = verify(g, perm);
  REQUIRE(accepted(r));
  return skew_of(r);
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("verify accepts the Z18 order-9 fixture with the printed exponents") {
  const SkewMorphism s = z18_order9_fixture();
  CHECK(s.order == 9);
  CHECK(s.pi[0] == 1);
  CHECK(s.pi[6] == 1);
  CHECK(s.pi[12] == 1);
  CHECK(s.pi[1] == 2);
  CHECK(s.pi[2] == 7);
  CHECK(s.pi[4] == 4);
  // exponents cycle 2, 5, 8 along the 9-cycle starting at 1
  const std::vector<int> nine_cycle = {1, 15, 17, 7, 3, 5, 13, 9, 11};
  for (size_t i = 0; i < nine_cycle.size(); ++i)
    CHECK(s.pi[nine_cycle[i]] == std::vector<int>{2, 5, 8}[i % 3]);
  for (int x : {2, 14, 8}) CHECK(s.pi[x] == 7);
  for (int x : {4, 10, 16}) CHECK(s.pi[x] == 4);
}

TEST_CASE("verify accepts the identity and the Z21 doubling map") {
  for (const GroupPtr& g :
       {FiniteGroup::cyclic(1), FiniteGroup::cyclic(7), FiniteGroup::dihedral(3)}) {
    const VerifyResult r = verify(g, iota_vec(g->order()));
    REQUIRE(accepted(r));
    CHECK(skew_of(r).order == 1);
    CHECK(is_smooth(skew_of(r)));
  }
  const SkewMorphism s = z21_fixture();
  CHECK(s.order == 6);
  CHECK(is_automorphism(s));
}

TEST_CASE("verify rejects with a witness") {
  const GroupPtr z4 = FiniteGroup::cyclic(4);
  const VerifyResult r = verify(z4, parse_cycles("(1,2)", 4));
  REQUIRE_FALSE(accepted(r));
  CHECK(failure_of(r).x == 1);

  const VerifyResult moved = verify(z4, parse_cycles("(0,1)", 4));
  REQUIRE_FALSE(accepted(moved));
  CHECK(failure_of(moved).x == 0);

  CHECK_THROWS_AS(verify(z4, {0, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("verify agrees with the exponent-scan reference on whole symmetric groups") {
  for (const GroupPtr& g :
       {FiniteGroup::cyclic(4), FiniteGroup::cyclic(5), FiniteGroup::cyclic(6),
        FiniteGroup::dihedral(3)}) {
    const int n = g->order();
    std::vector<int> tail(n - 1);
    for (int i = 0; i < n - 1; ++i) tail[i] = i + 1;
    do {
      std::vector<int> perm(n);
      perm[0] = 0;
      for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
      const auto ref = reference_verify(g, perm);
      const VerifyResult got = verify(g, perm);
      REQUIRE(accepted(got) == ref.has_value());
      if (ref) {
        CHECK(skew_of(got).order == ref->first);
        CHECK(skew_of(got).pi == ref->second);
      }
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
}

TEST_CASE("verify agrees with the reference on random large permutations") {
  std::mt19937 rng(7);
  for (const GroupPtr& g : {FiniteGroup::cyclic(12), FiniteGroup::dihedral(5)}) {
    const int n = g->order();
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<int> perm = iota_vec(n);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      const auto ref = reference_verify(g, perm);
      const VerifyResult got = verify(g, perm);
      REQUIRE(accepted(got) == ref.has_value());
      if (ref) {
        CHECK(skew_of(got).order == ref->first);
        CHECK(skew_of(got).pi == ref->second);
      }
    }
  }
}

TEST_CASE("sigma") {
  const SkewMorphism s = z18_order9_fixture();
  for (int x = 0; x < 18; ++x) CHECK(sigma(s, x, 0) == 0);
  CHECK(sigma(s, 1, 3) == 6);  // 2 + 5 + 8 = 15 = 6 (mod 9)

  const OrbitPartition parts = orbits(s);
  for (int x = 0; x < 18; ++x) {
    const int m = parts.length_of(x);
    CHECK(sigma(s, x, m) % m == 0);
    CHECK(sigma(s, x, s.order) == 0);
  }
  // block reduction matches the direct sum for large k
  for (int k : {19, 45, 1000}) {
    int direct = 0, cur = 1;
    for (int i = 0; i < k; ++i) {
      direct = (direct + s.pi[cur]) % s.order;
      cur = s.phi[cur];
    }
    CHECK(sigma(s, 1, k) == direct);
  }
}

TEST_CASE("orbits of the Z21 fixture") {
  const SkewMorphism s = z21_fixture();
  const OrbitPartition parts = orbits(s);
  std::vector<int> lengths;
  for (const auto& c : parts.cycles) lengths.push_back(static_cast<int>(c.size()));
  CHECK(lengths == std::vector<int>{1, 6, 3, 6, 2, 3});
  CHECK(s.order == 6);

  // orbits of inverses mirror orbits
  const GroupPtr g = s.group;
  for (const auto& cycle : parts.cycles) {
    std::vector<int> inv_set;
    for (int x : cycle) inv_set.push_back(g->inv(x));
    std::sort(inv_set.begin(), inv_set.end());
    bool found = false;
    for (const auto& other : parts.cycles) {
      std::vector<int> sorted_other = other;
      std::sort(sorted_other.begin(), sorted_other.end());
      if (sorted_other == inv_set) found = true;
    }
    CHECK(found);
  }

  const SkewMorphism id = SkewMorphism::identity(g);
  CHECK(orbits(id).cycles.size() == 21);
}

TEST_CASE("kernel, fix and core on the fixtures") {
  const SkewMorphism nine = z18_order9_fixture();
  CHECK(core(nine).elements == std::vector<int>{0, 6, 12});
  CHECK(kernel(nine).elements == std::vector<int>{0, 6, 12});
  CHECK(fix_subgroup(nine).elements == std::vector<int>{0, 6, 12});

  const SkewMorphism six = z18_order6_fixture();
  CHECK(kernel(six).elements == std::vector<int>{0, 3, 6, 9, 12, 15});

  const SkewMorphism dbl = z21_fixture();  // an automorphism
  CHECK(kernel(dbl).size() == 21);
  CHECK(core(dbl).size() == 21);
  CHECK(fix_subgroup(dbl).elements == std::vector<int>{0});
}

TEST_CASE("orbit subgroups by prime support") {
  const SkewMorphism s = z21_fixture();
  CHECK(orbit_pi_subgroup(s, {2}).elements == std::vector<int>{0, 7, 14});
  CHECK(orbit_pi_subgroup(s, {3}).elements == std::vector<int>{0, 3, 6, 9, 12, 15, 18});
  CHECK(orbit_pi_subgroup(s, {5}).elements == std::vector<int>{0});
  CHECK(orbit_pi_subgroup(s, {2, 3}).size() == 21);

  CHECK(orbit_pi_subgroup(s, {}) == fix_subgroup(s));
  CHECK(orbit_pi_subgroup(s, {2, 3, 5, 7, 11, 13, 17, 19}).size() == 21);
  CHECK_THROWS_AS(orbit_pi_subgroup(s, {4}), std::invalid_argument);
}

TEST_CASE("smooth subgroup and smoothness flags") {
  const SkewMorphism nine = z18_order9_fixture();
  CHECK(smooth_subgroup(nine).elements ==
        std::vector<int>{0, 2, 4, 6, 8, 10, 12, 14, 16});
  CHECK_FALSE(is_smooth(nine));
  CHECK(is_kernel_preserving(nine));

  const SkewMorphism dbl = z21_fixture();
  CHECK(is_smooth(dbl));
  CHECK(smooth_subgroup(dbl).size() == 21);
  CHECK(is_automorphism(dbl));
}

TEST_CASE("periodicity") {
  const SkewMorphism six = z18_order6_fixture();
  CHECK(periodicity(six) == 2);
  CHECK(is_kernel_preserving(six));

  const SkewMorphism dbl = z21_fixture();
  CHECK(periodicity(dbl) == 1);

  // periodicity equals the induced order on the kernel quotient
  const QuotientSkew q = quotient_skew(six, kernel(six));
  CHECK(q.skew.order == 2);
}

TEST_CASE("powers") {
  const SkewMorphism six = z18_order6_fixture();
  const PowerResult squared = power(six, 2);
  REQUIRE(power_ok(squared));
  CHECK(is_automorphism(power_skew(squared)));
  CHECK(power_skew(squared).order == 3);

  const PowerResult full = power(six, six.order);
  REQUIRE(power_ok(full));
  CHECK(power_skew(full) == SkewMorphism::identity(six.group));

  CHECK_THROWS_AS(power(six, 0), std::invalid_argument);

  // smooth maps have all powers, and the powers stay smooth
  const SkewMorphism dbl = z21_fixture();
  for (int k = 1; k <= dbl.order; ++k) {
    const PowerResult pk = power(dbl, k);
    REQUIRE(power_ok(pk));
    CHECK(is_smooth(power_skew(pk)));
  }
}

TEST_CASE("conjugation") {
  const SkewMorphism six = z18_order6_fixture();
  CHECK(conjugate(six, identity_map(six.group)) == six);

  // gamma: x -> 5x is an automorphism of Z_18
  std::vector<int> images(18);
  for (int x = 0; x < 18; ++x) images[x] = (5 * x) % 18;
  const GroupMap gamma = GroupMap::make(six.group, six.group, images);
  const SkewMorphism conj = conjugate(six, gamma);
  // kernels transport through the inverse of gamma
  std::vector<int> expect;
  for (int x : kernel(six).elements) expect.push_back(inverse(gamma)(x));
  std::sort(expect.begin(), expect.end());
  CHECK(kernel(conj).elements == expect);
  CHECK(conj.order == six.order);

  const GroupPtr other = FiniteGroup::cyclic(6);
  CHECK_THROWS_AS(conjugate(six, identity_map(other)), std::invalid_argument);
}

TEST_CASE("quotient skew-morphisms match the printed projections") {
  const SkewMorphism six = z18_order6_fixture();
  const QuotientSkew q = quotient_skew(six, kernel(six));
  CHECK(q.skew.group->order() == 3);
  CHECK(q.skew.phi == parse_cycles("(0)(1,2)", 3));

  const SkewMorphism nine = z18_order9_fixture();
  const QuotientSkew qc = quotient_skew(nine, core(nine));
  CHECK(qc.skew.group->order() == 6);
  CHECK(qc.skew.phi == parse_cycles("(0)(1,3,5)(2)(4)", 6));

  const QuotientSkew trivial = quotient_skew(nine, trivial_subgroup(nine.group));
  CHECK(trivial.skew.phi == nine.phi);

  // a subgroup that is not phi-invariant is refused
  const Subgroup half = subgroup_generated(nine.group, {9});
  CHECK_FALSE(is_invariant(nine, half.elements));
  CHECK_THROWS_AS(quotient_skew(nine, half), std::invalid_argument);
}

TEST_CASE("coverings") {
  const SkewMorphism six = z18_order6_fixture();
  const QuotientSkew q = quotient_skew(six, kernel(six));
  CHECK(is_covering(six, q.skew, q.projection));

  CHECK_FALSE(is_covering(six, SkewMorphism::identity(six.group), identity_map(six.group)));

  // invariant subgroups pull back through a covering
  std::vector<int> pulled;
  const Subgroup fix_down = fix_subgroup(q.skew);
  for (int x = 0; x < 18; ++x)
    if (fix_down.contains(q.projection(x))) pulled.push_back(x);
  CHECK(is_invariant(six, pulled));

  const GroupPtr z9 = FiniteGroup::cyclic(9);
  CHECK_THROWS_AS(is_covering(six, SkewMorphism::identity(z9), identity_map(six.group)),
                  std::invalid_argument);
}

TEST_CASE("invariant subsets") {
  const SkewMorphism nine = z18_order9_fixture();
  CHECK(is_invariant(nine, fix_subgroup(nine).elements));
  CHECK(is_invariant(nine, core(nine).elements));
  CHECK(is_invariant(nine, smooth_subgroup(nine).elements));
  CHECK_FALSE(is_invariant(nine, {0, 1}));
}

TEST_CASE("make rejects inconsistent data") {
  const GroupPtr z4 = FiniteGroup::cyclic(4);
  // wrong exponent table for the negation automorphism
  CHECK_THROWS_AS(SkewMorphism::make(z4, {0, 3, 2, 1}, {1, 0, 1, 0}), std::logic_error);
  // identity not fixed
  CHECK_THROWS_AS(SkewMorphism::make(z4, {1, 0, 2, 3}, {1, 1, 1, 1}), std::logic_error);
  // the negation automorphism itself is fine
  CHECK_NOTHROW(SkewMorphism::make(z4, {0, 3, 2, 1}, {1, 1, 1, 1}));
}
