#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "skewmorph/cycles.hpp"
#include "skewmorph/enumerate.hpp"

using namespace skewmorph;
using skewmorph::testing::brute_force_tables;

TEST_CASE("enumeration equals the brute-force filter on small groups") {
  for (const GroupPtr& g :
       {FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(6),
        FiniteGroup::cyclic(8), FiniteGroup::dihedral(3), FiniteGroup::dihedral(4)}) {
    CAPTURE(g->spec_string());
    const auto expect = brute_force_tables(g);
    const auto got = enumerate_skew_morphisms(g);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].phi == expect[i]);
  }
}

TEST_CASE("trivial group has exactly the identity") {
  const auto found = enumerate_skew_morphisms(FiniteGroup::cyclic(1));
  REQUIRE(found.size() == 1);
  CHECK(found[0].order == 1);
}

TEST_CASE("prime cyclic groups: everything verifies and preserves the kernel") {
  for (int p : {2, 3, 5, 7}) {
    const GroupPtr g = FiniteGroup::cyclic(p);
    for (const SkewMorphism& s : enumerate_skew_morphisms(g)) {
      CHECK(accepted(verify(g, s.phi)));
      CHECK(is_kernel_preserving(s));
    }
  }
}

TEST_CASE("bound handling") {
  CHECK_THROWS_AS(enumerate_skew_morphisms(FiniteGroup::cyclic(18)), bound_error);
  EnumConfig big;
  big.max_group_order = 40;
  CHECK_THROWS_AS(enumerate_skew_morphisms(FiniteGroup::dihedral(17), big), bound_error);
}

TEST_CASE("order filter") {
  const GroupPtr g = FiniteGroup::cyclic(8);
  EnumConfig cfg;
  cfg.order_filter = std::vector<int>{2};
  for (const SkewMorphism& s : enumerate_skew_morphisms(g, cfg)) CHECK(s.order == 2);
  const auto all = enumerate_skew_morphisms(g);
  int count2 = 0;
  for (const SkewMorphism& s : all)
    if (s.order == 2) ++count2;
  CHECK(static_cast<int>(enumerate_skew_morphisms(g, cfg).size()) == count2);
}

TEST_CASE("filters delegate to the invariant tests") {
  const GroupPtr d5 = FiniteGroup::dihedral(5);
  const auto smooth = enumerate_with_filter(d5, {}, EnumFilter::smooth());
  const auto autos = enumerate_with_filter(d5, {}, EnumFilter::automorphism());
  CHECK(smooth.size() == autos.size());  // odd n: smooth maps are automorphisms
  CHECK(smooth.size() == 20);            // |Aut(D_5)| = 5 * phi(5)

  std::vector<int> whole(10);
  for (int i = 0; i < 10; ++i) whole[i] = i;
  const auto kernel_full =
      enumerate_with_filter(d5, {}, EnumFilter::kernel_equals(whole));
  REQUIRE(kernel_full.size() == autos.size());
  for (size_t i = 0; i < autos.size(); ++i) CHECK(kernel_full[i] == autos[i]);

  const GroupPtr d6 = FiniteGroup::dihedral(6);
  const auto bad_kernel = enumerate_with_filter(
      d6, {}, EnumFilter::kernel_equals(dihedral_rotations(d6).elements));
  CHECK(bad_kernel.empty());  // kernel <a> never occurs
}

TEST_CASE("oracle output is closed under conjugation and admissible powers") {
  const GroupPtr d4 = FiniteGroup::dihedral(4);
  const auto all = enumerate_skew_morphisms(d4);
  std::set<std::vector<int>> tables;
  for (const SkewMorphism& s : all) tables.insert(s.phi);

  const auto maps = automorphisms(d4);
  for (const SkewMorphism& s : all) {
    for (const GroupMap& gamma : maps)
      CHECK(tables.count(conjugate(s, gamma).phi) == 1);
    for (int k = 1; k <= s.order; ++k) {
      const PowerResult r = power(s, k);
      if (power_ok(r)) CHECK(tables.count(power_skew(r).phi) == 1);
    }
  }
}

TEST_CASE("parallel runs reproduce the serial listing byte for byte") {
  for (const GroupPtr& g : {FiniteGroup::dihedral(5), FiniteGroup::cyclic(12)}) {
    EnumConfig serial, parallel;
    parallel.threads = 4;
    const auto a = enumerate_skew_morphisms(g, serial);
    const auto b = enumerate_skew_morphisms(g, parallel);
    REQUIRE(a.size() == b.size());
    std::string left, right;
    for (size_t i = 0; i < a.size(); ++i) {
      left += format_cycles(a[i].phi) + "\n";
      right += format_cycles(b[i].phi) + "\n";
    }
    CHECK(left == right);
  }
}
