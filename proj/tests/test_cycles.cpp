#include <random>

#include "doctest.h"
#include "skewmorph/cycles.hpp"

using namespace skewmorph;

TEST_CASE("cycle notation parses") {
  const auto p = parse_cycles("(0)(1,15,17,7,3,5,13,9,11)(2,14,8)(4,10,16)(6)(12)", 18);
  CHECK(p[0] == 0);
  CHECK(p[1] == 15);
  CHECK(p[11] == 1);
  CHECK(p[8] == 2);
  CHECK(p[16] == 4);
  CHECK(p[6] == 6);

  // fixed points may be omitted; whitespace is free
  CHECK(parse_cycles(" ( 1 , 2 ) ", 4) == std::vector<int>{0, 2, 1, 3});
  CHECK(parse_cycles("", 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1)(1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(4)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("()", 4), std::invalid_argument);
}

TEST_CASE("cycle printing") {
  CHECK(format_cycles({0, 2, 1, 3}) == "(0)(1,2)(3)");
  CHECK(format_cycles({0}) == "(0)");
}

TEST_CASE("parse inverts print on random permutations") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(parse_cycles(format_cycles(perm), n) == perm);
  }
}

TEST_CASE("permutation order") {
  CHECK(permutation_order({0, 1, 2}) == 1);
  CHECK(permutation_order({1, 0, 3, 4, 2}) == 6);  // 2-cycle and 3-cycle
}
