#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "skewmorph/enumerate.hpp"
#include "skewmorph/skew.hpp"

namespace skewmorph::testing {

// Independent reference for verify(): scans every exponent j in [0, order)
// directly against the defining identity. Deliberately naive; only suitable
// for permutations of small order.
inline std::optional<std::pair<int, std::vector<int>>> reference_verify(
    const GroupPtr& g, const std::vector<int>& perm) {
  const int n_elems = g->order();
  if (perm[0] != 0) return std::nullopt;

  long long order = 1;
  {
    std::vector<char> done(n_elems, 0);
    for (int leader = 0; leader < n_elems; ++leader) {
      if (done[leader]) continue;
      int len = 0, cur = leader;
      do {
        done[cur] = 1;
        cur = perm[cur];
        ++len;
      } while (cur != leader);
      order = std::lcm(order, static_cast<long long>(len));
    }
  }
  if (n_elems > 1 && order > n_elems) return std::nullopt;
  const int n = static_cast<int>(order);

  std::vector<std::vector<int>> pow(n, std::vector<int>(n_elems));
  std::iota(pow[0].begin(), pow[0].end(), 0);
  for (int k = 1; k < n; ++k)
    for (int x = 0; x < n_elems; ++x) pow[k][x] = perm[pow[k - 1][x]];

  std::vector<int> pi(n_elems, -1);
  for (int x = 0; x < n_elems; ++x) {
    for (int j = 0; j < n && pi[x] < 0; ++j) {
      bool ok = true;
      for (int y = 0; y < n_elems && ok; ++y)
        if (perm[g->mul(x, y)] != g->mul(perm[x], pow[j][y])) ok = false;
      if (ok) pi[x] = j;
    }
    if (pi[x] < 0) return std::nullopt;
  }
  return std::make_pair(n, pi);
}

// Every permutation fixing 0 that verify() accepts, in lexicographic order.
// The literal statement of the enumeration contract; factorial cost.
inline std::vector<std::vector<int>> brute_force_tables(const GroupPtr& g) {
  const int n = g->order();
  std::vector<int> tail(std::max(0, n - 1));
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> perm(n);
    perm[0] = 0;
    for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
    if (accepted(verify(g, perm))) out.push_back(perm);
  } while (std::next_permutation(tail.begin(), tail.end()));
  if (n == 1) out.push_back({0});
  return out;
}

inline std::vector<int> tables_of(const std::vector<SkewMorphism>& list, size_t i) {
  return list[i].phi;
}

}  // namespace skewmorph::testing
