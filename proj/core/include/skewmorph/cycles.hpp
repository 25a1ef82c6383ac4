#pragma once

#include <string>
#include <vector>

namespace skewmorph {

/// Parses cycle notation such as "(0)(1,15,17)(2,14,8)" into an image table
/// on [0, n). Fixed points may be omitted; whitespace is ignored everywhere.
/// Throws std::invalid_argument on malformed input, out-of-range entries or
/// repeated elements.
std::vector<int> parse_cycles(const std::string& text, int n);

/// Prints a permutation in cycle notation. Cycles are ordered by their
/// smallest element and start there; fixed points are printed explicitly.
std::string format_cycles(const std::vector<int>& perm);

/// Order of a permutation: lcm of its cycle lengths.
long long permutation_order(const std::vector<int>& perm);

}  // namespace skewmorph
