#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "skewmorph/skew.hpp"

namespace skewmorph {

/// Thrown when an enumeration request exceeds the configured group-order
/// bound (or the hard engine limit).
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumConfig {
  int max_group_order = 16;
  int threads = 1;  // >1 splits the search tree across a worker pool
  std::optional<std::vector<int>> order_filter;
};

/// Exhaustively enumerates every skew-morphism of g, sorted
/// lexicographically by image table. A permutation is in the output iff
/// verify() accepts it; the search only prunes branches that cannot reach
/// an accepted permutation. Output is byte-identical for any thread count.
std::vector<SkewMorphism> enumerate_skew_morphisms(const GroupPtr& g,
                                                   const EnumConfig& cfg = {});

struct EnumFilter {
  enum class Kind { Smooth, KernelPreserving, Automorphism, KernelEquals };

  Kind kind = Kind::Smooth;
  std::vector<int> kernel_elements;  // sorted; only for KernelEquals

  static EnumFilter smooth() { return {Kind::Smooth, {}}; }
  static EnumFilter kernel_preserving() { return {Kind::KernelPreserving, {}}; }
  static EnumFilter automorphism() { return {Kind::Automorphism, {}}; }
  static EnumFilter kernel_equals(std::vector<int> elements);
};

bool filter_matches(const EnumFilter& f, const SkewMorphism& s);

/// enumerate_skew_morphisms restricted to entries matching the predicate;
/// ordering is inherited from the full enumeration.
std::vector<SkewMorphism> enumerate_with_filter(const GroupPtr& g, const EnumConfig& cfg,
                                                const EnumFilter& filter);

}  // namespace skewmorph
