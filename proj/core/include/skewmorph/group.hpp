#pragma once

#include <memory>
#include <string>
#include <vector>

namespace skewmorph {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group on element indices 0..N-1, stored as a full N x N
/// multiplication table. Index 0 is always the identity. Instances are
/// immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  enum class Kind { Cyclic, Dihedral, Table };

  /// Z_n under addition: mul(i, j) = (i + j) mod n. Requires n >= 1.
  static GroupPtr cyclic(int n);

  /// D_n of order 2n with a^n = b^2 = 1 and b^-1 a b = a^-1. Requires n >= 3.
  /// Index i in [0, n) encodes a^i, index n + i encodes a^i b.
  static GroupPtr dihedral(int n);

  /// Builds a group from an explicit table after checking the group axioms
  /// (identity, two-sided inverses, associativity). The identity is
  /// relabelled to index 0 if it sits elsewhere.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table);

  /// Parses "cyclic:<n>", "dihedral:<n>" or "table:<path>".
  static GroupPtr from_spec(const std::string& spec);

  /// Reads a table file: first line N, then N rows of N whitespace-separated
  /// element indices, row x listing the products x*y.
  static GroupPtr from_table_file(const std::string& path);

  int order() const { return order_; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * order_ + y]; }
  int inv(int x) const { return inv_[x]; }
  Kind kind() const { return kind_; }
  int kind_param() const { return param_; }
  bool abelian() const { return abelian_; }
  const std::vector<int>& generators() const { return gens_; }

  int pow(int x, int k) const;  // x^k for any integer k
  int elem_order(int x) const;
  std::string spec_string() const;

 private:
  FiniteGroup() = default;
  static GroupPtr finish(FiniteGroup g);

  int order_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  Kind kind_ = Kind::Table;
  int param_ = 0;
  bool abelian_ = true;
};

/// True when the two groups have identical orders and multiplication tables.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// A subgroup as a sorted list of element indices of its parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;

  /// Validates identity membership, closure under products and inverses,
  /// and Lagrange divisibility.
  static Subgroup make(GroupPtr parent, std::vector<int> elements);

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
};

bool operator==(const Subgroup& a, const Subgroup& b);
bool operator!=(const Subgroup& a, const Subgroup& b);

/// A group homomorphism given by its image table; images[0] must be 0.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;

  static GroupMap make(GroupPtr source, GroupPtr target, std::vector<int> images);

  int operator()(int x) const { return images[x]; }
  bool bijective() const;
  bool surjective() const;
};

bool operator==(const GroupMap& a, const GroupMap& b);

GroupMap identity_map(const GroupPtr& g);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse(const GroupMap& bijection);
bool is_automorphism(const GroupMap& m);

/// Smallest subgroup containing the given generators (and the identity).
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

/// True iff x h x^-1 = h for every x in the parent group.
bool is_normal(const Subgroup& h);

/// Every subgroup, found by exhaustive closure walk; sorted by size then
/// element list. Desk-scale only.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// The proper normal subgroups of a dihedral group: <a^u> for each divisor
/// u of n, plus <a^2, b> and <a^2, ab> when n is even. Every returned entry
/// is re-checked with is_normal.
std::vector<Subgroup> dihedral_normal_subgroups(const GroupPtr& dihedral);

struct QuotientResult {
  GroupPtr group;
  GroupMap projection;
};

/// Quotient by a normal subgroup. Each coset is represented by its smallest
/// member index and cosets are labelled in representative order, so the
/// result is deterministic.
QuotientResult quotient(const GroupPtr& g, const Subgroup& nsub);

/// All automorphisms, found by assigning generator images and extending.
/// Sorted lexicographically by image table. Refuses groups with more than
/// search_bound elements.
std::vector<GroupMap> automorphisms(const GroupPtr& g, int search_bound = 24);

/// The automorphism a -> a^t, b -> a^c b of a dihedral group; gcd(t, n) = 1.
GroupMap dihedral_automorphism(const GroupPtr& dihedral, int t, int c);

// Named subgroups of D_n used by the classification code.
Subgroup dihedral_rotations(const GroupPtr& g);        // <a>
Subgroup dihedral_even_rotations(const GroupPtr& g);   // <a^2>
Subgroup dihedral_even_and_b(const GroupPtr& g);       // <a^2, b>
Subgroup dihedral_even_and_ab(const GroupPtr& g);      // <a^2, ab>

}  // namespace skewmorph
