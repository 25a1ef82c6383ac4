#pragma once

#include <string>
#include <variant>
#include <vector>

#include "skewmorph/group.hpp"

namespace skewmorph {

/// A skew-morphism of a finite group: a permutation phi with phi(0) = 0
/// such that phi(x*y) = phi(x) * phi^{pi(x)}(y) for all x, y, where pi maps
/// elements to exponents modulo the permutation order of phi. pi is stored
/// with canonical residues in [0, order); for order 1 the sole residue is 0.
/// Instances are immutable; construct them through make() or verify().
struct SkewMorphism {
  GroupPtr group;
  std::vector<int> phi;
  int order = 1;
  std::vector<int> pi;

  /// Validates the permutation, the canonical form of pi and the defining
  /// identity. Throws std::logic_error on violation: callers are internal
  /// constructions whose inputs are supposed to be correct by theorem.
  static SkewMorphism make(GroupPtr group, std::vector<int> phi, std::vector<int> pi);

  static SkewMorphism identity(const GroupPtr& group);

  /// phi^k(x) for k >= 0.
  int iterate(int x, int k) const {
    return iterates_[static_cast<size_t>(k % order) * phi.size() + x];
  }

 private:
  std::vector<int> iterates_;  // rows phi^0 .. phi^{order-1}
};

/// Equal when the groups have the same table and the permutations agree
/// (pi and order are determined by phi).
bool operator==(const SkewMorphism& a, const SkewMorphism& b);
bool operator!=(const SkewMorphism& a, const SkewMorphism& b);

/// Why a permutation failed to be a skew-morphism: the first element x
/// whose exponent set became empty, together with the pair element y that
/// emptied it. x = -1 flags failures not tied to one element.
struct VerifyFailure {
  int x = -1;
  int y = -1;
  std::string reason;
};

using VerifyResult = std::variant<SkewMorphism, VerifyFailure>;

/// Decides whether the permutation is a skew-morphism of g and derives the
/// power function. Throws std::invalid_argument when perm is not a
/// bijection on [0, N); all other failures come back as a VerifyFailure.
VerifyResult verify(const GroupPtr& g, const std::vector<int>& perm);

bool accepted(const VerifyResult& r);
const SkewMorphism& skew_of(const VerifyResult& r);
const VerifyFailure& failure_of(const VerifyResult& r);

/// Sum of pi along the first k phi-iterates of x, reduced modulo the order.
int sigma(const SkewMorphism& s, int x, int k);

/// Cycle decomposition of phi; cycles start at their smallest element and
/// are sorted by it.
struct OrbitPartition {
  std::vector<std::vector<int>> cycles;

  int length_of(int x) const;  // orbit length of the cycle containing x
};

OrbitPartition orbits(const SkewMorphism& s);

/// Kernel {x : pi(x) = 1 (mod order)}; the whole group when order = 1.
Subgroup kernel(const SkewMorphism& s);

/// Fixed points of phi.
Subgroup fix_subgroup(const SkewMorphism& s);

/// Intersection of the order-many translates phi^i(kernel). Checked to be
/// a phi-invariant normal subgroup.
Subgroup core(const SkewMorphism& s);

/// Elements whose orbit length factors entirely over the given primes
/// (length 1 always qualifies). primes must be prime numbers.
Subgroup orbit_pi_subgroup(const SkewMorphism& s, const std::vector<int>& primes);

/// Elements x with phi(x) * x^-1 in core(s).
Subgroup smooth_subgroup(const SkewMorphism& s);

bool is_smooth(const SkewMorphism& s);             // pi(phi(x)) = pi(x) everywhere
bool is_kernel_preserving(const SkewMorphism& s);  // phi(kernel) = kernel
bool is_automorphism(const SkewMorphism& s);       // pi identically 1

/// Smallest p >= 1 with pi(phi^p(x)) = pi(x) for all x.
int periodicity(const SkewMorphism& s);

/// Element x whose exponent congruence k*t = sigma(x, k) (mod order) has no
/// solution, so phi^k is not a skew-morphism.
struct PowerFailure {
  int x = -1;
};

using PowerResult = std::variant<SkewMorphism, PowerFailure>;

/// phi^k as a skew-morphism when the exponent congruences are solvable for
/// every element; k must be positive.
PowerResult power(const SkewMorphism& s, int k);

bool power_ok(const PowerResult& r);
const SkewMorphism& power_skew(const PowerResult& r);

/// gamma^-1 . phi . gamma for an automorphism gamma of the same group; the
/// power function of the result is pi . gamma.
SkewMorphism conjugate(const SkewMorphism& s, const GroupMap& gamma);

/// Wraps a group automorphism as a skew-morphism (pi identically 1).
SkewMorphism skew_from_automorphism(const GroupMap& m);

struct QuotientSkew {
  SkewMorphism skew;
  GroupMap projection;
};

/// The induced skew-morphism on group/nsub; nsub must be a phi-invariant
/// normal subgroup.
QuotientSkew quotient_skew(const SkewMorphism& s, const Subgroup& nsub);

/// True iff theta intertwines the two skew-morphisms, theta . phi1 =
/// phi2 . theta. theta must be an epimorphism from s1's group onto s2's.
bool is_covering(const SkewMorphism& s1, const SkewMorphism& s2, const GroupMap& theta);

/// True iff phi maps the subset onto itself.
bool is_invariant(const SkewMorphism& s, const std::vector<int>& subset);

}  // namespace skewmorph
