#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewmorph/enumerate.hpp"
#include "skewmorph/skew.hpp"

namespace skewmorph {

/// Parameters generating a smooth skew-morphism of D_n with kernel <a^2>.
/// Residues r, s and the unit u live modulo n/2; e and f are units modulo
/// the order k, which is derived from (r, s, u).
struct Class1Params {
  int n = 0;
  int r = 0, s = 0, u = 0;
  int e = 0, f = 0;
  int k = 0;
};

/// Parameters for the rotation-preserving family with kernel <a^2, b>.
struct Class2IParams {
  int n = 0;
  int r = 0, s = 0, u = 0;
  int e = 0;
  int k = 0;
};

/// Parameters for the rotation-reflecting family with kernel <a^2, b>;
/// the order is always 2(e-1).
struct Class2IIParams {
  int n = 0;
  int r = 0, s = 0, u = 0;
  int e = 0;

  int order() const { return 2 * (e - 1); }
};

/// All parameter tuples for even n >= 4, in ascending (r, s, u, e, f) order.
/// Every returned tuple re-checks the full condition list.
std::vector<Class1Params> class1_params(int n);

/// Builds the skew-morphism for a valid tuple; throws std::invalid_argument
/// when the tuple violates its conditions. The result is verified, smooth,
/// of order k, with kernel <a^2>.
SkewMorphism class1_build(const Class1Params& p);

std::vector<Class2IParams> class2a_params(int n);
SkewMorphism class2a_build(const Class2IParams& p);

std::vector<Class2IIParams> class2b_params(int n);
SkewMorphism class2b_build(const Class2IIParams& p);

/// Conjugates a smooth skew-morphism with kernel <a^2, b> by the
/// automorphism a -> a, b -> ab; the result has kernel <a^2, ab>.
SkewMorphism transport_kernel(const SkewMorphism& s);

enum class Provenance {
  Automorphism,
  Class1,
  Class2I,
  Class2II,
  Class2Transported,
  Oracle,  // found only by exhaustive search (even n outside the n >= 8 families)
};

std::string provenance_name(Provenance p);

/// Unified parameter record for catalog entries; f is set only for class1.
struct ParamTuple {
  int r = 0, s = 0, u = 0, e = 0, k = 0;
  std::optional<int> f;
};

bool operator==(const ParamTuple& a, const ParamTuple& b);

struct CatalogSource {
  Provenance provenance = Provenance::Automorphism;
  std::optional<ParamTuple> params;
};

struct CatalogRecord {
  SkewMorphism skew;
  CatalogSource primary;
  std::vector<CatalogSource> collisions;  // further producers of the same map
};

/// The full smooth-skew-morphism catalog of D_n: deterministic, free of
/// duplicate permutation tables, every record smooth.
struct Catalog {
  int n = 0;
  GroupPtr group;
  std::vector<CatalogRecord> records;
};

/// For odd n the catalog is exactly the automorphisms. For even n it is the
/// union of automorphisms, the three parametric families and the kernel
/// transports; for n in {4, 6}, where the parametric families carry no
/// completeness guarantee, the exhaustive oracle is run as well and any
/// record only it finds is flagged with Provenance::Oracle.
Catalog classify_smooth(int n, const EnumConfig& cfg = {});

/// Serializes records as a JSON array of
/// {n, provenance, params:{r,s,u,e,f|null,k}, perm, order, pi, kernel,
///  smooth:true}.
std::string catalog_to_json(const Catalog& c);

/// Outcome of comparing the catalog against the exhaustive oracle,
/// partitioned by kernel.
struct CrossCheckClass {
  std::string name;                          // "full", "a2", "a2b", "a2ab", "other"
  std::vector<std::vector<int>> only_oracle;  // permutation tables
  std::vector<std::vector<int>> only_catalog;
  int matched = 0;
};

struct CrossCheckReport {
  bool pass = false;
  int oracle_total = 0;
  int catalog_total = 0;
  std::vector<CrossCheckClass> classes;
};

/// Enumerates all smooth skew-morphisms of D_n with the oracle and checks
/// set-equality with the catalog, overall and per kernel class.
CrossCheckReport cross_check_catalog(const Catalog& c, const EnumConfig& cfg);

}  // namespace skewmorph
