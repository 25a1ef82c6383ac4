#include "skewmorph/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "skewmorph/cycles.hpp"

namespace skewmorph {

namespace {

int positive_mod(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// sum_{i=1}^{j} u^{i-1} mod m; empty sum is 0.
int geometric_sum(int u, int j, int m) {
  long long total = 0, p = 1;
  for (int i = 0; i < j; ++i) {
    total = (total + p) % m;
    p = (p * u) % m;
  }
  return static_cast<int>(total);
}

// sum_{i=1}^{j} (-u)^{i-1} mod m.
int alternating_sum(int u, int j, int m) { return geometric_sum(positive_mod(-u, m), j, m); }

// sum_{i=1}^{j/2} u^{2(i-1)} mod m; j must be even.
int even_power_sum(int u, int j, int m) {
  return geometric_sum(static_cast<int>((static_cast<long long>(u) * u) % m), j / 2, m);
}

int pow_mod(int u, int j, int m) {
  long long p = 1;
  for (int i = 0; i < j; ++i) p = (p * u) % m;
  return static_cast<int>(p);
}

std::vector<int> units_mod(int m) {
  std::vector<int> out;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  if (m == 1) out.push_back(0);  // the single residue class mod 1
  return out;
}

void require_even_n(int n, int least) {
  if (n < least || n % 2 != 0)
    throw std::invalid_argument("family needs an even n >= " + std::to_string(least));
}

// Least k >= 1 with r*sum(u,k) = s*sum(u,k) = 0 (mod m), or 0 if none up to
// the cap. The cap 2n is safe: a valid tuple makes k the order of a
// skew-morphism of D_n, which cannot exceed 2n.
int derived_order(int r, int s, int u, int m, int cap) {
  long long sum = 0, p = 1;
  for (int k = 1; k <= cap; ++k) {
    sum = (sum + p) % m;
    p = (p * u) % m;
    if ((r * sum) % m == 0 && (s * sum) % m == 0) return k;
  }
  return 0;
}

bool class1_conditions(const Class1Params& p) {
  if (p.n < 4 || p.n % 2 != 0) return false;
  const int m = p.n / 2;
  if (p.r < 0 || p.r >= m || p.s < 0 || p.s >= m) return false;
  if (p.u < 0 || p.u >= m || std::gcd(p.u, m) != 1) return false;
  if (p.k != derived_order(p.r, p.s, p.u, m, 2 * p.n) || p.k == 0) return false;
  const int k = p.k;
  for (int v : {p.e, p.f})
    if (v < 0 || v >= k || std::gcd(v, k) != 1 || v == 1 ||
        (static_cast<long long>(v) * v) % k != 1)
      return false;
  if ((static_cast<long long>(p.e) * p.f) % k == 1) return false;
  if (pow_mod(p.u, p.e - 1, m) != 1 % m) return false;
  if (pow_mod(p.u, p.f - 1, m) != 1 % m) return false;
  const int target = positive_mod(p.u - 2 * p.r - 1, m);
  if ((static_cast<long long>(p.r) * geometric_sum(p.u, p.e - 1, m)) % m != target) return false;
  if ((static_cast<long long>(p.s) * geometric_sum(p.u, p.f - 1, m)) % m != 0) return false;
  if (positive_mod(static_cast<long long>(p.r) * geometric_sum(p.u, p.f - 1, m) +
                       static_cast<long long>(p.s) * geometric_sum(p.u, p.e - 1, m),
                   m) != target)
    return false;
  return true;
}

bool class2a_conditions(const Class2IParams& p) {
  if (p.n < 4 || p.n % 2 != 0) return false;
  const int m = p.n / 2;
  if (p.r < 0 || p.r >= m || p.s < 0 || p.s >= m) return false;
  if (p.u < 0 || p.u >= m || std::gcd(p.u, m) != 1) return false;
  if (positive_mod(p.u - 1 - 2 * p.r, m) == 0) return false;
  if (p.k != derived_order(p.r, p.s, p.u, m, 2 * p.n) || p.k == 0) return false;
  const int k = p.k;
  if (p.e < 0 || p.e >= k || std::gcd(p.e, k) != 1 || p.e == 1 ||
      (static_cast<long long>(p.e) * p.e) % k != 1)
    return false;
  if (pow_mod(p.u, p.e - 1, m) != 1 % m) return false;
  const int hs = geometric_sum(p.u, p.e - 1, m);
  if ((static_cast<long long>(p.r) * hs) % m != positive_mod(p.u - 2 * p.r - 1, m))
    return false;
  if ((static_cast<long long>(p.s) * hs) % m != positive_mod(-p.u + 2 * p.r + 1, m))
    return false;
  return true;
}

// Image table of the class-II formulas; also used to pin the true order.
std::vector<int> class2b_table(const Class2IIParams& p) {
  const int n = p.n, m = n / 2;
  std::vector<int> phi(2 * n);
  for (int mm = 0; mm < n; ++mm) {
    if (mm % 2 == 0) {
      phi[mm] = positive_mod(static_cast<long long>(mm) * p.u, n);
      phi[n + mm] = n + positive_mod(static_cast<long long>(mm) * p.u - 2 * p.s, n);
    } else {
      phi[mm] = n + positive_mod(static_cast<long long>(mm - 1) * p.u - 2 * p.r - 1, n);
      phi[n + mm] =
          positive_mod(2 * p.r - 2 * p.s + static_cast<long long>(mm + 1) * p.u + 1, n);
    }
  }
  (void)m;
  return phi;
}

bool class2b_conditions(const Class2IIParams& p) {
  if (p.n < 4 || p.n % 2 != 0) return false;
  const int m = p.n / 2;
  if (p.r < 0 || p.r >= m || p.s < 0 || p.s >= m) return false;
  if (p.u < 0 || p.u >= m || std::gcd(p.u, m) != 1) return false;
  if (p.e <= 1 || p.e % 2 == 0) return false;
  if (p.order() > 2 * p.n) return false;
  if (pow_mod(p.u, p.e - 1, m) != positive_mod(-1, m)) return false;
  if ((static_cast<long long>(p.s) * geometric_sum(p.u, p.e - 1, m)) % m !=
      positive_mod(p.u + 2 * p.r + 1, m))
    return false;
  if ((static_cast<long long>(p.r) * alternating_sum(p.u, p.e - 1, m)) % m !=
      positive_mod(static_cast<long long>(p.s) * even_power_sum(p.u, p.e - 1, m) - 1, m))
    return false;
  // The residue conditions cannot distinguish e from aliases e + t*ord(u);
  // only the value matching the actual permutation order names this family
  // member, so pin it here.
  if (permutation_order(class2b_table(p)) != p.order()) return false;
  return true;
}

SkewMorphism finish_build(const GroupPtr& g, std::vector<int> phi, std::vector<int> pi,
                          int want_order, const Subgroup& want_kernel, const char* what) {
  SkewMorphism s = SkewMorphism::make(g, std::move(phi), std::move(pi));
  if (s.order != want_order)
    throw std::logic_error(std::string(what) + ": built order differs from the derived one");
  if (kernel(s) != want_kernel)
    throw std::logic_error(std::string(what) + ": built kernel is wrong");
  if (!is_smooth(s)) throw std::logic_error(std::string(what) + ": built map is not smooth");
  return s;
}

}  // namespace

std::vector<Class1Params> class1_params(int n) {
  require_even_n(n, 4);
  const int m = n / 2;
  std::vector<Class1Params> out;
  const std::vector<int> units = units_mod(m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int u : units) {
        const int k = derived_order(r, s, u, m, 2 * n);
        if (k < 3) continue;
        std::vector<int> involutions;  // nontrivial square roots of 1 mod k
        for (int e = 2; e < k; ++e)
          if (std::gcd(e, k) == 1 && (static_cast<long long>(e) * e) % k == 1)
            involutions.push_back(e);
        for (int e : involutions)
          for (int f : involutions) {
            Class1Params p{n, r, s, u, e, f, k};
            if (class1_conditions(p)) out.push_back(p);
          }
      }
  return out;
}

SkewMorphism class1_build(const Class1Params& p) {
  if (!class1_conditions(p))
    throw std::invalid_argument("class1 parameters violate their conditions");
  const int n = p.n, m = n / 2, k = p.k;
  const GroupPtr g = FiniteGroup::dihedral(n);
  const int tail = 2 * geometric_sum(p.u, p.e, m);  // doubled sum, an exponent mod n
  std::vector<int> phi(2 * n), pi(2 * n);
  for (int mm = 0; mm < n; ++mm) {
    if (mm % 2 == 0) {
      phi[mm] = positive_mod(static_cast<long long>(mm) * p.u, n);
      phi[n + mm] = n + positive_mod(static_cast<long long>(mm) * p.u + 2 * p.s, n);
      pi[mm] = 1;
      pi[n + mm] = p.f;
    } else {
      phi[mm] = positive_mod(static_cast<long long>(mm - 1) * p.u + 2 * p.r + 1, n);
      phi[n + mm] = n + positive_mod(
                            static_cast<long long>(mm - 1) * p.u + 2 * p.r +
                                static_cast<long long>(p.s) * tail + 1,
                            n);
      pi[mm] = p.e;
      pi[n + mm] = static_cast<int>((static_cast<long long>(p.e) * p.f) % k);
    }
  }
  return finish_build(g, std::move(phi), std::move(pi), k, dihedral_even_rotations(g),
                      "class1_build");
}

std::vector<Class2IParams> class2a_params(int n) {
  require_even_n(n, 4);
  const int m = n / 2;
  std::vector<Class2IParams> out;
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int u : units_mod(m)) {
        const int k = derived_order(r, s, u, m, 2 * n);
        if (k < 3) continue;
        for (int e = 2; e < k; ++e) {
          Class2IParams p{n, r, s, u, e, k};
          if (class2a_conditions(p)) out.push_back(p);
        }
      }
  return out;
}

SkewMorphism class2a_build(const Class2IParams& p) {
  if (!class2a_conditions(p))
    throw std::invalid_argument("class2-I parameters violate their conditions");
  const int n = p.n;
  const GroupPtr g = FiniteGroup::dihedral(n);
  std::vector<int> phi(2 * n), pi(2 * n);
  for (int mm = 0; mm < n; ++mm) {
    if (mm % 2 == 0) {
      phi[mm] = positive_mod(static_cast<long long>(mm) * p.u, n);
      phi[n + mm] = n + positive_mod(static_cast<long long>(mm) * p.u - 2 * p.s, n);
      pi[mm] = 1;
      pi[n + mm] = 1;
    } else {
      phi[mm] = positive_mod(static_cast<long long>(mm - 1) * p.u + 2 * p.r + 1, n);
      phi[n + mm] = n + positive_mod(
                            static_cast<long long>(mm + 1) * p.u - 2 * p.r - 2 * p.s - 1, n);
      pi[mm] = p.e;
      pi[n + mm] = p.e;
    }
  }
  return finish_build(g, std::move(phi), std::move(pi), p.k, dihedral_even_and_b(g),
                      "class2a_build");
}

std::vector<Class2IIParams> class2b_params(int n) {
  require_even_n(n, 4);
  const int m = n / 2;
  std::vector<Class2IIParams> out;
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int u : units_mod(m))
        for (int e = 3; e <= n + 1; e += 2) {
          Class2IIParams p{n, r, s, u, e};
          if (class2b_conditions(p)) out.push_back(p);
        }
  return out;
}

SkewMorphism class2b_build(const Class2IIParams& p) {
  if (!class2b_conditions(p))
    throw std::invalid_argument("class2-II parameters violate their conditions");
  const int n = p.n;
  const GroupPtr g = FiniteGroup::dihedral(n);
  std::vector<int> pi(2 * n);
  for (int mm = 0; mm < n; ++mm) {
    pi[mm] = mm % 2 == 0 ? 1 : p.e;
    pi[n + mm] = pi[mm];
  }
  return finish_build(g, class2b_table(p), std::move(pi), p.order(),
                      dihedral_even_and_b(g), "class2b_build");
}

SkewMorphism transport_kernel(const SkewMorphism& s) {
  if (s.group->kind() != FiniteGroup::Kind::Dihedral)
    throw std::invalid_argument("transport_kernel needs a dihedral group");
  if (!is_smooth(s)) throw std::invalid_argument("transport_kernel needs a smooth map");
  if (kernel(s) != dihedral_even_and_b(s.group))
    throw std::invalid_argument("transport_kernel needs kernel <a^2, b>");
  SkewMorphism out = conjugate(s, dihedral_automorphism(s.group, 1, 1));
  if (kernel(out) != dihedral_even_and_ab(s.group))
    throw std::logic_error("transported kernel is not <a^2, ab>");
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Automorphism:
      return "automorphism";
    case Provenance::Class1:
      return "class1";
    case Provenance::Class2I:
      return "class2-I";
    case Provenance::Class2II:
      return "class2-II";
    case Provenance::Class2Transported:
      return "class2-transported";
    case Provenance::Oracle:
      return "oracle";
  }
  return "?";
}

bool operator==(const ParamTuple& a, const ParamTuple& b) {
  return a.r == b.r && a.s == b.s && a.u == b.u && a.e == b.e && a.k == b.k && a.f == b.f;
}

Catalog classify_smooth(int n, const EnumConfig& cfg) {
  if (n < 3) throw std::invalid_argument("classify_smooth needs n >= 3");
  const GroupPtr g = FiniteGroup::dihedral(n);

  std::vector<std::pair<SkewMorphism, CatalogSource>> produced;
  for (int t = 1; t < std::max(n, 2); ++t) {
    if (std::gcd(t, n) != 1) continue;
    for (int c = 0; c < n; ++c)
      produced.emplace_back(skew_from_automorphism(dihedral_automorphism(g, t, c)),
                            CatalogSource{Provenance::Automorphism, std::nullopt});
  }

  if (n % 2 == 0) {
    for (const Class1Params& p : class1_params(n))
      produced.emplace_back(
          class1_build(p),
          CatalogSource{Provenance::Class1, ParamTuple{p.r, p.s, p.u, p.e, p.k, p.f}});
    std::vector<std::pair<SkewMorphism, ParamTuple>> kernel_b;
    for (const Class2IParams& p : class2a_params(n)) {
      ParamTuple t{p.r, p.s, p.u, p.e, p.k, std::nullopt};
      kernel_b.emplace_back(class2a_build(p), t);
      produced.emplace_back(kernel_b.back().first, CatalogSource{Provenance::Class2I, t});
    }
    for (const Class2IIParams& p : class2b_params(n)) {
      ParamTuple t{p.r, p.s, p.u, p.e, p.order(), std::nullopt};
      kernel_b.emplace_back(class2b_build(p), t);
      produced.emplace_back(kernel_b.back().first, CatalogSource{Provenance::Class2II, t});
    }
    for (const auto& [s, t] : kernel_b)
      produced.emplace_back(transport_kernel(s),
                            CatalogSource{Provenance::Class2Transported, t});

    if (n == 4 || n == 6) {
      EnumConfig oracle_cfg = cfg;
      oracle_cfg.max_group_order = std::max(oracle_cfg.max_group_order, 2 * n);
      oracle_cfg.order_filter.reset();
      for (SkewMorphism& s :
           enumerate_with_filter(g, oracle_cfg, EnumFilter::smooth()))
        produced.emplace_back(std::move(s),
                              CatalogSource{Provenance::Oracle, std::nullopt});
    }
  }

  std::map<std::vector<int>, size_t> index;
  Catalog catalog;
  catalog.n = n;
  catalog.group = g;
  for (auto& [skew, source] : produced) {
    auto it = index.find(skew.phi);
    if (it == index.end()) {
      index.emplace(skew.phi, catalog.records.size());
      catalog.records.push_back(CatalogRecord{std::move(skew), source, {}});
    } else {
      CatalogRecord& rec = catalog.records[it->second];
      const bool oracle_dup = source.provenance == Provenance::Oracle;
      if (!oracle_dup) rec.collisions.push_back(source);
    }
  }
  std::sort(catalog.records.begin(), catalog.records.end(),
            [](const CatalogRecord& a, const CatalogRecord& b) {
              return a.skew.phi < b.skew.phi;
            });
  for (const CatalogRecord& rec : catalog.records)
    if (!is_smooth(rec.skew)) throw std::logic_error("catalog record is not smooth");
  return catalog;
}

std::string catalog_to_json(const Catalog& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CatalogRecord& rec : c.records) {
    nlohmann::json params;
    if (rec.primary.params) {
      const ParamTuple& t = *rec.primary.params;
      params = {{"r", t.r}, {"s", t.s}, {"u", t.u}, {"e", t.e}, {"k", t.k}};
      params["f"] = t.f ? nlohmann::json(*t.f) : nlohmann::json(nullptr);
    } else {
      params = nullptr;
    }
    arr.push_back({{"n", c.n},
                   {"provenance", provenance_name(rec.primary.provenance)},
                   {"params", params},
                   {"perm", rec.skew.phi},
                   {"order", rec.skew.order},
                   {"pi", rec.skew.pi},
                   {"kernel", kernel(rec.skew).elements},
                   {"smooth", true}});
  }
  return arr.dump(2);
}

namespace {

std::string kernel_class_name(const Catalog& c, const Subgroup& k) {
  const GroupPtr& g = c.group;
  if (k.size() == g->order()) return "full";
  if (k == dihedral_even_rotations(g)) return "a2";
  if (c.n % 2 == 0 && k == dihedral_even_and_b(g)) return "a2b";
  if (c.n % 2 == 0 && k == dihedral_even_and_ab(g)) return "a2ab";
  return "other";
}

}  // namespace

CrossCheckReport cross_check_catalog(const Catalog& c, const EnumConfig& cfg) {
  EnumConfig oracle_cfg = cfg;
  oracle_cfg.order_filter.reset();
  std::vector<SkewMorphism> oracle =
      enumerate_with_filter(c.group, oracle_cfg, EnumFilter::smooth());

  const std::vector<std::string> names = {"full", "a2", "a2b", "a2ab", "other"};
  std::map<std::string, std::vector<std::vector<int>>> oracle_by, catalog_by;
  for (const SkewMorphism& s : oracle)
    oracle_by[kernel_class_name(c, kernel(s))].push_back(s.phi);
  for (const CatalogRecord& rec : c.records)
    catalog_by[kernel_class_name(c, kernel(rec.skew))].push_back(rec.skew.phi);

  CrossCheckReport report;
  report.oracle_total = static_cast<int>(oracle.size());
  report.catalog_total = static_cast<int>(c.records.size());
  report.pass = true;
  for (const std::string& name : names) {
    CrossCheckClass cls;
    cls.name = name;
    std::vector<std::vector<int>> lhs = oracle_by[name], rhs = catalog_by[name];
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(cls.only_oracle));
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                        std::back_inserter(cls.only_catalog));
    cls.matched = static_cast<int>(lhs.size() - cls.only_oracle.size());
    if (!cls.only_oracle.empty() || !cls.only_catalog.empty()) report.pass = false;
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace skewmorph
