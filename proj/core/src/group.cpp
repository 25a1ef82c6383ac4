#include "skewmorph/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewmorph {

namespace {

int positive_mod(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Closure of a seed set under products; the seed must contain 0.
std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  for (int x : seed) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      int p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> have = {0};
  while (static_cast<int>(have.size()) < g.order()) {
    int pick = -1;
    for (int x = 1; x < g.order(); ++x) {
      if (!std::binary_search(have.begin(), have.end(), x)) {
        pick = x;
        break;
      }
    }
    gens.push_back(pick);
    std::vector<int> seed = gens;
    seed.push_back(0);
    have = closure(g, seed);
  }
  return gens;
}

}  // namespace

GroupPtr FiniteGroup::finish(FiniteGroup g) {
  const int n = g.order_;
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (g.mul_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("multiplication table has wrong size");
  for (int v : g.mul_)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  for (int x = 0; x < n; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      throw std::invalid_argument("index 0 is not a two-sided identity");

  g.inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        g.inv_[x] = y;
        break;
      }
    }
    if (g.inv_[x] < 0)
      throw std::invalid_argument("element without a two-sided inverse");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw std::invalid_argument("multiplication table is not associative");

  g.abelian_ = true;
  for (int x = 0; x < n && g.abelian_; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        g.abelian_ = false;
        break;
      }

  if (g.gens_.empty() && n > 1) g.gens_ = greedy_generators(g);
  return GroupPtr(new FiniteGroup(std::move(g)));
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  FiniteGroup g;
  g.order_ = n;
  g.kind_ = Kind::Cyclic;
  g.param_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul_[static_cast<size_t>(i) * n + j] = (i + j) % n;
  if (n > 1) g.gens_ = {1};
  return finish(std::move(g));
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  FiniteGroup g;
  const int N = 2 * n;
  g.order_ = N;
  g.kind_ = Kind::Dihedral;
  g.param_ = n;
  g.mul_.resize(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x) {
    const int i = x % n, e = x / n;
    for (int y = 0; y < N; ++y) {
      const int j = y % n, d = y / n;
      const int exp = positive_mod(e ? i - j : i + j, n);
      const int flip = (e + d) % 2;
      g.mul_[static_cast<size_t>(x) * N + y] = exp + (flip ? n : 0);
    }
  }
  g.gens_ = {1, n};  // a and b
  return finish(std::move(g));
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (table[e][x] != x || table[x][e] != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("table has no identity element");

  // Relabel so the identity becomes index 0 (swap labels 0 and id).
  auto relabel = [&](int x) { return x == id ? 0 : (x == 0 ? id : x); };
  FiniteGroup g;
  g.order_ = n;
  g.kind_ = Kind::Table;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.mul_[static_cast<size_t>(relabel(x)) * n + relabel(y)] = relabel(table[x][y]);
  return finish(std::move(g));
}

GroupPtr FiniteGroup::from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw std::invalid_argument("bad element count in " + path);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(in >> table[x][y]))
        throw std::invalid_argument("truncated table file: " + path);
  return from_table(table);
}

GroupPtr FiniteGroup::from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must look like cyclic:<n>, dihedral:<n> or table:<path>");
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  if (head == "table") return from_table_file(tail);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad group parameter in spec: " + spec);
  }
  if (head == "cyclic") return cyclic(n);
  if (head == "dihedral") return dihedral(n);
  throw std::invalid_argument("unknown group kind in spec: " + spec);
}

int FiniteGroup::pow(int x, int k) const {
  if (k < 0) return pow(inv(x), -k);
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::elem_order(int x) const {
  int acc = x, k = 1;
  while (acc != 0) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

std::string FiniteGroup::spec_string() const {
  switch (kind_) {
    case Kind::Cyclic:
      return "cyclic:" + std::to_string(param_);
    case Kind::Dihedral:
      return "dihedral:" + std::to_string(param_);
    default:
      return "table:order" + std::to_string(order_);
  }
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<int> elements) {
  if (!parent) throw std::invalid_argument("subgroup needs a parent group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = parent->order();
  for (int x : elements)
    if (x < 0 || x >= n) throw std::invalid_argument("subgroup element out of range");
  if (elements.empty() || elements.front() != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  auto in = [&](int x) { return std::binary_search(elements.begin(), elements.end(), x); };
  for (int x : elements) {
    if (!in(parent->inv(x))) throw std::invalid_argument("subgroup not closed under inverses");
    for (int y : elements)
      if (!in(parent->mul(x, y))) throw std::invalid_argument("subgroup not closed under products");
  }
  if (n % static_cast<int>(elements.size()) != 0)
    throw std::invalid_argument("subgroup size does not divide the group order");
  Subgroup h;
  h.parent = std::move(parent);
  h.elements = std::move(elements);
  return h;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.elements == b.elements && same_group(*a.parent, *b.parent);
}

bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

GroupMap GroupMap::make(GroupPtr source, GroupPtr target, std::vector<int> images) {
  if (!source || !target) throw std::invalid_argument("group map needs source and target");
  const int n = source->order();
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("image table has wrong size");
  for (int v : images)
    if (v < 0 || v >= target->order())
      throw std::invalid_argument("image out of range");
  if (images[0] != 0) throw std::invalid_argument("map must send identity to identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (images[source->mul(x, y)] != target->mul(images[x], images[y]))
        throw std::invalid_argument("image table is not a homomorphism");
  GroupMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.images = std::move(images);
  return m;
}

bool GroupMap::bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (int v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupMap::surjective() const {
  std::vector<char> seen(target->order(), 0);
  int count = 0;
  for (int v : images)
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  return count == target->order();
}

bool operator==(const GroupMap& a, const GroupMap& b) {
  return a.images == b.images && same_group(*a.source, *b.source) &&
         same_group(*a.target, *b.target);
}

GroupMap identity_map(const GroupPtr& g) {
  std::vector<int> images(g->order());
  std::iota(images.begin(), images.end(), 0);
  return GroupMap::make(g, g, std::move(images));
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (!same_group(*inner.target, *outer.source))
    throw std::invalid_argument("maps do not compose");
  std::vector<int> images(inner.images.size());
  for (size_t x = 0; x < images.size(); ++x) images[x] = outer.images[inner.images[x]];
  return GroupMap::make(inner.source, outer.target, std::move(images));
}

GroupMap inverse(const GroupMap& bijection) {
  if (!bijection.bijective()) throw std::invalid_argument("map is not bijective");
  std::vector<int> images(bijection.images.size());
  for (size_t x = 0; x < images.size(); ++x) images[bijection.images[x]] = static_cast<int>(x);
  return GroupMap::make(bijection.target, bijection.source, std::move(images));
}

bool is_automorphism(const GroupMap& m) {
  return same_group(*m.source, *m.target) && m.bijective();
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<int> seed = gens;
  seed.push_back(0);
  return Subgroup::make(g, closure(*g, std::move(seed)));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup::make(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::make(g, std::move(all));
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  for (int x = 0; x < g.order(); ++x)
    for (int k : h.elements)
      if (!h.contains(g.mul(g.mul(x, k), g.inv(x)))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  seen.insert({0});
  work.push_back({0});
  for (size_t i = 0; i < work.size(); ++i) {
    const std::vector<int> h = work[i];
    for (int x = 1; x < g->order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> seed = h;
      seed.push_back(x);
      std::vector<int> bigger = closure(*g, std::move(seed));
      if (seen.insert(bigger).second) work.push_back(std::move(bigger));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& elems : sorted) out.push_back(Subgroup::make(g, std::move(elems)));
  return out;
}

std::vector<Subgroup> dihedral_normal_subgroups(const GroupPtr& dihedral) {
  if (dihedral->kind() != FiniteGroup::Kind::Dihedral)
    throw std::invalid_argument("expected a dihedral group");
  const int n = dihedral->kind_param();
  std::vector<Subgroup> out;
  for (int u = 1; u <= n; ++u) {
    if (n % u != 0) continue;
    out.push_back(subgroup_generated(dihedral, {u % n}));
  }
  if (n % 2 == 0) {
    out.push_back(dihedral_even_and_b(dihedral));
    out.push_back(dihedral_even_and_ab(dihedral));
  }
  for (const Subgroup& h : out)
    if (!is_normal(h)) throw std::logic_error("dihedral normal subgroup list is wrong");
  return out;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& nsub) {
  if (!same_group(*g, *nsub.parent))
    throw std::invalid_argument("subgroup belongs to a different group");
  if (!is_normal(nsub)) throw std::invalid_argument("quotient needs a normal subgroup");

  const int n = g->order();
  std::vector<int> rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int smallest = x;
    for (int h : nsub.elements) smallest = std::min(smallest, g->mul(x, h));
    rep[x] = smallest;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> label(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) label[reps[i]] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = label[rep[g->mul(reps[i], reps[j])]];

  GroupPtr quot = FiniteGroup::from_table(table);
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = label[rep[x]];
  return {quot, GroupMap::make(g, quot, std::move(proj))};
}

std::vector<GroupMap> automorphisms(const GroupPtr& g, int search_bound) {
  const int n = g->order();
  if (n > search_bound)
    throw std::invalid_argument("group exceeds the automorphism search bound");
  if (n == 1) return {identity_map(g)};

  const std::vector<int>& gens = g->generators();
  const int r = static_cast<int>(gens.size());

  // Spanning description: every element as parent * generator, in BFS order.
  std::vector<int> bfs_order, parent(n, -1), via(n, -1);
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    bfs_order.push_back(0);
    for (size_t i = 0; i < bfs_order.size(); ++i) {
      for (int gi = 0; gi < r; ++gi) {
        int y = g->mul(bfs_order[i], gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = bfs_order[i];
          via[y] = gi;
          bfs_order.push_back(y);
        }
      }
    }
  }

  // Candidate images per generator: elements of the same order.
  std::vector<std::vector<int>> candidates(r);
  for (int gi = 0; gi < r; ++gi) {
    const int want = g->elem_order(gens[gi]);
    for (int y = 0; y < n; ++y)
      if (g->elem_order(y) == want) candidates[gi].push_back(y);
  }

  std::vector<GroupMap> out;
  std::vector<int> pick(r, 0);
  std::vector<int> images(n);
  while (true) {
    images.assign(n, -1);
    images[0] = 0;
    for (int x : bfs_order) {
      if (x == 0) continue;
      images[x] = g->mul(images[parent[x]], candidates[via[x]][pick[via[x]]]);
    }
    bool ok = true;
    std::vector<char> hit(n, 0);
    for (int v : images) {
      if (hit[v]) {
        ok = false;
        break;
      }
      hit[v] = 1;
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (images[g->mul(x, y)] != g->mul(images[x], images[y])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(GroupMap::make(g, g, images));

    int level = r - 1;
    while (level >= 0 && pick[level] + 1 == static_cast<int>(candidates[level].size())) {
      pick[level] = 0;
      --level;
    }
    if (level < 0) break;
    ++pick[level];
  }

  std::sort(out.begin(), out.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  return out;
}

GroupMap dihedral_automorphism(const GroupPtr& dihedral, int t, int c) {
  if (dihedral->kind() != FiniteGroup::Kind::Dihedral)
    throw std::invalid_argument("expected a dihedral group");
  const int n = dihedral->kind_param();
  t = positive_mod(t, n);
  c = positive_mod(c, n);
  if (std::gcd(t, n) != 1)
    throw std::invalid_argument("dihedral automorphism needs gcd(t, n) = 1");
  std::vector<int> images(2 * n);
  for (int i = 0; i < n; ++i) {
    images[i] = static_cast<int>((static_cast<long long>(t) * i) % n);
    images[n + i] = n + static_cast<int>((static_cast<long long>(t) * i + c) % n);
  }
  return GroupMap::make(dihedral, dihedral, std::move(images));
}

namespace {

GroupPtr require_dihedral(const GroupPtr& g) {
  if (g->kind() != FiniteGroup::Kind::Dihedral)
    throw std::invalid_argument("expected a dihedral group");
  return g;
}

}  // namespace

Subgroup dihedral_rotations(const GroupPtr& g) {
  return subgroup_generated(require_dihedral(g), {1});
}

Subgroup dihedral_even_rotations(const GroupPtr& g) {
  const int n = require_dihedral(g)->kind_param();
  return subgroup_generated(g, {2 % n});
}

Subgroup dihedral_even_and_b(const GroupPtr& g) {
  const int n = require_dihedral(g)->kind_param();
  return subgroup_generated(g, {2 % n, n});
}

Subgroup dihedral_even_and_ab(const GroupPtr& g) {
  const int n = require_dihedral(g)->kind_param();
  return subgroup_generated(g, {2 % n, n + 1});
}

}  // namespace skewmorph
