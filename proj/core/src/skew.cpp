#include "skewmorph/skew.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewmorph {

namespace {

void check_bijection(const std::vector<int>& perm, int n, const char* what) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument(std::string(what) + ": wrong size");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument(std::string(what) + ": not a bijection on [0, N)");
    seen[v] = 1;
  }
}

struct CycleInfo {
  std::vector<int> position;  // steps from the cycle leader
  std::vector<int> cycle_id;
  std::vector<int> length;
  long long order = 1;  // lcm of cycle lengths
};

CycleInfo cycle_info(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CycleInfo info;
  info.position.assign(n, 0);
  info.cycle_id.assign(n, -1);
  info.length.assign(n, 0);
  int id = 0;
  for (int leader = 0; leader < n; ++leader) {
    if (info.cycle_id[leader] >= 0) continue;
    int cur = leader, pos = 0;
    do {
      info.cycle_id[cur] = id;
      info.position[cur] = pos++;
      cur = perm[cur];
    } while (cur != leader);
    do {
      info.length[cur] = pos;
      cur = perm[cur];
    } while (cur != leader);
    info.order = std::lcm(info.order, static_cast<long long>(pos));
    ++id;
  }
  return info;
}

long long mod_inverse(long long a, long long m) {
  if (m == 1) return 0;
  long long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::logic_error("modular inverse does not exist");
  return t < 0 ? t + m : t;
}

// Merges j = r (mod mod) with j = rel (mod len); false when incompatible.
bool crt_merge(long long& r, long long& mod, long long rel, long long len) {
  const long long g = std::gcd(mod, len);
  if ((rel - r) % g != 0) return false;
  const long long lg = len / g;
  if (lg > 1) {
    long long t0 = (((rel - r) / g) % lg + lg) % lg;
    t0 = (t0 * mod_inverse((mod / g) % lg, lg)) % lg;
    r += mod * t0;
  }
  mod *= lg;
  r %= mod;
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<char> element_set(const std::vector<int>& elements, int n) {
  std::vector<char> in(n, 0);
  for (int x : elements) in[x] = 1;
  return in;
}

}  // namespace

SkewMorphism SkewMorphism::make(GroupPtr group, std::vector<int> phi, std::vector<int> pi) {
  const int n_elems = group->order();
  check_bijection(phi, n_elems, "skew-morphism permutation");
  if (phi[0] != 0) throw std::logic_error("skew-morphism must fix the identity");

  const CycleInfo info = cycle_info(phi);
  if (n_elems > 1 && info.order > n_elems)
    throw std::logic_error("permutation order exceeds the group order");
  const int n = static_cast<int>(info.order);

  if (static_cast<int>(pi.size()) != n_elems)
    throw std::logic_error("power function has wrong size");
  for (int v : pi)
    if (v < 0 || v >= n) throw std::logic_error("power function value out of range");
  if (pi[0] != (n == 1 ? 0 : 1))
    throw std::logic_error("power function must send the identity to 1 (mod order)");

  SkewMorphism s;
  s.group = std::move(group);
  s.phi = std::move(phi);
  s.order = n;
  s.pi = std::move(pi);
  s.iterates_.resize(static_cast<size_t>(n) * n_elems);
  for (int x = 0; x < n_elems; ++x) s.iterates_[x] = x;
  for (int k = 1; k < n; ++k)
    for (int x = 0; x < n_elems; ++x)
      s.iterates_[static_cast<size_t>(k) * n_elems + x] =
          s.phi[s.iterates_[static_cast<size_t>(k - 1) * n_elems + x]];

  const FiniteGroup& g = *s.group;
  for (int x = 0; x < n_elems; ++x)
    for (int y = 0; y < n_elems; ++y)
      if (s.phi[g.mul(x, y)] != g.mul(s.phi[x], s.iterate(y, s.pi[x])))
        throw std::logic_error("defining identity fails: the map is not a skew-morphism");
  return s;
}

SkewMorphism SkewMorphism::identity(const GroupPtr& group) {
  std::vector<int> phi(group->order());
  std::iota(phi.begin(), phi.end(), 0);
  return make(group, std::move(phi), std::vector<int>(group->order(), 0));
}

bool operator==(const SkewMorphism& a, const SkewMorphism& b) {
  return a.phi == b.phi && same_group(*a.group, *b.group);
}

bool operator!=(const SkewMorphism& a, const SkewMorphism& b) { return !(a == b); }

VerifyResult verify(const GroupPtr& g, const std::vector<int>& perm) {
  const int n_elems = g->order();
  check_bijection(perm, n_elems, "verify");
  if (perm[0] != 0) return VerifyFailure{0, -1, "permutation does not fix the identity"};

  const CycleInfo info = cycle_info(perm);
  std::vector<int> pi(n_elems, 0);
  for (int x = 0; x < n_elems; ++x) {
    // The exponent j for x must satisfy perm^j(y) = perm(x)^-1 * perm(x*y)
    // for every y; each y pins j modulo its own cycle length.
    long long r = 0, mod = 1;
    for (int y = 0; y < n_elems; ++y) {
      const int w = g->mul(g->inv(perm[x]), perm[g->mul(x, y)]);
      if (info.cycle_id[w] != info.cycle_id[y])
        return VerifyFailure{x, y, "no power exponent matches"};
      const int len = info.length[y];
      const long long rel = (info.position[w] - info.position[y] + len) % len;
      if (!crt_merge(r, mod, rel, len))
        return VerifyFailure{x, y, "no power exponent matches"};
    }
    if (mod != info.order) throw std::logic_error("exponent modulus mismatch");
    pi[x] = static_cast<int>(r);
  }
  return SkewMorphism::make(g, perm, std::move(pi));
}

bool accepted(const VerifyResult& r) { return std::holds_alternative<SkewMorphism>(r); }

const SkewMorphism& skew_of(const VerifyResult& r) { return std::get<SkewMorphism>(r); }

const VerifyFailure& failure_of(const VerifyResult& r) { return std::get<VerifyFailure>(r); }

int sigma(const SkewMorphism& s, int x, int k) {
  if (k < 0) throw std::invalid_argument("sigma needs k >= 0");
  const int n = s.order;
  auto partial = [&](int steps) {
    long long total = 0;
    int cur = x;
    for (int i = 0; i < steps; ++i) {
      total += s.pi[cur];
      cur = s.phi[cur];
    }
    return total;
  };
  long long total;
  if (k <= 2 * n) {
    total = partial(k);
  } else {
    // phi^n is the identity, so the sum splits into whole periods.
    total = (static_cast<long long>((k / n) % n) * partial(n)) % n + partial(k % n);
  }
  return static_cast<int>(total % n);
}

int OrbitPartition::length_of(int x) const {
  for (const auto& c : cycles)
    if (std::find(c.begin(), c.end(), x) != c.end()) return static_cast<int>(c.size());
  throw std::invalid_argument("element not in any orbit");
}

OrbitPartition orbits(const SkewMorphism& s) {
  const int n_elems = static_cast<int>(s.phi.size());
  std::vector<char> done(n_elems, 0);
  OrbitPartition part;
  for (int leader = 0; leader < n_elems; ++leader) {
    if (done[leader]) continue;
    std::vector<int> cycle;
    int cur = leader;
    do {
      cycle.push_back(cur);
      done[cur] = 1;
      cur = s.phi[cur];
    } while (cur != leader);
    part.cycles.push_back(std::move(cycle));
  }
  return part;
}

Subgroup kernel(const SkewMorphism& s) {
  const int n_elems = static_cast<int>(s.phi.size());
  std::vector<int> elems;
  for (int x = 0; x < n_elems; ++x)
    if (s.order == 1 || s.pi[x] == 1) elems.push_back(x);
  return Subgroup::make(s.group, std::move(elems));
}

Subgroup fix_subgroup(const SkewMorphism& s) {
  std::vector<int> elems;
  for (int x = 0; x < static_cast<int>(s.phi.size()); ++x)
    if (s.phi[x] == x) elems.push_back(x);
  return Subgroup::make(s.group, std::move(elems));
}

Subgroup core(const SkewMorphism& s) {
  const int n_elems = static_cast<int>(s.phi.size());
  std::vector<char> ker = element_set(kernel(s).elements, n_elems);
  std::vector<char> acc(n_elems, 1), translate = ker, next(n_elems);
  for (int i = 1; i <= s.order; ++i) {
    for (int x = 0; x < n_elems; ++x) next[s.phi[x]] = translate[x];
    translate = next;
    for (int x = 0; x < n_elems; ++x) acc[x] = acc[x] && translate[x];
  }
  std::vector<int> elems;
  for (int x = 0; x < n_elems; ++x)
    if (acc[x]) elems.push_back(x);
  Subgroup c = Subgroup::make(s.group, std::move(elems));
  if (!is_normal(c)) throw std::logic_error("core is not normal");
  if (!is_invariant(s, c.elements)) throw std::logic_error("core is not phi-invariant");
  return c;
}

Subgroup orbit_pi_subgroup(const SkewMorphism& s, const std::vector<int>& primes) {
  for (int p : primes)
    if (!is_prime(p)) throw std::invalid_argument("orbit_pi_subgroup needs prime numbers");
  const CycleInfo info = cycle_info(s.phi);
  std::vector<int> elems;
  for (int x = 0; x < static_cast<int>(s.phi.size()); ++x) {
    int rest = info.length[x];
    for (int p : primes)
      while (rest % p == 0) rest /= p;
    if (rest == 1) elems.push_back(x);
  }
  return Subgroup::make(s.group, std::move(elems));
}

Subgroup smooth_subgroup(const SkewMorphism& s) {
  const Subgroup c = core(s);
  const FiniteGroup& g = *s.group;
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x)
    if (c.contains(g.mul(s.phi[x], g.inv(x)))) elems.push_back(x);
  return Subgroup::make(s.group, std::move(elems));
}

bool is_smooth(const SkewMorphism& s) {
  for (int x = 0; x < static_cast<int>(s.phi.size()); ++x)
    if (s.pi[s.phi[x]] != s.pi[x]) return false;
  return true;
}

bool is_kernel_preserving(const SkewMorphism& s) {
  const Subgroup k = kernel(s);
  for (int x : k.elements)
    if (!k.contains(s.phi[x])) return false;
  return true;
}

bool is_automorphism(const SkewMorphism& s) {
  if (s.order == 1) return true;
  for (int v : s.pi)
    if (v != 1) return false;
  return true;
}

int periodicity(const SkewMorphism& s) {
  const int n_elems = static_cast<int>(s.phi.size());
  for (int p = 1; p <= s.order; ++p) {
    bool ok = true;
    for (int x = 0; x < n_elems && ok; ++x)
      if (s.pi[s.iterate(x, p)] != s.pi[x]) ok = false;
    if (ok) return p;
  }
  throw std::logic_error("periodicity must divide the order");
}

PowerResult power(const SkewMorphism& s, int k) {
  if (k < 1) throw std::invalid_argument("power needs k >= 1");
  const int n = s.order;
  const int n_elems = static_cast<int>(s.phi.size());
  const int g0 = std::gcd(k, n);
  const int m = n / g0;

  std::vector<int> pi_mu(n_elems, 0);
  for (int x = 0; x < n_elems; ++x) {
    const int sx = sigma(s, x, k);
    if (sx % g0 != 0) return PowerFailure{x};
    // Solve k*t = sigma(x, k) (mod n); the solution is unique mod m.
    pi_mu[x] = static_cast<int>(
        (static_cast<long long>(sx / g0) * mod_inverse((k / g0) % m, m)) % m);
  }
  std::vector<int> phi_mu(n_elems);
  for (int x = 0; x < n_elems; ++x) phi_mu[x] = s.iterate(x, k % n);
  return SkewMorphism::make(s.group, std::move(phi_mu), std::move(pi_mu));
}

bool power_ok(const PowerResult& r) { return std::holds_alternative<SkewMorphism>(r); }

const SkewMorphism& power_skew(const PowerResult& r) { return std::get<SkewMorphism>(r); }

SkewMorphism conjugate(const SkewMorphism& s, const GroupMap& gamma) {
  if (!same_group(*gamma.source, *s.group) || !same_group(*gamma.target, *s.group) ||
      !gamma.bijective())
    throw std::invalid_argument("conjugation needs an automorphism of the same group");
  const int n_elems = static_cast<int>(s.phi.size());
  std::vector<int> gamma_inv(n_elems);
  for (int x = 0; x < n_elems; ++x) gamma_inv[gamma.images[x]] = x;
  std::vector<int> psi(n_elems), pi_psi(n_elems);
  for (int x = 0; x < n_elems; ++x) {
    psi[x] = gamma_inv[s.phi[gamma.images[x]]];
    pi_psi[x] = s.pi[gamma.images[x]];
  }
  return SkewMorphism::make(s.group, std::move(psi), std::move(pi_psi));
}

SkewMorphism skew_from_automorphism(const GroupMap& m) {
  if (!is_automorphism(m))
    throw std::invalid_argument("expected an automorphism");
  const int n = static_cast<int>(cycle_info(m.images).order);
  std::vector<int> pi(m.images.size(), n == 1 ? 0 : 1);
  return SkewMorphism::make(m.source, m.images, std::move(pi));
}

QuotientSkew quotient_skew(const SkewMorphism& s, const Subgroup& nsub) {
  if (!same_group(*nsub.parent, *s.group))
    throw std::invalid_argument("subgroup belongs to a different group");
  if (!is_invariant(s, nsub.elements))
    throw std::invalid_argument("quotient_skew needs a phi-invariant subgroup");
  QuotientResult q = quotient(s.group, nsub);  // also checks normality

  const int n_elems = static_cast<int>(s.phi.size());
  const int q_elems = q.group->order();
  std::vector<int> phi_bar(q_elems, -1);
  for (int x = 0; x < n_elems; ++x) {
    const int qx = q.projection(x), qfx = q.projection(s.phi[x]);
    if (phi_bar[qx] == -1)
      phi_bar[qx] = qfx;
    else if (phi_bar[qx] != qfx)
      throw std::logic_error("induced permutation is not well defined");
  }
  const int m = static_cast<int>(cycle_info(phi_bar).order);
  std::vector<int> pi_bar(q_elems, -1);
  for (int x = 0; x < n_elems; ++x) {
    const int want = (m == 1) ? 0 : s.pi[x] % m;
    const int qx = q.projection(x);
    if (pi_bar[qx] == -1)
      pi_bar[qx] = want;
    else if (pi_bar[qx] != want)
      throw std::logic_error("induced power function is not well defined");
  }
  return {SkewMorphism::make(q.group, std::move(phi_bar), std::move(pi_bar)),
          std::move(q.projection)};
}

bool is_covering(const SkewMorphism& s1, const SkewMorphism& s2, const GroupMap& theta) {
  if (!same_group(*theta.source, *s1.group) || !same_group(*theta.target, *s2.group))
    throw std::invalid_argument("covering map does not match the skew-morphism groups");
  if (!theta.surjective()) throw std::invalid_argument("covering needs an epimorphism");
  for (int x = 0; x < static_cast<int>(s1.phi.size()); ++x)
    if (theta.images[s1.phi[x]] != s2.phi[theta.images[x]]) return false;
  return true;
}

bool is_invariant(const SkewMorphism& s, const std::vector<int>& subset) {
  const int n_elems = static_cast<int>(s.phi.size());
  std::vector<char> in(n_elems, 0);
  for (int x : subset) {
    if (x < 0 || x >= n_elems) throw std::invalid_argument("subset element out of range");
    in[x] = 1;
  }
  for (int x : subset)
    if (!in[s.phi[x]]) return false;
  return true;
}

}  // namespace skewmorph
