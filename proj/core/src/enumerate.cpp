#include "skewmorph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

namespace skewmorph {

namespace {

constexpr int kEngineLimit = 32;  // exponent bitmasks are 32 bits wide

// Depth-first search over partial image tables. Elements are assigned in
// index order, so at depth m the table is known exactly on [0, m]. For every
// assigned x the set of exponents j that could still serve as pi(x) is kept
// as a bitmask over [0, N); a branch dies as soon as one set empties. The
// exponent of a genuine skew-morphism lies in [0, order) and order <= N, so
// masking to [0, N) never discards a valid completion.
struct Searcher {
  GroupPtr gp;
  const FiniteGroup& g;
  const EnumConfig& cfg;
  int n_elems;
  uint32_t full_mask;
  std::vector<int> phi;
  std::vector<char> used;
  std::vector<SkewMorphism> found;

  // Per-node walk data, rebuilt by consistent().
  std::vector<int> walk_buf;
  std::vector<uint32_t> masks;  // masks[y * n_elems + w]
  std::vector<int> cycle_len;   // closed-cycle length or 0

  Searcher(GroupPtr group, const EnumConfig& config)
      : gp(std::move(group)), g(*gp), cfg(config), n_elems(g.order()) {
    full_mask = n_elems >= 32 ? ~0u : ((1u << n_elems) - 1);
    phi.assign(n_elems, -1);
    used.assign(n_elems, 0);
    phi[0] = 0;
    used[0] = 1;
    walk_buf.resize(n_elems + 1);
    masks.resize(static_cast<size_t>(n_elems) * n_elems);
    cycle_len.resize(n_elems);
  }

  // Rebuilds forward-walk masks: bit j of masks[y][w] says "phi^j(y) = w is
  // still possible". Positions reached by the walk decide bits exactly;
  // bits past an open walk stay undecided and remain set for every w.
  void build_masks(int assigned_upto) {
    for (int y = 0; y < n_elems; ++y) {
      int steps = 0;
      int cur = y;
      bool closed = false;
      walk_buf[0] = y;
      while (phi[cur] != -1) {
        cur = phi[cur];
        if (cur == y) {
          closed = true;
          break;
        }
        walk_buf[++steps] = cur;
      }
      uint32_t* row = &masks[static_cast<size_t>(y) * n_elems];
      if (closed) {
        const int len = steps + 1;
        cycle_len[y] = len;
        std::fill(row, row + n_elems, 0u);
        for (int t = 0; t < len; ++t) {
          uint32_t bits = 0;
          for (int j = t; j < n_elems; j += len) bits |= 1u << j;
          row[walk_buf[t]] |= bits;
        }
      } else {
        cycle_len[y] = 0;
        const uint32_t undecided =
            (steps + 1 >= n_elems) ? 0u : full_mask & ~((1u << (steps + 1)) - 1);
        std::fill(row, row + n_elems, undecided);
        for (int t = 0; t <= steps; ++t) row[walk_buf[t]] |= 1u << t;
      }
    }
    (void)assigned_upto;
  }

  bool structural_ok() {
    // Closed orbits are final: x and x^-1 must sit on orbits of equal
    // length, the lcm of closed lengths may not exceed the group order,
    // and once the generator orbits close they determine the order, which
    // every other closed orbit length must divide.
    long long closed_lcm = 1;
    for (int y = 0; y < n_elems; ++y) {
      if (!cycle_len[y]) continue;
      const int iy = g.inv(y);
      if (cycle_len[iy] && cycle_len[iy] != cycle_len[y]) return false;
      closed_lcm = std::lcm(closed_lcm, static_cast<long long>(cycle_len[y]));
      if (n_elems > 1 && closed_lcm > n_elems) return false;
    }
    long long gen_order = 1;
    bool gens_closed = true;
    for (int gen : g.generators()) {
      if (!cycle_len[gen]) {
        gens_closed = false;
        break;
      }
      gen_order = std::lcm(gen_order, static_cast<long long>(cycle_len[gen]));
    }
    if (gens_closed && n_elems > 1) {
      for (int y = 0; y < n_elems; ++y)
        if (cycle_len[y] && gen_order % cycle_len[y] != 0) return false;
      if (cfg.order_filter &&
          !std::binary_search(cfg.order_filter->begin(), cfg.order_filter->end(),
                              static_cast<int>(gen_order)))
        return false;
    }
    // Orbit lengths of products divide the lcm of the factors' lengths.
    for (int x = 0; x < n_elems; ++x) {
      if (!cycle_len[x]) continue;
      for (int y = 0; y < n_elems; ++y) {
        if (!cycle_len[y]) continue;
        const int lxy = cycle_len[g.mul(x, y)];
        if (lxy && std::lcm(cycle_len[x], cycle_len[y]) % lxy != 0) return false;
      }
    }
    return true;
  }

  bool consistent(int assigned_upto) {
    build_masks(assigned_upto);
    if (!structural_ok()) return false;
    for (int x = 0; x <= assigned_upto; ++x) {
      uint32_t live = full_mask;
      const int ipx = g.inv(phi[x]);
      for (int y = 0; y < n_elems; ++y) {
        const int z = g.mul(x, y);
        if (z > assigned_upto) continue;
        const int w = g.mul(ipx, phi[z]);
        live &= masks[static_cast<size_t>(y) * n_elems + w];
        if (!live) return false;
      }
    }
    return true;
  }

  void accept_leaf() {
    VerifyResult res = verify(gp, phi);
    if (!accepted(res))
      throw std::logic_error("enumeration candidate rejected by verify");
    const SkewMorphism& s = skew_of(res);
    if (cfg.order_filter &&
        !std::binary_search(cfg.order_filter->begin(), cfg.order_filter->end(), s.order))
      return;
    found.push_back(s);
  }

  void dfs(int m) {
    if (m == n_elems) {
      accept_leaf();
      return;
    }
    for (int v = 1; v < n_elems; ++v) {
      if (used[v]) continue;
      phi[m] = v;
      used[v] = 1;
      if (consistent(m)) dfs(m + 1);
      phi[m] = -1;
      used[v] = 0;
    }
  }
};

}  // namespace

std::vector<SkewMorphism> enumerate_skew_morphisms(const GroupPtr& g, const EnumConfig& cfg) {
  const int n_elems = g->order();
  if (n_elems > cfg.max_group_order)
    throw bound_error("group order " + std::to_string(n_elems) +
                      " exceeds the enumeration bound " +
                      std::to_string(cfg.max_group_order));
  if (n_elems > kEngineLimit)
    throw bound_error("enumeration engine supports group orders up to " +
                      std::to_string(kEngineLimit));

  EnumConfig cfg_sorted = cfg;
  if (cfg_sorted.order_filter)
    std::sort(cfg_sorted.order_filter->begin(), cfg_sorted.order_filter->end());

  if (n_elems == 1) {
    std::vector<SkewMorphism> out{SkewMorphism::identity(g)};
    if (cfg_sorted.order_filter &&
        !std::binary_search(cfg_sorted.order_filter->begin(),
                            cfg_sorted.order_filter->end(), 1))
      out.clear();
    return out;
  }

  // The tree splits on the image of element 1; each top-level branch runs
  // independently and the branch results are concatenated in image order,
  // so the output does not depend on scheduling.
  std::vector<int> first_images;
  for (int v = 1; v < n_elems; ++v) first_images.push_back(v);

  std::vector<std::vector<SkewMorphism>> branch_results(first_images.size());
  auto run_branch = [&](size_t idx) {
    Searcher searcher(g, cfg_sorted);
    const int v = first_images[idx];
    searcher.phi[1] = v;
    searcher.used[v] = 1;
    if (searcher.consistent(1)) searcher.dfs(2);
    branch_results[idx] = std::move(searcher.found);
  };

  const int threads = std::max(1, cfg_sorted.threads);
  if (threads == 1) {
    for (size_t i = 0; i < first_images.size(); ++i) run_branch(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(first_images.size()));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        while (true) {
          const size_t idx = next.fetch_add(1);
          if (idx >= first_images.size()) break;
          run_branch(idx);
        }
      });
    for (auto& t : pool) t.join();
  }

  std::vector<SkewMorphism> merged;
  for (auto& chunk : branch_results)
    for (SkewMorphism& s : chunk) merged.push_back(std::move(s));
  std::sort(merged.begin(), merged.end(),
            [](const SkewMorphism& a, const SkewMorphism& b) { return a.phi < b.phi; });
  return merged;
}

EnumFilter EnumFilter::kernel_equals(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {Kind::KernelEquals, std::move(elements)};
}

bool filter_matches(const EnumFilter& f, const SkewMorphism& s) {
  switch (f.kind) {
    case EnumFilter::Kind::Smooth:
      return is_smooth(s);
    case EnumFilter::Kind::KernelPreserving:
      return is_kernel_preserving(s);
    case EnumFilter::Kind::Automorphism:
      return is_automorphism(s);
    case EnumFilter::Kind::KernelEquals:
      return kernel(s).elements == f.kernel_elements;
  }
  return false;
}

std::vector<SkewMorphism> enumerate_with_filter(const GroupPtr& g, const EnumConfig& cfg,
                                                const EnumFilter& filter) {
  std::vector<SkewMorphism> all = enumerate_skew_morphisms(g, cfg);
  std::vector<SkewMorphism> out;
  for (SkewMorphism& s : all)
    if (filter_matches(filter, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace skewmorph
