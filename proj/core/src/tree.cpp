#include "ramsey/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ramsey/combinatorics.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t kTableGuard = 1ull << 26;

std::uint64_t block_cells(int k, const std::vector<int>& sz, int n, int l) {
  unsigned __int128 total = binomial(sz[l], k);
  for (int j = 0; j <= n; ++j) {
    if (j == l) continue;
    total *= static_cast<unsigned>(sz[j]);
  }
  if (total > (1ull << 40)) throw std::overflow_error("cell block too large");
  return static_cast<std::uint64_t>(total);
}

// tuples with the last coordinate fastest; stops early when f returns false
bool for_each_x(const std::vector<const std::vector<int>*>& doms,
                const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<std::size_t> idx(doms.size(), 0);
  std::vector<int> x(doms.size());
  while (true) {
    for (std::size_t t = 0; t < doms.size(); ++t) x[t] = (*doms[t])[idx[t]];
    if (!f(x)) return false;
    if (doms.empty()) return true;
    std::size_t t = doms.size();
    while (true) {
      --t;
      if (++idx[t] < doms[t]->size()) break;
      idx[t] = 0;
      if (t == 0) return true;
    }
  }
}

struct TreeSearch {
  TreeMode mode = TreeMode::varying;
  int k = 0;
  std::vector<int> ms;
  const VaryingIndexColoring* vc = nullptr;
  const ProductLevelColoring* pc = nullptr;
  std::vector<int> sizes;
  int p = 0;
  int q = 0;

  std::vector<int> L, N;
  std::vector<std::vector<int>> H;
  int color = -1;
  bool structural = false;
  TreeCertificate found;
  bool done = false;

  bool take(int c) {
    if (color < 0) color = c;
    return c == color;
  }

  bool check_block(int n, int l) {
    const auto& hl = H[l];
    if (static_cast<int>(hl.size()) < k) return true;
    std::vector<const std::vector<int>*> doms;
    for (int j = 0; j <= n; ++j)
      if (j != l) doms.push_back(&H[j]);
    bool ok = true;
    for_each_combination(static_cast<int>(hl.size()), k,
                         [&](const std::vector<int>& idx) {
                           if (!ok) return;
                           std::vector<int> J(idx.size());
                           for (std::size_t t = 0; t < idx.size(); ++t)
                             J[t] = hl[idx[t]];
                           ok = for_each_x(doms, [&](const std::vector<int>& x) {
                             return take(vc->color(n, l, J, x));
                           });
                         });
    return ok;
  }

  bool check_level(int n) {
    if (mode == TreeMode::dplt) {
      std::vector<const std::vector<int>*> doms;
      for (int j = 0; j <= n; ++j) doms.push_back(&H[j]);
      return for_each_x(doms, [&](const std::vector<int>& x) {
        return take(pc->color(n, x));
      });
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (L[i] > n) break;
      if (mode == TreeMode::fixed_block && i > 0) break;
      if (!check_block(n, L[i])) return false;
    }
    return true;
  }

  bool dfs(int j, int n_last) {
    if (j > n_last) return true;
    auto descend = [&]() {
      if (std::find(N.begin(), N.end(), j) == N.end()) return dfs(j + 1, n_last);
      int saved = color;
      if (check_level(j) && dfs(j + 1, n_last)) return true;
      color = saved;
      return false;
    };
    auto at = std::find(L.begin(), L.end(), j);
    if (at != L.end()) {
      int m = ms[at - L.begin()];
      bool hit = false;
      for_each_combination(sizes[j], m, [&](const std::vector<int>& comb) {
        if (hit) return;
        H[j] = comb;
        if (descend()) hit = true;
      });
      return hit;
    }
    for (int e = 0; e < sizes[j]; ++e) {
      H[j] = {e};
      if (descend()) return true;
    }
    return false;
  }

  // merged interleaving sequence l_0, n_0, ..., l_{p-1}, n_{p-1}, n_p, ...
  void gen(int slot) {
    if (done) return;
    if (slot == p + q) {
      structural = true;
      int n_last = N.back();
      H.assign(n_last + 1, {});
      color = -1;
      if (dfs(0, n_last)) {
        found.mode = mode;
        found.k = k;
        found.ms = ms;
        found.L = L;
        found.N = N;
        found.H = H;
        found.color = color < 0 ? 0 : color;
        done = true;
      }
      return;
    }
    bool is_l = slot < 2 * p && slot % 2 == 0;
    int i = slot < 2 * p ? slot / 2 : slot - p;
    int low;
    if (is_l)
      low = i == 0 ? 0 : N[i - 1] + 1;
    else
      low = i < p ? L[i] : N[i - 1] + 1;
    int depth = static_cast<int>(sizes.size());
    for (int v = low; v < depth && !done; ++v) {
      if (is_l) {
        if (sizes[v] < ms[i]) continue;
        L.push_back(v);
        gen(slot + 1);
        if (!done) L.pop_back();
      } else {
        N.push_back(v);
        gen(slot + 1);
        if (!done) N.pop_back();
      }
    }
  }
};

TreeCertificate homogenize_impl(TreeMode mode, int k, std::vector<int> ms,
                                const VaryingIndexColoring* vc,
                                const ProductLevelColoring* pc,
                                std::pair<int, int> targets) {
  TreeSearch s;
  s.mode = mode;
  s.k = k;
  s.ms = std::move(ms);
  s.vc = vc;
  s.pc = pc;
  s.sizes = vc ? vc->family.sizes : pc->family.sizes;
  s.p = targets.first;
  s.q = targets.second;
  if (s.p < 1 || s.q < s.p) throw std::invalid_argument("bad targets");
  if (static_cast<int>(s.ms.size()) != s.p)
    throw std::invalid_argument("targets disagree with requested sizes");
  for (int m : s.ms)
    if (m < 1) throw std::invalid_argument("requested sizes must be positive");
  for (int sz : s.sizes)
    if (sz < 1) throw std::invalid_argument("family sizes must be positive");
  if (vc && vc->table.size() != vc->cells())
    throw std::invalid_argument("coloring table size mismatch");
  if (pc && pc->table.size() != pc->cells())
    throw std::invalid_argument("coloring table size mismatch");

  s.gen(0);
  if (s.done) {
    bool ok = vc ? verify_tree(*vc, s.found) : verify_tree(*pc, s.found);
    if (!ok) throw InternalContradiction("certificate failed re-verification");
    s.found.verified = true;
    return s.found;
  }
  if (s.structural)
    throw NotFoundWithinDepth("no monochromatic placement at this depth");
  throw ShapeError("requested pattern does not fit the family");
}

bool check_certificate_shape(const std::vector<int>& sizes,
                             const TreeCertificate& cert) {
  std::size_t p = cert.L.size();
  std::size_t q = cert.N.size();
  if (p < 1 || q < p || cert.ms.size() != p) return false;
  if (cert.color != 0 && cert.color != 1) return false;
  for (std::size_t i = 0; i < q; ++i) {
    int lo;
    if (i < p) {
      lo = i == 0 ? 0 : cert.N[i - 1] + 1;
      if (cert.L[i] < lo || cert.N[i] < cert.L[i]) return false;
    } else {
      if (cert.N[i] <= cert.N[i - 1]) return false;
    }
    if (cert.N[i] >= static_cast<int>(sizes.size())) return false;
  }
  int n_last = cert.N.back();
  if (cert.H.size() != static_cast<std::size_t>(n_last) + 1) return false;
  for (int j = 0; j <= n_last; ++j) {
    const auto& h = cert.H[j];
    if (h.empty()) return false;
    for (std::size_t t = 0; t < h.size(); ++t) {
      if (h[t] < 0 || h[t] >= sizes[j]) return false;
      if (t > 0 && h[t] <= h[t - 1]) return false;
    }
    auto at = std::find(cert.L.begin(), cert.L.end(), j);
    std::size_t want =
        at == cert.L.end()
            ? 1
            : static_cast<std::size_t>(cert.ms[at - cert.L.begin()]);
    if (h.size() != want) return false;
  }
  return true;
}

}  // namespace

std::size_t VaryingIndexColoring::cells() const {
  std::uint64_t total = 0;
  for (int n = 0; n < family.depth(); ++n)
    for (int l = 0; l <= n; ++l) total += block_cells(k, family.sizes, n, l);
  return total;
}

std::size_t VaryingIndexColoring::cell_index(int n, int l, std::uint64_t j_rank,
                                             const std::vector<int>& x) const {
  const auto& sz = family.sizes;
  if (n < 0 || n >= family.depth() || l < 0 || l > n)
    throw std::invalid_argument("cell key out of range");
  if (x.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("cell tuple length mismatch");
  std::uint64_t off = 0;
  bool before = true;
  for (int n2 = 0; n2 <= n && before; ++n2)
    for (int l2 = 0; l2 <= n2; ++l2) {
      if (n2 == n && l2 == l) {
        before = false;
        break;
      }
      off += block_cells(k, sz, n2, l2);
    }
  std::uint64_t idx = j_rank;
  std::size_t t = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == l) continue;
    if (x[t] < 0 || x[t] >= sz[j])
      throw std::invalid_argument("cell coordinate out of range");
    idx = idx * static_cast<std::uint64_t>(sz[j]) + x[t];
    ++t;
  }
  return off + idx;
}

int VaryingIndexColoring::color(int n, int l, const std::vector<int>& J,
                                const std::vector<int>& x) const {
  if (static_cast<int>(J.size()) != k)
    throw std::invalid_argument("J must have k elements");
  return table.at(cell_index(n, l, colex_rank(J), x));
}

std::size_t ProductLevelColoring::cells() const {
  std::uint64_t total = 0;
  unsigned __int128 level = 1;
  for (int n = 0; n < family.depth(); ++n) {
    level *= static_cast<unsigned>(family.sizes[n]);
    if (level > (1ull << 40)) throw std::overflow_error("cell block too large");
    total += static_cast<std::uint64_t>(level);
  }
  return total;
}

std::size_t ProductLevelColoring::cell_index(int n,
                                             const std::vector<int>& x) const {
  const auto& sz = family.sizes;
  if (n < 0 || n >= family.depth())
    throw std::invalid_argument("cell key out of range");
  if (x.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("cell tuple length mismatch");
  std::uint64_t off = 0;
  std::uint64_t level = 1;
  for (int j = 0; j < n; ++j) {
    level *= static_cast<std::uint64_t>(sz[j]);
    off += level;
  }
  std::uint64_t idx = 0;
  for (int j = 0; j <= n; ++j) {
    if (x[j] < 0 || x[j] >= sz[j])
      throw std::invalid_argument("cell coordinate out of range");
    idx = idx * static_cast<std::uint64_t>(sz[j]) + x[j];
  }
  return off + idx;
}

int ProductLevelColoring::color(int n, const std::vector<int>& x) const {
  return table.at(cell_index(n, x));
}

VaryingIndexColoring seeded_varying_coloring(int k, LeveledFamily family,
                                             std::uint64_t seed) {
  VaryingIndexColoring c;
  c.k = k;
  c.family = std::move(family);
  std::size_t n = c.cells();
  if (n > kTableGuard)
    throw EnumerationGuardExceeded("coloring table too large to materialize");
  c.table.resize(n);
  SplitMix64 rng(seed);
  for (auto& b : c.table) b = static_cast<std::uint8_t>(rng.below(2));
  return c;
}

ProductLevelColoring seeded_product_level_coloring(LeveledFamily family,
                                                   std::uint64_t seed) {
  ProductLevelColoring c;
  c.family = std::move(family);
  std::size_t n = c.cells();
  if (n > kTableGuard)
    throw EnumerationGuardExceeded("coloring table too large to materialize");
  c.table.resize(n);
  SplitMix64 rng(seed);
  for (auto& b : c.table) b = static_cast<std::uint8_t>(rng.below(2));
  return c;
}

TreeCertificate homogenize_varying(const std::vector<int>& ms,
                                   const VaryingIndexColoring& coloring,
                                   std::pair<int, int> targets) {
  if (coloring.k < 1) throw std::invalid_argument("k must be positive");
  return homogenize_impl(TreeMode::varying, coloring.k, ms, &coloring, nullptr,
                         targets);
}

TreeCertificate homogenize_fixed_block(int m0, int r,
                                       const VaryingIndexColoring& coloring,
                                       std::pair<int, int> targets) {
  if (coloring.k < 1) throw std::invalid_argument("k must be positive");
  if (m0 < 1 || r < 0) throw std::invalid_argument("bad block sizes");
  std::vector<int> ms{m0};
  for (int i = 1; i < targets.first; ++i) ms.push_back(r + i);
  return homogenize_impl(TreeMode::fixed_block, coloring.k, ms, &coloring,
                         nullptr, targets);
}

TreeCertificate homogenize_dplt(const std::vector<int>& ms,
                                const ProductLevelColoring& coloring,
                                std::pair<int, int> targets) {
  return homogenize_impl(TreeMode::dplt, 0, ms, nullptr, &coloring, targets);
}

bool verify_tree(const VaryingIndexColoring& coloring,
                 const TreeCertificate& cert) {
  if (cert.mode == TreeMode::dplt) return false;
  if (cert.k != coloring.k) return false;
  if (!check_certificate_shape(coloring.family.sizes, cert)) return false;
  for (int n : cert.N)
    for (std::size_t i = 0; i < cert.L.size(); ++i) {
      int l = cert.L[i];
      if (l > n) break;
      if (cert.mode == TreeMode::fixed_block && i > 0) break;
      const auto& hl = cert.H[l];
      if (static_cast<int>(hl.size()) < coloring.k) continue;
      std::vector<const std::vector<int>*> doms;
      for (int j = 0; j <= n; ++j)
        if (j != l) doms.push_back(&cert.H[j]);
      bool ok = true;
      for_each_combination(
          static_cast<int>(hl.size()), coloring.k,
          [&](const std::vector<int>& idx) {
            if (!ok) return;
            std::vector<int> J(idx.size());
            for (std::size_t t = 0; t < idx.size(); ++t) J[t] = hl[idx[t]];
            ok = for_each_x(doms, [&](const std::vector<int>& x) {
              return coloring.color(n, l, J, x) == cert.color;
            });
          });
      if (!ok) return false;
    }
  return true;
}

bool verify_tree(const ProductLevelColoring& coloring,
                 const TreeCertificate& cert) {
  if (cert.mode != TreeMode::dplt) return false;
  if (!check_certificate_shape(coloring.family.sizes, cert)) return false;
  for (int n : cert.N) {
    std::vector<const std::vector<int>*> doms;
    for (int j = 0; j <= n; ++j) doms.push_back(&cert.H[j]);
    bool ok = for_each_x(doms, [&](const std::vector<int>& x) {
      return coloring.color(n, x) == cert.color;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace ramsey
