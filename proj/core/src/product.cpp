#include "ramsey/product.hpp"

#include <algorithm>
#include <string>

#include "ramsey/arrow.hpp"
#include "ramsey/combinatorics.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t kTableGuard = 1ull << 26;
// colorings scanned per radius before a bound computation gives up
constexpr std::uint64_t kScanBudget = 1ull << 24;

// C(size_0,k) * size_1 * ... * size_{j-1}, clamped
std::uint64_t tuple_count(int k, const std::vector<int>& sizes, std::size_t j,
                          std::uint64_t clamp) {
  unsigned __int128 n = binomial(sizes.at(0), k);
  for (std::size_t i = 1; i < j; ++i) {
    n *= static_cast<unsigned>(sizes[i]);
    if (n > clamp) return clamp + 1;
  }
  return n > clamp ? clamp + 1 : static_cast<std::uint64_t>(n);
}

void check_shape(int k, const std::vector<int>& sizes,
                 const std::vector<int>& ms) {
  if (sizes.empty() || sizes.size() != ms.size())
    throw std::invalid_argument("shape/targets length mismatch");
  for (int m : ms)
    if (m < 1) throw std::invalid_argument("targets must be positive");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("sizes must be positive");

  auto base = least_arrow(ms[0], k, sizes[0], kScanBudget);
  if (!base.r) {
    if (base.capped)
      throw EnumerationGuardExceeded("level 0 gate undecided within budget");
    throw ShapeTooSmall("level 0 size " + std::to_string(sizes[0]) +
                        " does not arrow m_0 = " + std::to_string(ms[0]));
  }
  for (std::size_t j = 1; j < sizes.size(); ++j) {
    std::uint64_t n = tuple_count(k, sizes, j, 62);
    if (n > 62 || (static_cast<std::uint64_t>(ms[j]) << n) >
                      static_cast<std::uint64_t>(sizes[j]))
      throw ShapeTooSmall("level " + std::to_string(j) +
                          " too small for the halving schedule");
  }
}

ProductSelection solve(const ProductColoring& c, const std::vector<int>& ms) {
  std::size_t n = c.sizes.size() - 1;
  if (n == 0) {
    // first monochromatic m_0-subset in colex order; the arrow gate says
    // one exists among the leading elements already
    ProductSelection out;
    bool found = false;
    for_each_combination(c.sizes[0], ms[0], [&](const std::vector<int>& h) {
      if (found) return;
      int color = -1;
      bool mono = true;
      for_each_combination(ms[0], c.k, [&](const std::vector<int>& idx) {
        if (!mono) return;
        std::vector<int> sub(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = h[idx[i]];
        int bit = c.color(colex_rank(sub), {});
        if (color < 0)
          color = bit;
        else if (bit != color)
          mono = false;
      });
      if (mono) {
        out.h = {h};
        out.color = color < 0 ? 0 : color;  // m_0 < k leaves no subsets
        found = true;
      }
    });
    if (!found) throw InternalContradiction("base level had no mono subset");
    return out;
  }

  std::uint64_t total = tuple_count(c.k, c.sizes, n, 62);
  // gate already checked; keep K as the surviving ordered subset of K_n
  std::vector<int> kept(c.sizes[n]);
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = static_cast<int>(i);

  std::uint64_t j_count = binomial(c.sizes[0], c.k);
  std::vector<int> xs(n - 1, 0);
  std::uint64_t step = 0;
  std::vector<int> cls[2];
  for (std::uint64_t j_rank = 0; j_rank < j_count; ++j_rank) {
    std::fill(xs.begin(), xs.end(), 0);
    bool more = true;
    while (more) {
      cls[0].clear();
      cls[1].clear();
      std::vector<int> full = xs;
      full.push_back(0);
      for (int x : kept) {
        full.back() = x;
        cls[c.color(j_rank, full)].push_back(x);
      }
      int pick = cls[1].size() > cls[0].size() ? 1 : 0;
      std::uint64_t target = static_cast<std::uint64_t>(ms[n])
                             << (total - step - 1);
      if (cls[pick].size() < target)
        throw InternalContradiction("halving target missed");
      cls[pick].resize(target);
      kept = cls[pick];
      ++step;

      more = false;
      for (std::size_t i = n - 1; i-- > 0;) {
        if (++xs[i] < c.sizes[i + 1]) {
          more = true;
          break;
        }
        xs[i] = 0;
      }
      if (n == 1) more = false;
    }
  }

  // induced coloring on the shortened product; any survivor gives the color
  ProductColoring inner;
  inner.k = c.k;
  inner.sizes.assign(c.sizes.begin(), c.sizes.end() - 1);
  inner.bits.resize(tuple_count(c.k, c.sizes, n, kTableGuard));
  std::uint64_t idx = 0;
  std::vector<int> full(n, 0);
  for (std::uint64_t j_rank = 0; j_rank < j_count; ++j_rank) {
    std::fill(full.begin(), full.end() - 1, 0);
    bool more = true;
    while (more) {
      full.back() = kept[0];
      inner.bits[idx++] = static_cast<std::uint8_t>(c.color(j_rank, full));

      more = false;
      for (std::size_t i = n - 1; i-- > 0;) {
        if (++full[i] < c.sizes[i + 1]) {
          more = true;
          break;
        }
        full[i] = 0;
      }
      if (n == 1) more = false;
    }
  }

  std::vector<int> inner_ms(ms.begin(), ms.end() - 1);
  ProductSelection out = solve(inner, inner_ms);
  out.h.push_back(kept);
  return out;
}

}  // namespace

std::uint64_t ProductColoring::cells() const {
  return tuple_count(k, sizes, sizes.size(), kTableGuard);
}

int ProductColoring::color(std::uint64_t j_rank,
                           const std::vector<int>& xs) const {
  std::uint64_t idx = j_rank;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    idx = idx * sizes[i + 1] + static_cast<std::uint64_t>(xs.at(i));
  return bits.at(idx);
}

ProductColoring seeded_product_coloring(int k, const std::vector<int>& sizes,
                                        std::uint64_t seed) {
  ProductColoring c;
  c.k = k;
  c.sizes = sizes;
  std::uint64_t cells = c.cells();
  if (cells > kTableGuard) throw std::invalid_argument("table too large");
  c.bits.resize(cells);
  SplitMix64 rng(seed);
  for (auto& b : c.bits) b = static_cast<std::uint8_t>(rng.below(2));
  return c;
}

SBoundResult s_bound(int k, const std::vector<int>& ms, std::uint64_t cap) {
  SBoundResult res;
  if (ms.empty()) throw std::invalid_argument("empty target list");
  auto base = least_arrow(ms[0], k, static_cast<int>(std::min<std::uint64_t>(cap, 1000)),
                          kScanBudget);
  if (!base.r) {
    res.capped = true;
    return res;
  }
  res.values.push_back(static_cast<std::uint64_t>(*base.r));
  for (std::size_t nidx = 1; nidx < ms.size(); ++nidx) {
    // N = C(S(m_0),k) * prod of the previously computed values after the first
    unsigned __int128 n = binomial(static_cast<int>(res.values[0]), k);
    for (std::size_t j = 1; j < nidx; ++j) {
      n *= res.values[j];
      if (n > 62) break;
    }
    if (n > 62) {
      res.capped = true;
      return res;
    }
    unsigned __int128 v = static_cast<unsigned __int128>(ms[nidx])
                          << static_cast<unsigned>(n);
    if (v > cap) {
      res.capped = true;
      return res;
    }
    res.values.push_back(static_cast<std::uint64_t>(v));
  }
  return res;
}

SBoundResult s_kn_bound(int k, int n, const std::vector<int>& ms,
                        std::uint64_t cap) {
  if (n < 0 || n > 1)
    throw std::invalid_argument("only n = 0 and n = 1 are defined");
  if (ms.empty()) throw std::invalid_argument("empty target list");
  SBoundResult res;
  int scan_cap = static_cast<int>(std::min<std::uint64_t>(cap, 1000));
  auto base = least_arrow(ms[0], k, scan_cap, kScanBudget);
  if (!base.r) {
    res.capped = true;
    return res;
  }
  if (n == 0) {
    res.values.push_back(static_cast<std::uint64_t>(*base.r));
    return res;
  }
  std::uint64_t first = 2ull * static_cast<std::uint64_t>(*base.r);
  if (first > cap) {
    res.capped = true;
    return res;
  }
  res.values.push_back(first);
  if (ms.size() == 1) return res;

  auto iter = iterate_arrow(static_cast<int>(first), ms[1], k, scan_cap,
                            kScanBudget);
  std::uint64_t exponent = binomial(static_cast<int>(first), k);
  if (!iter.value || exponent > 62) {
    res.capped = true;
    return res;
  }
  unsigned __int128 v = static_cast<unsigned __int128>(*iter.value)
                        << static_cast<unsigned>(exponent);
  if (v > cap) {
    res.capped = true;
    return res;
  }
  res.values.push_back(static_cast<std::uint64_t>(v));
  return res;
}

ProductSelection homogenize_product(const ProductColoring& coloring,
                                    const std::vector<int>& ms) {
  check_shape(coloring.k, coloring.sizes, ms);
  if (coloring.bits.size() != coloring.cells())
    throw std::invalid_argument("bit table size mismatch");
  ProductSelection sel = solve(coloring, ms);
  sel.verified = verify_product_selection(coloring, ms, sel);
  if (!sel.verified)
    throw InternalContradiction("selection failed re-verification");
  return sel;
}

bool verify_product_selection(const ProductColoring& coloring,
                              const std::vector<int>& ms,
                              const ProductSelection& sel) {
  if (sel.h.size() != coloring.sizes.size()) return false;
  for (std::size_t j = 0; j < sel.h.size(); ++j) {
    if (sel.h[j].size() != static_cast<std::size_t>(ms.at(j))) return false;
    if (!std::is_sorted(sel.h[j].begin(), sel.h[j].end())) return false;
    for (int v : sel.h[j])
      if (v < 0 || v >= coloring.sizes[j]) return false;
    if (std::adjacent_find(sel.h[j].begin(), sel.h[j].end()) != sel.h[j].end())
      return false;
  }

  bool ok = true;
  std::size_t n = coloring.sizes.size() - 1;
  for_each_combination(static_cast<int>(sel.h[0].size()), coloring.k,
                       [&](const std::vector<int>& idx) {
    if (!ok) return;
    std::vector<int> sub(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = sel.h[0][idx[i]];
    std::uint64_t j_rank = colex_rank(sub);

    std::vector<int> pos(n, 0);
    while (true) {
      std::vector<int> xs(n);
      for (std::size_t i = 0; i < n; ++i) xs[i] = sel.h[i + 1][pos[i]];
      if (coloring.color(j_rank, xs) != sel.color) {
        ok = false;
        return;
      }
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++pos[i] < static_cast<int>(sel.h[i + 1].size())) break;
        pos[i] = 0;
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  });
  return ok;
}

}  // namespace ramsey
