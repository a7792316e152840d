#include "ramsey/arrow.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "ramsey/combinatorics.hpp"

namespace ramsey {

namespace {

// cap on the m-subset mask table; past this the scan is hopeless anyway
constexpr std::uint64_t kMaskGuard = 1ull << 20;

// one mask per m-subset: the k-subset ranks it contains
std::vector<std::uint64_t> build_masks(int r, int m, int k) {
  std::vector<std::uint64_t> masks;
  for_each_combination(r, m, [&](const std::vector<int>& h) {
    std::uint64_t mask = 0;
    for_each_combination(m, k, [&](const std::vector<int>& idx) {
      std::vector<int> sub(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = h[idx[i]];
      mask |= 1ull << colex_rank(sub);
    });
    masks.push_back(mask);
  });
  return masks;
}

bool has_mono(std::uint64_t c, const std::vector<std::uint64_t>& masks) {
  for (std::uint64_t mask : masks) {
    std::uint64_t bits = c & mask;
    if (bits == 0 || bits == mask) return true;
  }
  return false;
}

// first coloring in [begin, end) with no monochromatic m-subset
std::optional<std::uint64_t> scan_range(std::uint64_t begin, std::uint64_t end,
                                        const std::vector<std::uint64_t>& masks,
                                        const std::atomic<std::uint64_t>* best) {
  for (std::uint64_t c = begin; c < end; ++c) {
    if (best && (c & 0xfff) == 0 && best->load(std::memory_order_relaxed) < begin)
      return std::nullopt;
    if (!has_mono(c, masks)) return c;
  }
  return std::nullopt;
}

}  // namespace

SubsetColoring coloring_from_index(int r, int k, std::uint64_t index) {
  std::uint64_t count = binomial(r, k);
  if (count > 62) throw std::invalid_argument("coloring index cap exceeded");
  SubsetColoring c;
  c.r = r;
  c.k = k;
  c.bits.resize(count);
  for (std::uint64_t j = 0; j < count; ++j)
    c.bits[j] = static_cast<std::uint8_t>((index >> j) & 1);
  return c;
}

ArrowCertificate certify_arrow(int r, int m, int k, std::uint64_t budget,
                               int jobs) {
  if (r < 0 || m < 1 || k < 1) throw std::invalid_argument("bad arrow query");
  ArrowCertificate cert;
  cert.query = {r, m, k};

  std::uint64_t subsets = binomial(r, k);
  if (subsets > 62 || (m <= r && binomial(r, m) > kMaskGuard)) {
    cert.verdict = ArrowVerdict::cap_exceeded;
    return cert;
  }
  std::uint64_t total = 1ull << subsets;
  std::uint64_t limit = total < budget ? total : budget;
  std::vector<std::uint64_t> masks = build_masks(r, m, k);

  std::optional<std::uint64_t> found;
  if (jobs <= 1 || limit < 4096) {
    found = scan_range(0, limit, masks, nullptr);
    cert.checked = found ? *found + 1 : limit;
  } else {
    std::atomic<std::uint64_t> best{~0ull};
    std::uint64_t chunk = (limit + jobs - 1) / jobs;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t lo = chunk * t;
      std::uint64_t hi = lo + chunk < limit ? lo + chunk : limit;
      if (lo >= hi) break;
      pool.emplace_back([lo, hi, &masks, &best] {
        auto hit = scan_range(lo, hi, masks, &best);
        if (hit) {
          std::uint64_t cur = best.load();
          while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    std::uint64_t b = best.load();
    if (b != ~0ull) found = b;
    cert.checked = found ? *found + 1 : limit;
  }

  if (found) {
    cert.verdict = ArrowVerdict::fails;
    cert.witness_index = *found;
    cert.witness = coloring_from_index(r, k, *found);
  } else if (limit == total) {
    cert.verdict = ArrowVerdict::holds;
  } else {
    cert.verdict = ArrowVerdict::cap_exceeded;  // budget ran out mid-scan
  }
  return cert;
}

std::optional<std::vector<int>> find_mono_m_subset(const SubsetColoring& c,
                                                   int m) {
  std::optional<std::vector<int>> result;
  for_each_combination(c.r, m, [&](const std::vector<int>& h) {
    if (result) return;
    int color = -1;
    bool mono = true;
    for_each_combination(m, c.k, [&](const std::vector<int>& idx) {
      if (!mono) return;
      std::vector<int> sub(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = h[idx[i]];
      int bit = c.bits.at(colex_rank(sub));
      if (color < 0)
        color = bit;
      else if (bit != color)
        mono = false;
    });
    if (mono) result = h;
  });
  return result;
}

LeastArrowResult least_arrow(int m, int k, int cap_r, std::uint64_t budget,
                             int jobs) {
  LeastArrowResult res;
  for (int r = m; r <= cap_r; ++r) {
    ArrowCertificate cert = certify_arrow(r, m, k, budget, jobs);
    if (cert.verdict == ArrowVerdict::holds) {
      res.r = r;
      return res;
    }
    if (cert.verdict == ArrowVerdict::cap_exceeded) {
      res.capped = true;
      return res;
    }
  }
  return res;
}

IterateArrowResult iterate_arrow(int iterations, int m, int k, int cap_r,
                                 std::uint64_t budget, int jobs) {
  IterateArrowResult res;
  int current = m;
  for (int step = 0; step < iterations; ++step) {
    LeastArrowResult la = least_arrow(current, k, cap_r, budget, jobs);
    if (!la.r) {
      res.capped = la.capped;
      return res;
    }
    current = *la.r;
    res.trace.push_back(current);
  }
  res.value = current;
  return res;
}

}  // namespace ramsey
