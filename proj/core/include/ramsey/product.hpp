#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// 2-coloring of [K_0]^k x K_1 x ... x K_n, stored row-major with the
// k-subset colex rank as the slowest axis and x_n as the fastest.
struct ProductColoring {
  int k = 1;
  std::vector<int> sizes;
  std::vector<std::uint8_t> bits;

  std::uint64_t cells() const;
  // xs holds the coordinates for levels 1..n, in order
  int color(std::uint64_t j_rank, const std::vector<int>& xs) const;
};

ProductColoring seeded_product_coloring(int k, const std::vector<int>& sizes,
                                        std::uint64_t seed);

struct SBoundResult {
  std::vector<std::uint64_t> values;
  bool capped = false;  // hit the value cap or an arrow cap; values is a prefix
};

// the sufficient-size recursion: first value from least_arrow, then
// m_n * 2^N with N counting the tuples the stabilization will process
SBoundResult s_bound(int k, const std::vector<int>& ms,
                     std::uint64_t cap = 1ull << 40);

// the two stated small-n variants; n >= 2 is not defined
SBoundResult s_kn_bound(int k, int n, const std::vector<int>& ms,
                        std::uint64_t cap = 1ull << 40);

struct ProductSelection {
  std::vector<std::vector<int>> h;
  int color = 0;
  bool verified = false;
};

// Stabilize-and-recurse. Throws ShapeTooSmall when the per-level gate
// |K_j| >= m_j * 2^(tuple count of the j-prefix) fails; that gate equals the
// s_bound table when the shape matches it exactly.
ProductSelection homogenize_product(const ProductColoring& coloring,
                                    const std::vector<int>& ms);

// pure enumeration, the oracle side
bool verify_product_selection(const ProductColoring& coloring,
                              const std::vector<int>& ms,
                              const ProductSelection& sel);

}  // namespace ramsey
