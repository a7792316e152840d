#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

struct LeveledFamily {
  std::vector<int> sizes;
  int depth() const { return static_cast<int>(sizes.size()); }
  bool operator==(const LeveledFamily&) const = default;
};

// cells keyed by (n, l <= n, J in [K_l]^k, x over the remaining coordinates
// j <= n). Layout: blocks ordered by n then l; inside a block the colex rank
// of J is slowest, then the x coordinates ascending with the last fastest.
struct VaryingIndexColoring {
  int k = 1;
  LeveledFamily family;
  std::vector<std::uint8_t> table;

  std::size_t cells() const;
  std::size_t cell_index(int n, int l, std::uint64_t j_rank,
                         const std::vector<int>& x) const;
  int color(int n, int l, const std::vector<int>& J,
            const std::vector<int>& x) const;
};

// plain products: cells keyed by (n, x over all j <= n), same ordering
struct ProductLevelColoring {
  LeveledFamily family;
  std::vector<std::uint8_t> table;

  std::size_t cells() const;
  std::size_t cell_index(int n, const std::vector<int>& x) const;
  int color(int n, const std::vector<int>& x) const;
};

VaryingIndexColoring seeded_varying_coloring(int k, LeveledFamily family,
                                             std::uint64_t seed);
ProductLevelColoring seeded_product_level_coloring(LeveledFamily family,
                                                   std::uint64_t seed);

enum class TreeMode { varying, fixed_block, dplt };

// interleaving l_0 <= n_0 < l_1 <= n_1 < ...; H_j singleton off L
struct TreeCertificate {
  TreeMode mode = TreeMode::varying;
  int k = 0;
  std::vector<int> ms;
  std::vector<int> L;
  std::vector<int> N;
  std::vector<std::vector<int>> H;
  int color = 0;
  bool verified = false;
};

// targets = (|L|, |N|); first certificate in lexicographic order over the
// merged interleaving sequence, then over H level by level
TreeCertificate homogenize_varying(const std::vector<int>& ms,
                                   const VaryingIndexColoring& coloring,
                                   std::pair<int, int> targets);

// special index pinned to L[0]; sizes (m0, r+1, r+2, ...)
TreeCertificate homogenize_fixed_block(int m0, int r,
                                       const VaryingIndexColoring& coloring,
                                       std::pair<int, int> targets);

TreeCertificate homogenize_dplt(const std::vector<int>& ms,
                                const ProductLevelColoring& coloring,
                                std::pair<int, int> targets);

bool verify_tree(const VaryingIndexColoring& coloring,
                 const TreeCertificate& cert);
bool verify_tree(const ProductLevelColoring& coloring,
                 const TreeCertificate& cert);

}  // namespace ramsey
