#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// C(n,k); 0 outside the triangle, throws std::overflow_error past uint64.
std::uint64_t binomial(int n, int k);

// Colex rank of a strictly increasing subset: sum of C(a_i, i+1) over
// 0-based positions. Universe size is irrelevant, which is what makes
// truncated tables line up with full ones.
std::uint64_t colex_rank(const std::vector<int>& subset);
std::vector<int> colex_unrank(std::uint64_t rank, int k);

// k-subsets of {0..n-1} in colex order. first_combination gives {0..k-1};
// next_combination steps in place and returns false after the last one.
std::vector<int> first_combination(int k);
bool next_combination(std::vector<int>& a, int n);
void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn);

// Deterministic RNG. Every seeded path in the library goes through this,
// never through std::hash or distributions.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // modulo, bias acceptable here
  int range(int lo, int hi);                 // inclusive ends
};

// FNV-1a over bytes, splitmix-finalized. Stable across platforms.
std::uint64_t hash_bytes(std::string_view data, std::uint64_t seed = 0);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

// bit i lives at byte i/8, position i%8 (LSB first)
std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes,
                                      std::size_t count);

}  // namespace ramsey
