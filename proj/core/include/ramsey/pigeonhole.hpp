#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ramsey/creatures.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hales_jewett.hpp"

namespace ramsey {

// colorings act on truncated candidates: the locked head plus one new creature
using ColoringK1 = std::function<int(const std::vector<CreatureK1>&)>;
using ColoringK2 = std::function<int(const std::vector<CreatureK2>&)>;
using ColoringKN = std::function<int(const std::vector<CreatureKN>&)>;

template <class C>
struct A4Cert {
  std::vector<C> prefix;
  int k = 1;
  int color = 0;
  std::uint64_t checked = 0;
  bool verified = false;
};

using A4CertK1 = A4Cert<CreatureK1>;
using A4CertK2 = A4Cert<CreatureK2>;
using A4CertKN = A4Cert<CreatureKN>;

// all length-k truncations below t that lock r_{k-1}(t); the new creature
// starts right at the cut for the tight spaces, anywhere past it for the
// loose one
std::vector<std::vector<CreatureK1>> elements_2_10(
    const std::vector<CreatureK1>& t, int k, std::uint64_t cap = kSigmaCap);
std::vector<std::vector<CreatureK2>> elements_2_11(
    const std::vector<CreatureK2>& t, int k, std::uint64_t cap = kSigmaCap);
std::vector<std::vector<CreatureKN>> elements_2_13(
    const std::vector<CreatureKN>& t, int k, std::uint64_t cap = kSigmaCap);

// finite one-step homogenization: a prefix below t extending r_{k-1}(t)
// whose truncations all get one color. target_len counts the new creatures
A4CertK1 a4_example_2_10(const std::vector<CreatureK1>& t, int k,
                         const ColoringK1& coloring, int target_len);
A4CertK2 a4_example_2_11(const std::vector<CreatureK2>& t, int k,
                         const ColoringK2& coloring, int target_len);
A4CertKN a4_example_2_13(const std::vector<CreatureKN>& t, int k,
                         const ColoringKN& coloring, int target_len);

bool verify_a4(const A4CertK1& cert, const ColoringK1& coloring,
               std::uint64_t cap = kSigmaCap);
bool verify_a4(const A4CertK2& cert, const ColoringK2& coloring,
               std::uint64_t cap = kSigmaCap);
bool verify_a4(const A4CertKN& cert, const ColoringKN& coloring,
               std::uint64_t cap = kSigmaCap);

// collapse to the least a and the matching function; keeps bounds, u and i
CreatureK1 min_creature(const CreatureK1& x);

template <class C>
struct FusionResult {
  std::vector<C> prefix;
  std::vector<int> colors;  // one step color per input coloring
};

// chains one a4 step per coloring, diagonal style: step k homogenizes
// coloring k at cut k+1 on the previous prefix. Steps shrink the target
// until something fits; a step with no room at all aborts
FusionResult<CreatureK1> fusion(const std::vector<CreatureK1>& t,
                                const std::vector<ColoringK1>& cs, int budget);
FusionResult<CreatureK2> fusion(const std::vector<CreatureK2>& t,
                                const std::vector<ColoringK2>& cs, int budget);
FusionResult<CreatureKN> fusion(const std::vector<CreatureKN>& t,
                                const std::vector<ColoringKN>& cs, int budget);

// positional coloring d with one value per level on the recovered prefix
struct RecoverA {
  std::vector<CreatureK1> prefix;
  std::vector<int> colors;
  std::uint64_t checked = 0;
  bool verified = false;
};

RecoverA recover_conclusion_a(const std::vector<CreatureK1>& t,
                              const std::function<int(int, const Assignment&)>& d,
                              int levels);

struct RecoverBK1 {
  std::vector<CreatureK1> prefix;
  int color = 0;
  std::uint64_t checked = 0;
  bool verified = false;
};

// d keyed by the block index of t where the assignment starts
RecoverBK1 recover_conclusion_b(const std::vector<CreatureK1>& t,
                                const std::function<int(int, const Assignment&)>& d,
                                int levels);

struct RecoverBK2 {
  std::vector<CreatureK2> prefix;
  int color = 0;
  std::uint64_t checked = 0;
  bool verified = false;
};

RecoverBK2 recover_conclusion_b(const std::vector<CreatureK2>& t,
                                const std::function<int(const Assignment&)>& d,
                                int levels);

// compressed keys for the new creature of a truncation; decode rebuilds it
struct CodeK1 {
  int n = 0;
  int l = 0;
  std::vector<int> a;       // the chosen anchor values, sorted
  Assignment anchors;       // off-anchor block index -> pinned value there
  bool operator==(const CodeK1&) const = default;
};

CodeK1 encode_2_10(const std::vector<CreatureK1>& t, int k,
                   const CreatureK1& last);
CreatureK1 decode_2_10(const std::vector<CreatureK1>& t, int k,
                       const CodeK1& code);

struct CodeK2 {
  int start = 0;
  int n = 0;
  int l = 0;
  std::set<Assignment> val;
  bool operator==(const CodeK2&) const = default;
};

CodeK2 encode_2_11(const std::vector<CreatureK2>& t, int k,
                   const CreatureK2& last);
CreatureK2 decode_2_11(const std::vector<CreatureK2>& t, int k,
                       const CodeK2& code);

VariableWord encode_2_13(const std::vector<CreatureKN>& t, int k,
                         const CreatureKN& last);
CreatureKN decode_2_13(const std::vector<CreatureKN>& t, int k,
                       const VariableWord& w);

// canonical bytes, stable across runs; feed to hash_bytes for colorings
std::string element_key(const std::vector<CreatureK1>& x);
std::string element_key(const std::vector<CreatureK2>& x);
std::string element_key(const std::vector<CreatureKN>& x);

ColoringK1 seeded_coloring_k1(std::uint64_t seed);
ColoringK2 seeded_coloring_k2(std::uint64_t seed);
ColoringKN seeded_coloring_kn(std::uint64_t seed);

}  // namespace ramsey
