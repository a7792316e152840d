#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/hales_jewett.hpp"

namespace ramsey {

// finite partial function on naturals
using Assignment = std::map<int, int>;

// norms are kept as integers; the log2 view only ever feeds comparisons

// H(n) = n+1; dis = (u, i, A), val of functions on u with f(j) <= j and
// A = {f(i) : f in val}, nor = log2|A|
struct CreatureK1 {
  int m_dn = 0;
  int m_up = 0;
  std::vector<int> u;
  int i = 0;
  std::set<int> a;
  std::set<Assignment> val;
  bool operator==(const CreatureK1&) const = default;
};

// H(n) = 2; dis a nonempty position set, val of 0/1 patterns on dis,
// nor = log2|val|
struct CreatureK2 {
  int m_dn = 0;
  int m_up = 0;
  std::vector<int> dis;
  std::set<Assignment> val;
  bool operator==(const CreatureK2&) const = default;
};

// H(n) = N; dis = (X, phi) with X a proper subset of the block, val derived:
// the N total extensions constant off X; nor = m_up
struct CreatureKN {
  int alphabet = 1;
  int m_dn = 0;
  int m_up = 0;
  std::vector<int> x;
  Assignment phi;
  bool operator==(const CreatureKN&) const = default;
};

std::vector<std::string> validate(const CreatureK1& t);
std::vector<std::string> validate(const CreatureK2& t);
std::vector<std::string> validate(const CreatureKN& t);

int nor_size(const CreatureK1& t);
int nor_size(const CreatureK2& t);
int nor_size(const CreatureKN& t);

std::set<Assignment> kn_val(const CreatureKN& t);

// positions of the block rendered as letters, v on the free positions
std::string describe(const CreatureKN& t);

// prefixes chain tightly (2.10, 2.13) or with gaps allowed (2.11)
std::vector<std::string> validate_prefix(const std::vector<CreatureK1>& ts);
std::vector<std::string> validate_prefix(const std::vector<CreatureK2>& ts);
std::vector<std::string> validate_prefix(const std::vector<CreatureKN>& ts);

// one member of the subcomposition: l* plus one block-tuple per kept function
struct SigmaChoiceK1 {
  int l_star = 0;
  std::vector<std::vector<Assignment>> members;
};

struct SigmaChoiceK2 {
  int l_star = 0;
  std::set<Assignment> val_subset;
};

// per block: a letter fills it, kVar keeps it
struct SigmaChoiceKN {
  std::vector<int> fills;
};

CreatureK1 sigma_compose(const std::vector<CreatureK1>& parts,
                         const SigmaChoiceK1& choice);
CreatureK2 sigma_compose(const std::vector<CreatureK2>& parts,
                         const SigmaChoiceK2& choice);
CreatureKN sigma_compose(const std::vector<CreatureKN>& parts,
                         const SigmaChoiceKN& choice);

inline constexpr std::uint64_t kSigmaCap = 1000000;

std::vector<CreatureK1> sigma_enumerate(const std::vector<CreatureK1>& parts,
                                        std::uint64_t cap = kSigmaCap);
std::vector<CreatureK2> sigma_enumerate(const std::vector<CreatureK2>& parts,
                                        std::uint64_t cap = kSigmaCap);
std::vector<CreatureKN> sigma_enumerate(const std::vector<CreatureKN>& parts,
                                        std::uint64_t cap = kSigmaCap);

bool sigma_member(const CreatureK1& s, const std::vector<CreatureK1>& parts);
bool sigma_member(const CreatureK2& s, const std::vector<CreatureK2>& parts);
bool sigma_member(const CreatureKN& s, const std::vector<CreatureKN>& parts);

bool le_fin(const std::vector<CreatureK1>& b, const std::vector<CreatureK1>& a);
bool le_fin(const std::vector<CreatureK2>& b, const std::vector<CreatureK2>& a);
bool le_fin(const std::vector<CreatureKN>& b, const std::vector<CreatureKN>& a);

// least n with b below the n-prefix of X; empty means none at this length
template <class C>
std::optional<int> depth(const std::vector<C>& u, const std::vector<C>& X) {
  for (std::size_t n = 0; n <= X.size(); ++n) {
    std::vector<C> head(X.begin(), X.begin() + n);
    if (le_fin(u, head)) return static_cast<int>(n);
  }
  return std::nullopt;
}

enum class PosMode { tight, loose };

std::set<Assignment> pos_enumerate(const std::vector<CreatureK1>& prefix,
                                   PosMode mode, std::uint64_t cap = kSigmaCap);
std::set<Assignment> pos_enumerate(const std::vector<CreatureK2>& prefix,
                                   PosMode mode, std::uint64_t cap = kSigmaCap);
std::set<Assignment> pos_enumerate(const std::vector<CreatureKN>& prefix,
                                   PosMode mode, std::uint64_t cap = kSigmaCap);

// |A| = l+1 with exactly one function per a
bool in_dense_r1(const std::vector<CreatureK1>& prefix);
// |val| = l+1
bool in_dense_r2(const std::vector<CreatureK2>& prefix);

std::vector<CreatureK1> dense_embed(const std::vector<CreatureK1>& source,
                                    int target_len);
std::vector<CreatureK2> dense_embed(const std::vector<CreatureK2>& source,
                                    int target_len);

// per-block symbols: kept block is v, filled block is its letter
VariableWord sigma_to_word(const CreatureKN& s,
                           const std::vector<CreatureKN>& blocks);
CreatureKN word_to_sigma(const std::vector<CreatureKN>& blocks,
                         const VariableWord& w);

}  // namespace ramsey
