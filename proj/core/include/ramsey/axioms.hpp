#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/creatures.hpp"
#include "ramsey/pigeonhole.hpp"

namespace ramsey {

// canonical dense prefixes behind the finite a4 batteries
std::vector<CreatureK1> dense_prefix_2_10(int depth);
std::vector<CreatureK2> dense_prefix_2_11(int depth);
std::vector<CreatureKN> dense_prefix_2_13(int alphabet, int depth);

template <class C>
struct LeFinPair {
  std::vector<C> b;
  std::vector<C> a;
};

// one seeded fragment: a long prefix, a sibling reshaped in the last block,
// the truncation table, and composed pairs expected to sit below the prefix
template <class C>
struct FragmentSample {
  std::string example;
  std::uint64_t seed = 0;
  std::vector<C> t;
  std::vector<C> t_sib;
  std::vector<std::vector<C>> truncations;
  std::vector<C> composites;
  std::vector<LeFinPair<C>> pairs;
};

using FragmentK1 = FragmentSample<CreatureK1>;
using FragmentK2 = FragmentSample<CreatureK2>;
using FragmentKN = FragmentSample<CreatureKN>;

FragmentK1 sample_2_10(std::uint64_t seed);
FragmentK2 sample_2_11(std::uint64_t seed);
FragmentKN sample_2_13(std::uint64_t seed);

struct AxiomReport {
  std::string axiom;
  std::string example;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notices;
  bool passed() const { return violations.empty(); }
};

AxiomReport check_a1(const FragmentK1& s);
AxiomReport check_a1(const FragmentK2& s);
AxiomReport check_a1(const FragmentKN& s);

AxiomReport check_a2(const FragmentK1& s);
AxiomReport check_a2(const FragmentK2& s);
AxiomReport check_a2(const FragmentKN& s);

AxiomReport check_a3(const FragmentK1& s);
AxiomReport check_a3(const FragmentK2& s);
AxiomReport check_a3(const FragmentKN& s);

// everything sitting below a prefix, segmented into boundary runs; the
// count is replayed against the closed composition laws inside check_a2
std::vector<std::vector<CreatureK1>> cone_below(
    const std::vector<CreatureK1>& a, std::uint64_t cap = kSigmaCap);
std::vector<std::vector<CreatureK2>> cone_below(
    const std::vector<CreatureK2>& a, std::uint64_t cap = kSigmaCap);
std::vector<std::vector<CreatureKN>> cone_below(
    const std::vector<CreatureKN>& a, std::uint64_t cap = kSigmaCap);

// three reports per seed, a1 a2 a3, merged in seed order
std::vector<AxiomReport> axiom_battery(const std::string& example,
                                       std::uint64_t first_seed, int count,
                                       int jobs = 1);

struct A4Aggregate {
  std::string example;
  int depth = 0;
  int k = 1;
  int target = 0;
  int runs = 0;
  int verified = 0;
  std::vector<std::string> shortfalls;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// seeded colorings against the dense prefix of one example; a miss at the
// requested target retries smaller ones and lands in shortfalls; only a
// certificate that fails re-verification counts as a violation
A4Aggregate check_a4_finite(const std::string& example,
                            const std::vector<std::uint64_t>& seeds, int depth,
                            int k, int target = 0, int jobs = 1);

}  // namespace ramsey
