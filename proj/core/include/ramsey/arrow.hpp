#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

// r arrows m with exponent k: every 2-coloring of the k-subsets of {0..r-1}
// admits an m-subset whose k-subsets all got one color. A coloring is an
// integer whose bit j colors the subset of colex rank j, so the whole space
// is enumerable while C(r,k) <= 62.

struct ArrowQuery {
  int r = 0;
  int m = 1;
  int k = 1;
};

enum class ArrowVerdict { holds, fails, cap_exceeded };

struct SubsetColoring {
  int r = 0;
  int k = 0;
  std::vector<std::uint8_t> bits;  // one entry per k-subset, colex order
};

struct ArrowCertificate {
  ArrowQuery query;
  ArrowVerdict verdict = ArrowVerdict::cap_exceeded;
  std::uint64_t witness_index = 0;        // meaningful when verdict == fails
  std::optional<SubsetColoring> witness;  // the failing coloring itself
  std::uint64_t checked = 0;              // colorings examined
};

inline constexpr std::uint64_t kNoBudget = ~0ull;

SubsetColoring coloring_from_index(int r, int k, std::uint64_t index);

// Exhaustive scan in coloring order. "fails" is sound at any budget (the
// witness re-checks); "holds" is only reported after a complete scan.
ArrowCertificate certify_arrow(int r, int m, int k,
                               std::uint64_t budget = kNoBudget, int jobs = 1);

// Least colex-ranked monochromatic m-subset of a concrete coloring, if any.
// Direct scan, no masks; this is the re-verification path.
std::optional<std::vector<int>> find_mono_m_subset(const SubsetColoring& c, int m);

struct LeastArrowResult {
  std::optional<int> r;   // least r in [m, cap_r] that arrows, if any
  bool capped = false;    // ran into the bit cap or the budget, result unknown
};

LeastArrowResult least_arrow(int m, int k, int cap_r,
                             std::uint64_t budget = kNoBudget, int jobs = 1);

struct IterateArrowResult {
  std::optional<int> value;
  std::vector<int> trace;  // value after each completed step
  bool capped = false;
};

// iterations-fold application of least_arrow starting from m
IterateArrowResult iterate_arrow(int iterations, int m, int k, int cap_r,
                                 std::uint64_t budget = kNoBudget, int jobs = 1);

}  // namespace ramsey
