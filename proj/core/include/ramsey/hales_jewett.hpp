#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramsey {

// variable symbol inside VariableWord::symbols
inline constexpr int kVar = -1;

struct Word {
  int alphabet = 0;
  std::vector<int> letters;
  bool operator==(const Word&) const = default;
};

// at least one symbol is kVar
struct VariableWord {
  int alphabet = 0;
  std::vector<int> symbols;
  bool operator==(const VariableWord&) const = default;
};

void validate_word(const Word& w);
void validate_variable_word(const VariableWord& x);

std::string to_string(const Word& w);
std::string to_string(const VariableWord& x);

using WordOrVariable = std::variant<Word, VariableWord>;

// every v in x replaced by lambda; a Word unless lambda is kVar
WordOrVariable substitute(const VariableWord& x, int lambda);

// concatenation of substitutions, variable iff some lambda is kVar
WordOrVariable concat_span(const std::vector<VariableWord>& xs,
                           const std::vector<int>& lambdas);

// base-N value of the letters, most significant first
std::uint64_t word_rank(const Word& w);
Word word_unrank(int alphabet, int length, std::uint64_t rank);

// first monochromatic combinatorial line among variable words of the given
// length, ordered lexicographically with v as the largest symbol; the
// coloring is indexed by word_rank
std::optional<VariableWord> hj_certify(
    int alphabet, int length, const std::vector<std::uint8_t>& coloring);

struct HjNumberResult {
  std::optional<int> value;
  bool capped = false;
  // first coloring with no monochromatic line at the longest length that
  // admits one (value - 1, or the cap when capped); empty for value = 1
  int counterexample_length = 0;
  std::vector<std::uint8_t> counterexample;
};

HjNumberResult hj_number(int alphabet, int colors, int cap);

struct SpanResult {
  std::vector<std::size_t> indices;
  std::vector<VariableWord> words;
  int color = 0;
};

using WordOracle = std::function<int(const VariableWord&)>;

// first length-p subsequence of the pool, in lexicographic index order, whose
// spans with at least one lambda = v all get one oracle color; with
// require_prefix_closed the same constant covers every prefix length as well.
// total_length_cap > 0 skips candidates whose summed word length exceeds it,
// eval_cap > 0 bounds oracle calls and throws EnumerationGuardExceeded past it
std::optional<SpanResult> find_mono_span(const WordOracle& oracle,
                                         const std::vector<VariableWord>& pool,
                                         int p,
                                         bool require_prefix_closed = false,
                                         std::size_t total_length_cap = 0,
                                         std::uint64_t eval_cap = 0);

bool verify_mono_span(const WordOracle& oracle, const SpanResult& span,
                      bool require_prefix_closed = false);

}  // namespace ramsey
