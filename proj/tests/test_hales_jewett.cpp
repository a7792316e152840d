#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/errors.hpp"
#include "ramsey/hales_jewett.hpp"

using namespace ramsey;

namespace {

// independent line generator: choose a nonempty set of v positions via
// bitmask, letters everywhere else
std::vector<VariableWord> oracle_all_lines(int n, int len) {
  std::vector<VariableWord> out;
  for (int mask = 1; mask < (1 << len); ++mask) {
    int free_positions = len - __builtin_popcount(mask);
    std::vector<int> letters(free_positions, 0);
    while (true) {
      std::vector<int> symbols(len);
      int li = 0;
      for (int i = 0; i < len; ++i)
        symbols[i] = (mask >> i) & 1 ? kVar : letters[li++];
      out.push_back(VariableWord{n, symbols});
      int j = free_positions - 1;
      while (j >= 0 && letters[j] == n - 1) --j;
      if (j < 0) break;
      ++letters[j];
      for (int i = j + 1; i < free_positions; ++i) letters[i] = 0;
    }
  }
  // order by lex with v treated as the largest symbol
  auto key = [](int s) { return s == kVar ? 1 << 20 : s; };
  std::sort(out.begin(), out.end(),
            [&](const VariableWord& a, const VariableWord& b) {
              return std::lexicographical_compare(
                  a.symbols.begin(), a.symbols.end(), b.symbols.begin(),
                  b.symbols.end(),
                  [&](int x, int y) { return key(x) < key(y); });
            });
  return out;
}

bool oracle_line_mono(const VariableWord& x,
                      const std::vector<std::uint8_t>& coloring) {
  std::set<int> colors;
  for (int lambda = 0; lambda < x.alphabet; ++lambda) {
    std::uint64_t r = 0;
    for (int s : x.symbols)
      r = r * x.alphabet + static_cast<std::uint64_t>(s == kVar ? lambda : s);
    colors.insert(coloring.at(r));
  }
  return colors.size() == 1;
}

}  // namespace

TEST_CASE("substitution") {
  VariableWord x{2, {kVar, 0, kVar}};
  auto w = std::get<Word>(substitute(x, 1));
  CHECK(w.letters == std::vector<int>{1, 0, 1});
  CHECK(to_string(w) == "101");

  CHECK(std::get<VariableWord>(substitute(VariableWord{2, {kVar}}, kVar)) ==
        VariableWord{2, {kVar}});

  auto u = std::get<Word>(substitute(VariableWord{3, {kVar, kVar, 1}}, 2));
  CHECK(to_string(u) == "221");

  CHECK_THROWS_AS(substitute(x, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_variable_word(VariableWord{2, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("concat_span") {
  VariableWord v{2, {kVar}};
  VariableWord v0{2, {kVar, 0}};
  VariableWord v1{2, {kVar, 1}};

  auto a = concat_span({v, v}, {0, kVar});
  CHECK(to_string(std::get<VariableWord>(a)) == "0v");

  auto b = concat_span({v0}, {1});
  CHECK(to_string(std::get<Word>(b)) == "10");

  auto c = concat_span({v, v1}, {kVar, 0});
  CHECK(to_string(std::get<VariableWord>(c)) == "v01");

  // all lambdas = v is plain concatenation
  auto d = concat_span({v0, v1}, {kVar, kVar});
  CHECK(to_string(std::get<VariableWord>(d)) == "v0v1");

  CHECK_THROWS_AS(concat_span({v}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(concat_span({}, {}), std::invalid_argument);
}

TEST_CASE("word ranks") {
  for (std::uint64_t r = 0; r < 8; ++r) {
    Word w = word_unrank(2, 3, r);
    CHECK(word_rank(w) == r);
  }
  CHECK(word_rank(Word{3, {2, 1}}) == 7);
  CHECK(word_rank(Word{2, {1, 0}}) == 2);
  CHECK_THROWS_AS(word_unrank(2, 2, 4), std::invalid_argument);
}

TEST_CASE("hj_certify finds the first line") {
  // c(00)=c(01)=0, rest 1: 0v is the first monochromatic line
  auto line = hj_certify(2, 2, {0, 0, 1, 1});
  REQUIRE(line.has_value());
  CHECK(to_string(*line) == "0v");

  CHECK_FALSE(hj_certify(2, 1, {0, 1}).has_value());

  // against the independent generator on every coloring, two alphabets
  for (int n : {2, 3}) {
    auto lines = oracle_all_lines(n, 2);
    std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
    for (std::uint64_t idx = 0; idx < (1ull << cells); ++idx) {
      std::vector<std::uint8_t> coloring(cells);
      for (std::uint64_t j = 0; j < cells; ++j)
        coloring[j] = (idx >> j) & 1;
      std::optional<VariableWord> expect;
      for (const auto& x : lines)
        if (oracle_line_mono(x, coloring)) {
          expect = x;
          break;
        }
      auto got = hj_certify(n, 2, coloring);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("hj_number") {
  auto one = hj_number(1, 2, 3);
  CHECK(one.value == 1);
  CHECK(one.counterexample.empty());

  auto two = hj_number(2, 2, 5);
  CHECK(two.value == 2);
  CHECK(two.counterexample_length == 1);
  CHECK(two.counterexample == std::vector<std::uint8_t>{1, 0});

  auto big = hj_number(3, 2, 2);
  CHECK(big.capped);
  CHECK_FALSE(big.value.has_value());
  CHECK(big.counterexample_length == 2);
  // the exhibited coloring really has no monochromatic line
  for (const auto& x : oracle_all_lines(3, 2))
    CHECK_FALSE(oracle_line_mono(x, big.counterexample));

  // alphabet 3 at length 3 already has 2^27 colorings
  CHECK_THROWS_AS(hj_number(3, 2, 30), EnumerationGuardExceeded);
}

TEST_CASE("find_mono_span basics") {
  std::vector<VariableWord> pool{{2, {kVar}},
                                 {2, {kVar, 0}},
                                 {2, {0, kVar}},
                                 {2, {1, kVar}},
                                 {2, {kVar, 1}}};
  WordOracle constant = [](const VariableWord&) { return 1; };
  auto span = find_mono_span(constant, pool, 3);
  REQUIRE(span.has_value());
  CHECK(span->indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(span->color == 1);
  CHECK(verify_mono_span(constant, *span));
  CHECK(verify_mono_span(constant, *span, true));

  // oracle keyed to the leading symbol: pairs starting with a v-initial
  // word cannot be constant, the first letter-initial pair can
  WordOracle head = [](const VariableWord& x) {
    return x.symbols.front() == kVar ? 1 : 0;
  };
  std::vector<VariableWord> mixed{{2, {kVar}}, {2, {0, kVar}}, {2, {kVar, 1}}};
  auto picked = find_mono_span(head, mixed, 2);
  REQUIRE(picked.has_value());
  CHECK(picked->indices == std::vector<std::size_t>{1, 2});
  CHECK(picked->color == 0);
  CHECK(verify_mono_span(head, *picked, true));

  // adversarial oracle, pool too small for the span
  WordOracle adversary = [](const VariableWord& x) {
    return static_cast<int>(x.symbols.size());
  };
  CHECK_FALSE(find_mono_span(adversary, {{2, {kVar}}}, 2).has_value());
}

TEST_CASE("prefix closure is stricter") {
  // length parity distinguishes the length-1 prefix from the full span
  WordOracle parity = [](const VariableWord& x) {
    return static_cast<int>(x.symbols.size() % 2);
  };
  std::vector<VariableWord> pool{{2, {kVar}}, {2, {kVar}}};
  auto loose = find_mono_span(parity, pool, 2);
  REQUIRE(loose.has_value());
  CHECK(loose->color == 0);
  CHECK(verify_mono_span(parity, *loose));
  CHECK_FALSE(verify_mono_span(parity, *loose, true));
  CHECK_FALSE(find_mono_span(parity, pool, 2, true).has_value());

  // doctored color fails re-verification
  SpanResult bad = *loose;
  bad.color = 1;
  CHECK_FALSE(verify_mono_span(parity, bad));
}

TEST_CASE("total length cap prunes oversized spans") {
  WordOracle constant = [](const VariableWord&) { return 0; };
  std::vector<VariableWord> pool{{2, {kVar}}, {2, {0, kVar}}, {2, {1, kVar}}};

  // lengths 1+2 fit a cap of 3, so the first pair still wins
  auto fit = find_mono_span(constant, pool, 2, false, 3);
  REQUIRE(fit.has_value());
  CHECK(fit->indices == std::vector<std::size_t>{0, 1});

  // no pair fits a cap of 2 even though every span is monochromatic
  CHECK_FALSE(find_mono_span(constant, pool, 2, false, 2).has_value());

  // cap 0 keeps the old behaviour
  CHECK(find_mono_span(constant, pool, 3, false).has_value());
  CHECK_FALSE(find_mono_span(constant, pool, 3, false, 4).has_value());
  CHECK(find_mono_span(constant, pool, 3, false, 5).has_value());
}
