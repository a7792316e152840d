#include "ramsey/hales_jewett.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t kEnumGuard = 1ull << 26;

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t clamp) {
  unsigned __int128 v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > clamp) return clamp + 1;
  }
  return static_cast<std::uint64_t>(v);
}

char symbol_char(int s) {
  if (s == kVar) return 'v';
  if (s < 0 || s > 9)
    throw std::invalid_argument("letters past 9 have no digit form");
  return static_cast<char>('0' + s);
}

// next symbol string in lex order with v largest; false once exhausted
bool next_symbols(std::vector<int>& s, int alphabet) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == kVar) {
      s[i] = 0;
      continue;
    }
    ++s[i];
    if (s[i] == alphabet) s[i] = kVar;
    return true;
  }
  return false;
}

bool line_is_mono(const VariableWord& x,
                  const std::vector<std::uint8_t>& coloring) {
  int seen = -1;
  for (int lambda = 0; lambda < x.alphabet; ++lambda) {
    const Word w = std::get<Word>(substitute(x, lambda));
    int color = coloring.at(word_rank(w));
    if (seen < 0)
      seen = color;
    else if (color != seen)
      return false;
  }
  return true;
}

// all lambda tuples of the given length with at least one v share one oracle
// color; reports it through `color` (or checks against it when preset >= 0)
bool span_constant(const WordOracle& oracle,
                   const std::vector<VariableWord>& xs, std::size_t length,
                   int alphabet, int& color) {
  std::vector<int> lambdas(length, 0);
  std::vector<VariableWord> prefix(xs.begin(), xs.begin() + length);
  while (true) {
    bool has_var = std::find(lambdas.begin(), lambdas.end(), kVar) !=
                   lambdas.end();
    if (has_var) {
      auto out = concat_span(prefix, lambdas);
      int c = oracle(std::get<VariableWord>(out));
      if (color < 0)
        color = c;
      else if (c != color)
        return false;
    }
    if (!next_symbols(lambdas, alphabet)) return true;
  }
}

}  // namespace

void validate_word(const Word& w) {
  if (w.alphabet < 1) throw std::invalid_argument("alphabet must be positive");
  for (int l : w.letters)
    if (l < 0 || l >= w.alphabet)
      throw std::invalid_argument("letter out of alphabet");
}

void validate_variable_word(const VariableWord& x) {
  if (x.alphabet < 1) throw std::invalid_argument("alphabet must be positive");
  bool has_var = false;
  for (int s : x.symbols) {
    if (s == kVar)
      has_var = true;
    else if (s < 0 || s >= x.alphabet)
      throw std::invalid_argument("symbol out of alphabet");
  }
  if (!has_var) throw std::invalid_argument("variable word needs a v");
}

std::string to_string(const Word& w) {
  std::string out;
  for (int l : w.letters) out.push_back(symbol_char(l));
  return out;
}

std::string to_string(const VariableWord& x) {
  std::string out;
  for (int s : x.symbols) out.push_back(symbol_char(s));
  return out;
}

WordOrVariable substitute(const VariableWord& x, int lambda) {
  validate_variable_word(x);
  if (lambda == kVar) return x;
  if (lambda < 0 || lambda >= x.alphabet)
    throw std::invalid_argument("substituted letter out of alphabet");
  Word w;
  w.alphabet = x.alphabet;
  w.letters.reserve(x.symbols.size());
  for (int s : x.symbols) w.letters.push_back(s == kVar ? lambda : s);
  return w;
}

WordOrVariable concat_span(const std::vector<VariableWord>& xs,
                           const std::vector<int>& lambdas) {
  if (xs.size() != lambdas.size())
    throw std::invalid_argument("span length mismatch");
  if (xs.empty()) throw std::invalid_argument("empty span");
  int alphabet = xs.front().alphabet;
  bool variable = false;
  std::vector<int> symbols;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].alphabet != alphabet)
      throw std::invalid_argument("mixed alphabets in span");
    auto piece = substitute(xs[i], lambdas[i]);
    if (std::holds_alternative<VariableWord>(piece)) {
      variable = true;
      const auto& p = std::get<VariableWord>(piece);
      symbols.insert(symbols.end(), p.symbols.begin(), p.symbols.end());
    } else {
      const auto& p = std::get<Word>(piece);
      symbols.insert(symbols.end(), p.letters.begin(), p.letters.end());
    }
  }
  if (variable) return VariableWord{alphabet, std::move(symbols)};
  return Word{alphabet, std::move(symbols)};
}

std::uint64_t word_rank(const Word& w) {
  validate_word(w);
  unsigned __int128 r = 0;
  for (int l : w.letters) {
    r = r * static_cast<unsigned>(w.alphabet) + static_cast<unsigned>(l);
    if (r > ~0ull) throw std::overflow_error("word rank overflow");
  }
  return static_cast<std::uint64_t>(r);
}

Word word_unrank(int alphabet, int length, std::uint64_t rank) {
  if (alphabet < 1 || length < 0) throw std::invalid_argument("bad word shape");
  Word w;
  w.alphabet = alphabet;
  w.letters.assign(length, 0);
  for (int i = length; i-- > 0;) {
    w.letters[i] = static_cast<int>(rank % alphabet);
    rank /= alphabet;
  }
  if (rank != 0) throw std::invalid_argument("rank out of range");
  return w;
}

std::optional<VariableWord> hj_certify(
    int alphabet, int length, const std::vector<std::uint8_t>& coloring) {
  if (alphabet < 1 || length < 1) throw std::invalid_argument("bad hj query");
  std::uint64_t cells = checked_pow(alphabet, length, kEnumGuard);
  std::uint64_t candidates = checked_pow(alphabet + 1, length, kEnumGuard);
  if (cells > kEnumGuard || candidates > kEnumGuard)
    throw EnumerationGuardExceeded("hj space too large to scan");
  if (coloring.size() != cells)
    throw std::invalid_argument("coloring table size mismatch");

  std::vector<int> symbols(length, 0);
  do {
    if (std::find(symbols.begin(), symbols.end(), kVar) == symbols.end())
      continue;
    VariableWord x{alphabet, symbols};
    if (line_is_mono(x, coloring)) return x;
  } while (next_symbols(symbols, alphabet));
  return std::nullopt;
}

HjNumberResult hj_number(int alphabet, int colors, int cap) {
  if (alphabet < 1 || colors < 2 || cap < 1)
    throw std::invalid_argument("bad hj_number query");
  HjNumberResult res;
  for (int length = 1; length <= cap; ++length) {
    std::uint64_t cells = checked_pow(alphabet, length, 62);
    std::uint64_t total =
        cells > 62 ? kEnumGuard + 1
                   : checked_pow(colors, static_cast<int>(cells), kEnumGuard);
    if (total > kEnumGuard)
      throw EnumerationGuardExceeded("hj_number coloring space too large");

    // reusable line table for this length
    std::vector<std::vector<std::uint64_t>> lines;
    std::vector<int> symbols(length, 0);
    do {
      if (std::find(symbols.begin(), symbols.end(), kVar) == symbols.end())
        continue;
      VariableWord x{alphabet, symbols};
      std::vector<std::uint64_t> pts;
      for (int lambda = 0; lambda < alphabet; ++lambda)
        pts.push_back(word_rank(std::get<Word>(substitute(x, lambda))));
      lines.push_back(std::move(pts));
    } while (next_symbols(symbols, alphabet));

    bool all_have_line = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint8_t> table(cells);
      std::uint64_t rest = idx;
      for (std::uint64_t j = 0; j < cells; ++j) {
        table[j] = static_cast<std::uint8_t>(rest % colors);
        rest /= colors;
      }
      bool mono = false;
      for (const auto& pts : lines) {
        bool same = true;
        for (std::size_t i = 1; i < pts.size() && same; ++i)
          same = table[pts[i]] == table[pts[0]];
        if (same) {
          mono = true;
          break;
        }
      }
      if (!mono) {
        all_have_line = false;
        res.counterexample_length = length;
        res.counterexample = table;
        break;
      }
    }
    if (all_have_line) {
      res.value = length;
      return res;
    }
  }
  res.capped = true;
  return res;
}

std::optional<SpanResult> find_mono_span(const WordOracle& oracle,
                                         const std::vector<VariableWord>& pool,
                                         int p, bool require_prefix_closed,
                                         std::size_t total_length_cap,
                                         std::uint64_t eval_cap) {
  if (p < 1) throw std::invalid_argument("span length must be positive");
  for (const auto& x : pool) validate_variable_word(x);
  if (static_cast<std::size_t>(p) > pool.size()) return std::nullopt;
  int alphabet = pool.front().alphabet;

  std::uint64_t evals = 0;
  WordOracle counted = [&](const VariableWord& w) {
    if (eval_cap != 0 && ++evals > eval_cap)
      throw EnumerationGuardExceeded("span search passed its oracle budget");
    return oracle(w);
  };

  // cheapest possible extension from each index onward, for cap pruning
  std::vector<std::size_t> tail_min(pool.size() + 1,
                                    std::numeric_limits<std::size_t>::max());
  for (std::size_t i = pool.size(); i-- > 0;)
    tail_min[i] = std::min(tail_min[i + 1], pool[i].symbols.size());

  // depth-first walk in lexicographic index order; a prefix that breaks
  // constancy (when prefixes must stay closed) or cannot fit under the
  // length cap cuts every completion at once
  std::vector<std::size_t> idx, sums;
  std::vector<VariableWord> xs;
  std::vector<int> colors;
  std::size_t next = 0;
  while (true) {
    std::size_t d = idx.size();
    if (d == static_cast<std::size_t>(p))
      return SpanResult{idx, xs, colors.back()};
    std::size_t rest = static_cast<std::size_t>(p) - d - 1;
    bool pushed = false;
    for (std::size_t i = next; i + rest < pool.size(); ++i) {
      std::size_t sum = (d == 0 ? 0 : sums.back()) + pool[i].symbols.size();
      if (total_length_cap != 0) {
        if (sum > total_length_cap) continue;
        if (rest > 0 && sum + rest * tail_min[i + 1] > total_length_cap)
          continue;
      }
      int color = d == 0 ? -1 : colors.back();
      xs.push_back(pool[i]);
      bool ok = true;
      if (require_prefix_closed || rest == 0)
        ok = span_constant(counted, xs, d + 1, alphabet, color);
      if (!ok) {
        xs.pop_back();
        continue;
      }
      idx.push_back(i);
      sums.push_back(sum);
      colors.push_back(color);
      next = i + 1;
      pushed = true;
      break;
    }
    if (!pushed) {
      if (idx.empty()) return std::nullopt;
      next = idx.back() + 1;
      idx.pop_back();
      xs.pop_back();
      sums.pop_back();
      colors.pop_back();
    }
  }
}

bool verify_mono_span(const WordOracle& oracle, const SpanResult& span,
                      bool require_prefix_closed) {
  if (span.words.empty()) return false;
  int alphabet = span.words.front().alphabet;
  int color = span.color;
  int p = static_cast<int>(span.words.size());
  if (require_prefix_closed) {
    for (int len = 1; len <= p; ++len)
      if (!span_constant(oracle, span.words, len, alphabet, color))
        return false;
    return true;
  }
  return span_constant(oracle, span.words, p, alphabet, color);
}

}  // namespace ramsey
