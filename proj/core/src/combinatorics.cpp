#include "ramsey/combinatorics.hpp"

#include <stdexcept>

namespace ramsey {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > ~static_cast<std::uint64_t>(0))
      throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(const std::vector<int>& subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    r += binomial(subset[i], static_cast<int>(i) + 1);
  return r;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
  std::vector<int> out(k);
  for (int i = k; i >= 1; --i) {
    // largest a with C(a,i) <= rank
    int a = i - 1;
    while (binomial(a + 1, i) <= rank) ++a;
    out[i - 1] = a;
    rank -= binomial(a, i);
  }
  return out;
}

std::vector<int> first_combination(int k) {
  std::vector<int> a(k);
  for (int i = 0; i < k; ++i) a[i] = i;
  return a;
}

bool next_combination(std::vector<int>& a, int n) {
  int k = static_cast<int>(a.size());
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? a[i + 1] : n;
    if (a[i] + 1 < limit) {
      ++a[i];
      for (int j = 0; j < i; ++j) a[j] = j;
      return true;
    }
  }
  return false;
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> a = first_combination(k);
  if (k == 0) {
    fn(a);
    return;
  }
  do {
    fn(a);
  } while (next_combination(a, n));
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

int SplitMix64::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t hash_bytes(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = 14695981039346656037ull;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  for (unsigned char b : data) {
    h ^= b;
    h *= 1099511628211ull;
  }
  // splitmix finalizer, avoids FNV's weak low bits
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

namespace {
constexpr char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}
}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= bytes.size()) {
    std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += kB64[v & 63];
    i += 3;
  }
  std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    std::uint32_t v = bytes[i] << 16;
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += "==";
  } else if (rest == 2) {
    std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += kB64[(v >> 18) & 63];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  std::uint32_t buf = 0;
  int have = 0;
  for (char c : text) {
    if (c == '=' || c == '\n' || c == '\r') continue;
    int v = b64_value(c);
    if (v < 0) throw std::invalid_argument("bad base64 input");
    buf = (buf << 6) | static_cast<std::uint32_t>(v);
    have += 6;
    if (have >= 8) {
      have -= 8;
      out.push_back(static_cast<std::uint8_t>((buf >> have) & 0xff));
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  return bytes;
}

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes,
                                      std::size_t count) {
  if (bytes.size() < (count + 7) / 8)
    throw std::invalid_argument("bit payload too short");
  std::vector<std::uint8_t> bits(count, 0);
  for (std::size_t i = 0; i < count; ++i)
    bits[i] = (bytes[i / 8] >> (i % 8)) & 1;
  return bits;
}

}  // namespace ramsey
