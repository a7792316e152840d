#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/product.hpp"

using namespace ramsey;

namespace {

// hand recursion for k = 1, written independently: r_1(m) = 2m-1 and
// N multiplies C(r,1) = r by the later values
std::vector<std::uint64_t> oracle_s1(const std::vector<int>& ms) {
  std::vector<std::uint64_t> vals;
  vals.push_back(2ull * ms[0] - 1);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    std::uint64_t n = vals[0];
    for (std::size_t j = 1; j < i; ++j) n *= vals[j];
    vals.push_back(static_cast<std::uint64_t>(ms[i]) << n);
  }
  return vals;
}

ProductColoring table_from_bits(int k, std::vector<int> sizes,
                                std::vector<std::uint8_t> bits) {
  ProductColoring c;
  c.k = k;
  c.sizes = std::move(sizes);
  c.bits = std::move(bits);
  return c;
}

}  // namespace

TEST_CASE("s_bound frozen values") {
  auto a = s_bound(1, {2, 2});
  CHECK_FALSE(a.capped);
  CHECK(a.values == std::vector<std::uint64_t>{3, 16});

  auto b = s_bound(1, {1, 1});
  CHECK(b.values == std::vector<std::uint64_t>{1, 2});

  auto c = s_bound(1, {1, 1, 1});
  CHECK(c.values == std::vector<std::uint64_t>{1, 2, 4});

  auto d = s_bound(2, {2, 2});
  CHECK(d.values == std::vector<std::uint64_t>{2, 4});

  auto e = s_bound(2, {3, 1});
  CHECK(e.values == std::vector<std::uint64_t>{6, 1ull << 15});
}

TEST_CASE("s_bound matches the hand recursion at k = 1") {
  for (std::vector<int> ms :
       {std::vector<int>{2, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {3, 2}}) {
    auto got = s_bound(1, ms);
    REQUIRE_FALSE(got.capped);
    CHECK(got.values == oracle_s1(ms));
  }
}

TEST_CASE("s_bound caps instead of overflowing") {
  auto res = s_bound(1, {3, 3, 3});
  CHECK(res.capped);
  CHECK(res.values == std::vector<std::uint64_t>{5, 96});
}

TEST_CASE("s_kn_bound small cases") {
  auto a = s_kn_bound(1, 0, {3});
  CHECK(a.values == std::vector<std::uint64_t>{5});

  auto b = s_kn_bound(2, 0, {2});
  CHECK(b.values == std::vector<std::uint64_t>{2});

  auto c = s_kn_bound(1, 1, {2});
  CHECK_FALSE(c.capped);
  CHECK(c.values == std::vector<std::uint64_t>{6});

  // the second value walks the iterate chain far past the bit cap
  auto d = s_kn_bound(1, 1, {2, 2});
  CHECK(d.values.front() == 6);
  CHECK(d.capped);

  CHECK_THROWS_AS(s_kn_bound(1, 2, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("parity example") {
  auto c = table_from_bits(1, {1, 4}, {0, 1, 0, 1});
  auto sel = homogenize_product(c, {1, 2});
  CHECK(sel.verified);
  CHECK(sel.color == 0);
  CHECK(sel.h == std::vector<std::vector<int>>{{0}, {0, 2}});

  // the other parity class is also fine for the verifier
  ProductSelection other{{{0}, {1, 3}}, 1, false};
  CHECK(verify_product_selection(c, {1, 2}, other));
  ProductSelection mixed{{{0}, {0, 1}}, 0, false};
  CHECK_FALSE(verify_product_selection(c, {1, 2}, mixed));
  ProductSelection wrong_color{{{0}, {0, 2}}, 1, false};
  CHECK_FALSE(verify_product_selection(c, {1, 2}, wrong_color));
}

TEST_CASE("constant colorings pick leading elements") {
  for (int value = 0; value <= 1; ++value) {
    ProductColoring c = table_from_bits(
        1, {3, 16}, std::vector<std::uint8_t>(48, static_cast<std::uint8_t>(value)));
    auto sel = homogenize_product(c, {2, 2});
    CHECK(sel.color == value);
    CHECK(sel.h == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
    CHECK(sel.verified);
  }
}

TEST_CASE("exhaustive micro shapes") {
  // k=1, ms=(1,2), shape (1,4): every coloring of the 4 cells
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::uint8_t> bits(4);
    for (int i = 0; i < 4; ++i) bits[i] = (mask >> i) & 1;
    auto sel = homogenize_product(table_from_bits(1, {1, 4}, bits), {1, 2});
    CHECK(sel.verified);
  }

  // k=1, ms=(1,1,1), shape (1,2,4): 8 cells
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<std::uint8_t> bits(8);
    for (int i = 0; i < 8; ++i) bits[i] = (mask >> i) & 1;
    auto sel =
        homogenize_product(table_from_bits(1, {1, 2, 4}, bits), {1, 1, 1});
    CHECK(sel.verified);
  }
}

TEST_CASE("seeded colorings always verify") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto c = seeded_product_coloring(1, {3, 16}, seed);
    auto sel = homogenize_product(c, {2, 2});
    CHECK(sel.verified);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto c = seeded_product_coloring(2, {2, 4}, seed);
    auto sel = homogenize_product(c, {2, 2});
    CHECK(sel.verified);
  }
  // a k=2 case with a nontrivial base scan
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto c = seeded_product_coloring(2, {6, 1 << 15}, seed);
    auto sel = homogenize_product(c, {3, 1});
    CHECK(sel.verified);
  }
  // oversized but still feasible shape
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = seeded_product_coloring(1, {4, 32}, seed);
    auto sel = homogenize_product(c, {2, 2});
    CHECK(sel.verified);
  }
}

TEST_CASE("shape gates") {
  CHECK_THROWS_AS(
      homogenize_product(table_from_bits(1, {1, 3}, {0, 0, 0}), {1, 2}),
      ShapeTooSmall);
  // extra room at level 0 widens the halving schedule past level 1
  CHECK_THROWS_AS(homogenize_product(
                      table_from_bits(1, {2, 4}, std::vector<std::uint8_t>(8)),
                      {1, 2}),
                  ShapeTooSmall);
  CHECK_THROWS_AS(
      homogenize_product(table_from_bits(1, {2, 16}, std::vector<std::uint8_t>(32)),
                         {3, 2}),
      ShapeTooSmall);
  CHECK_THROWS_AS(
      homogenize_product(table_from_bits(1, {3, 16}, std::vector<std::uint8_t>(4)),
                         {2, 2}),
      std::invalid_argument);
}

TEST_CASE("determinism") {
  auto a = homogenize_product(seeded_product_coloring(1, {3, 16}, 7), {2, 2});
  auto b = homogenize_product(seeded_product_coloring(1, {3, 16}, 7), {2, 2});
  CHECK(a.h == b.h);
  CHECK(a.color == b.color);
}
