#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ramsey/combinatorics.hpp"
#include "ramsey/creatures.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/pigeonhole.hpp"

using namespace ramsey;

namespace {

// block l on [l, l+1): one wish per a in 0..l
CreatureK1 r1_block(int l) {
  CreatureK1 t;
  t.m_dn = l;
  t.m_up = l + 1;
  t.u = {l};
  t.i = l;
  for (int a = 0; a <= l; ++a) {
    t.a.insert(a);
    t.val.insert(Assignment{{l, a}});
  }
  return t;
}

std::vector<CreatureK1> dense_r1(int depth) {
  std::vector<CreatureK1> t;
  for (int l = 0; l < depth; ++l) t.push_back(r1_block(l));
  return t;
}

// width 3 keeps room for up to 8 patterns, enough for depth 8
CreatureK2 k2_block(int l) {
  CreatureK2 t;
  t.m_dn = 3 * l;
  t.m_up = 3 * l + 3;
  for (int p = 0; p < 3; ++p) t.dis.push_back(3 * l + p);
  for (int idx = 0; idx <= l; ++idx) {
    Assignment f;
    for (int b = 0; b < 3; ++b) f[3 * l + b] = idx >> b & 1;
    t.val.insert(std::move(f));
  }
  return t;
}

std::vector<CreatureK2> dense_r2(int depth) {
  std::vector<CreatureK2> t;
  for (int l = 0; l < depth; ++l) t.push_back(k2_block(l));
  return t;
}

std::vector<CreatureKN> letters(int alphabet, int depth) {
  std::vector<CreatureKN> t;
  for (int l = 0; l < depth; ++l) {
    CreatureKN b;
    b.alphabet = alphabet;
    b.m_dn = l;
    b.m_up = l + 1;
    t.push_back(b);
  }
  return t;
}

std::string assignment_key(const Assignment& f) {
  std::string s;
  for (const auto& [p, v] : f)
    s += std::to_string(p) + ":" + std::to_string(v) + ",";
  return s;
}

}  // namespace

TEST_CASE("element counts match the direct product formula") {
  auto t1 = dense_r1(3);
  CHECK(elements_2_10(t1, 1).size() == 23);
  CHECK(elements_2_10(t1, 2).size() == 10);

  // sum over runs of the anchor choices times the pinned coordinates
  for (int k = 1; k <= 2; ++k) {
    std::uint64_t want = 0;
    for (int n = k - 1; n < 3; ++n)
      for (int l = k - 1; l <= n; ++l) {
        std::uint64_t ways = binomial(l + 1, k);
        for (int j = k - 1; j <= n; ++j)
          if (j != l) ways *= static_cast<std::uint64_t>(j + 1);
        want += ways;
      }
    CHECK(elements_2_10(t1, k).size() == want);
  }

  auto t2 = dense_r2(3);
  CHECK(elements_2_11(t2, 1).size() == 20);
  CHECK(elements_2_11(t2, 2).size() == 8);
  for (int k = 1; k <= 2; ++k) {
    std::uint64_t want = 0;
    for (int start = k - 1; start < 3; ++start)
      for (int n = start; n < 3; ++n)
        for (int l = start; l <= n; ++l) want += binomial(l + 1, k);
    CHECK(elements_2_11(t2, k).size() == want);
  }

  auto tn = letters(2, 3);
  CHECK(elements_2_13(tn, 1).size() == 25);
  std::uint64_t want = 0;
  for (int n = 0; n < 3; ++n) {
    std::uint64_t all = 1, filled = 1;
    for (int j = 0; j <= n; ++j) {
      all *= 3;
      filled *= 2;
    }
    want += all - filled;
  }
  CHECK(elements_2_13(tn, 1).size() == want);
}

TEST_CASE("elements are distinct and lock the head") {
  auto t = dense_r1(3);
  std::set<std::string> seen;
  for (const auto& el : elements_2_10(t, 2)) {
    REQUIRE(el.size() == 2);
    CHECK(el[0] == t[0]);
    CHECK(el[1].m_dn == t[1].m_dn);
    CHECK(validate(el[1]).empty());
    CHECK(seen.insert(element_key(el)).second);
  }
  auto t2 = dense_r2(3);
  seen.clear();
  for (const auto& el : elements_2_11(t2, 2)) {
    REQUIRE(el.size() == 2);
    CHECK(el[0] == t2[0]);
    CHECK(el[1].m_dn >= t2[1].m_dn);
    CHECK(seen.insert(element_key(el)).second);
  }
  seen.clear();
  for (const auto& el : elements_2_13(letters(2, 3), 1)) {
    REQUIRE(el.size() == 1);
    CHECK(el[0].m_dn == 0);
    CHECK(seen.insert(element_key(el)).second);
  }

  CHECK_THROWS_AS(elements_2_10(t, 1, 5), EnumerationGuardExceeded);
  CHECK_THROWS_AS(elements_2_10(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(elements_2_10(t, 4), std::invalid_argument);
}

TEST_CASE("codes rebuild exactly what they name") {
  auto t = dense_r1(3);
  for (int k = 1; k <= 2; ++k)
    for (const auto& el : elements_2_10(t, k)) {
      CodeK1 code = encode_2_10(t, k, el.back());
      CHECK(decode_2_10(t, k, code) == el.back());
    }
  auto t2 = dense_r2(3);
  for (int k = 1; k <= 2; ++k)
    for (const auto& el : elements_2_11(t2, k)) {
      CodeK2 code = encode_2_11(t2, k, el.back());
      CHECK(decode_2_11(t2, k, code) == el.back());
    }
  auto tn = letters(2, 4);
  for (int k = 1; k <= 2; ++k)
    for (const auto& el : elements_2_13(tn, k)) {
      VariableWord w = encode_2_13(tn, k, el.back());
      CHECK(decode_2_13(tn, k, w) == el.back());
    }

  // members that disagree off the anchor name no code
  SigmaChoiceK1 bad;
  bad.l_star = 1;
  bad.members = {{Assignment{{0, 0}}, Assignment{{1, 0}}},
                 {Assignment{{0, 0}}, Assignment{{1, 1}}}};
  // reuse block 1 twice so the off-anchor block offers two functions
  std::vector<CreatureK1> wide{r1_block(0), r1_block(1)};
  wide[0].a = {0, 1};
  wide[0].val = {Assignment{{0, 0}}, Assignment{{0, 1}}};
  SigmaChoiceK1 split;
  split.l_star = 1;
  split.members = {{Assignment{{0, 0}}, Assignment{{1, 0}}},
                   {Assignment{{0, 1}}, Assignment{{1, 1}}}};
  CreatureK1 s = sigma_compose(wide, split);
  CHECK_THROWS_AS(encode_2_10(wide, 1, s), std::invalid_argument);
}

TEST_CASE("a constant coloring keeps the whole prefix") {
  auto t = dense_r1(4);
  ColoringK1 c1 = [](const std::vector<CreatureK1>&) { return 7; };
  A4CertK1 a = a4_example_2_10(t, 1, c1, 4);
  CHECK(a.verified);
  CHECK(a.color == 1);
  CHECK(a.prefix == t);
  CHECK(a.checked == elements_2_10(t, 1).size());
  CHECK(verify_a4(a, c1));
  CHECK(depth(a.prefix, t).has_value());

  // shorter target keeps the two leading blocks
  A4CertK1 a2 = a4_example_2_10(t, 1, c1, 2);
  CHECK(a2.verified);
  CHECK(a2.prefix == std::vector<CreatureK1>{t[0], t[1]});

  auto t2 = dense_r2(4);
  ColoringK2 c2 = [](const std::vector<CreatureK2>&) { return 1; };
  A4CertK2 b = a4_example_2_11(t2, 1, c2, 2);
  CHECK(b.verified);
  CHECK(b.color == 1);
  REQUIRE(b.prefix.size() == 2);
  CHECK(b.prefix[0] == t2[0]);
  CHECK(b.prefix[1].m_dn == t2[1].m_dn);
  // the chain holds three blocks after the first step, enough for the two
  // later ones, so the merged tail ends at block 2
  CHECK(b.prefix[1].m_up == t2[2].m_up);
  CHECK(b.prefix[1].dis == t2[1].dis);
  CHECK(b.prefix[1].val == t2[1].val);
  CHECK(in_dense_r2(b.prefix));
  CHECK(verify_a4(b, c2));
  CHECK(depth(b.prefix, t2).has_value());

  auto tn = letters(2, 4);
  ColoringKN cn = [](const std::vector<CreatureKN>&) { return 3; };
  A4CertKN d = a4_example_2_13(tn, 1, cn, 3);
  CHECK(d.verified);
  CHECK(d.color == 1);
  CHECK(d.prefix.size() == 3);
  CHECK(verify_a4(d, cn));
  CHECK(depth(d.prefix, tn).has_value());
}

TEST_CASE("homogenization tracks anchor parity") {
  auto t = dense_r1(5);
  ColoringK1 parity = [](const std::vector<CreatureK1>& el) {
    return *el.back().a.begin() & 1;
  };
  A4CertK1 cert = a4_example_2_10(t, 1, parity, 2);
  CHECK(cert.verified);
  CHECK(cert.color == 0);
  REQUIRE(cert.prefix.size() == 2);
  int want = *cert.prefix[0].a.begin() & 1;
  for (const CreatureK1& b : cert.prefix)
    for (int a : b.a) CHECK((a & 1) == want);
  CHECK(verify_a4(cert, parity));
  CHECK(in_dense_r1(cert.prefix));

  // identity placement is forced at full depth and mixes parities
  CHECK_THROWS_AS(a4_example_2_10(dense_r1(3), 1, parity, 3),
                  NotFoundWithinDepth);
  // and a target past the depth cannot even be placed
  CHECK_THROWS_AS(a4_example_2_10(dense_r1(3), 1, parity, 4),
                  NotFoundWithinDepth);
}

TEST_CASE("span search pins the first position") {
  auto t = letters(2, 4);
  // color by the letter sitting at position 0, free position counts as its
  // own class
  ColoringKN c = [](const std::vector<CreatureKN>& el) {
    const CreatureKN& x = el.back();
    auto it = x.phi.find(0);
    return it != x.phi.end() && it->second == 0 ? 1 : 0;
  };
  A4CertKN cert = a4_example_2_13(t, 1, c, 2);
  CHECK(cert.verified);
  CHECK(cert.color == 1);
  REQUIRE(cert.prefix.size() == 2);
  // every span starting with a bare v word mixes the classes, so the first
  // admissible pair repeats the 0v shape over both runs
  VariableWord w0;
  w0.alphabet = 2;
  w0.symbols = {0, kVar};
  CHECK(cert.prefix[0] == word_to_sigma({t[0], t[1]}, w0));
  CHECK(cert.prefix[1] == word_to_sigma({t[2], t[3]}, w0));
  CHECK(verify_a4(cert, c));

  // counting free positions mod 2 rules out every odd word, leaving the
  // all-free pair as the first even candidate
  ColoringKN flip = [](const std::vector<CreatureKN>& el) {
    return static_cast<int>(el.back().x.size()) & 1;
  };
  A4CertKN even = a4_example_2_13(t, 1, flip, 2);
  CHECK(even.verified);
  CHECK(even.color == 0);
  REQUIRE(even.prefix.size() == 2);
  VariableWord wvv;
  wvv.alphabet = 2;
  wvv.symbols = {kVar, kVar};
  CHECK(even.prefix[0] == word_to_sigma({t[0], t[1]}, wvv));
  CHECK(even.prefix[1] == word_to_sigma({t[2], t[3]}, wvv));
}

TEST_CASE("seeded certificates are deterministic and verify") {
  auto t = dense_r1(6);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ColoringK1 c = seeded_coloring_k1(seed);
    A4CertK1 one = a4_example_2_10(t, 1, c, 2);
    A4CertK1 two = a4_example_2_10(t, 1, c, 2);
    CHECK(one.verified);
    CHECK(one.prefix == two.prefix);
    CHECK(one.color == two.color);
    CHECK(verify_a4(one, c));
    CHECK(depth(one.prefix, t).has_value());
    CHECK(in_dense_r1(one.prefix));

    A4CertK1 bent = one;
    bent.color ^= 1;
    CHECK_FALSE(verify_a4(bent, c));
    bent = one;
    bent.checked += 1;
    CHECK_FALSE(verify_a4(bent, c));
  }

  auto t2 = dense_r2(6);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ColoringK2 c = seeded_coloring_k2(seed);
    A4CertK2 one = a4_example_2_11(t2, 2, c, 1);
    CHECK(one.verified);
    CHECK(verify_a4(one, c));
    CHECK(depth(one.prefix, t2).has_value());
    A4CertK2 two = a4_example_2_11(t2, 2, c, 1);
    CHECK(element_key(one.prefix) == element_key(two.prefix));
  }

  auto tn = letters(2, 6);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ColoringKN c = seeded_coloring_kn(seed);
    A4CertKN one = a4_example_2_13(tn, 1, c, 2);
    CHECK(one.verified);
    CHECK(verify_a4(one, c));
    CHECK(depth(one.prefix, tn).has_value());
  }
}

TEST_CASE("fusion locks one coloring per step") {
  auto t = dense_r1(8);
  std::vector<ColoringK1> cs{seeded_coloring_k1(1), seeded_coloring_k1(101)};
  FusionResult<CreatureK1> out = fusion(t, cs, 3);
  REQUIRE(out.colors.size() == 2);
  CHECK(depth(out.prefix, t).has_value());
  for (const auto& el : elements_2_10(out.prefix, 1))
    CHECK((cs[0](el) != 0 ? 1 : 0) == out.colors[0]);
  for (const auto& el : elements_2_10(out.prefix, 2))
    CHECK((cs[1](el) != 0 ? 1 : 0) == out.colors[1]);

  CHECK_THROWS_AS(fusion(t, cs, 0), NotFoundWithinDepth);

  auto t2 = dense_r2(8);
  std::vector<ColoringK2> cs2{seeded_coloring_k2(1), seeded_coloring_k2(101)};
  FusionResult<CreatureK2> out2 = fusion(t2, cs2, 3);
  REQUIRE(out2.colors.size() == 2);
  CHECK(depth(out2.prefix, t2).has_value());
  for (const auto& el : elements_2_11(out2.prefix, 1))
    CHECK((cs2[0](el) != 0 ? 1 : 0) == out2.colors[0]);
  for (const auto& el : elements_2_11(out2.prefix, 2))
    CHECK((cs2[1](el) != 0 ? 1 : 0) == out2.colors[1]);

  auto tn = letters(2, 8);
  std::vector<ColoringKN> csn{seeded_coloring_kn(1), seeded_coloring_kn(101)};
  FusionResult<CreatureKN> outn = fusion(tn, csn, 3);
  REQUIRE(outn.colors.size() == 2);
  for (const auto& el : elements_2_13(outn.prefix, 1))
    CHECK((csn[0](el) != 0 ? 1 : 0) == outn.colors[0]);
  for (const auto& el : elements_2_13(outn.prefix, 2))
    CHECK((csn[1](el) != 0 ? 1 : 0) == outn.colors[1]);
}

TEST_CASE("min creature collapses to the least wish") {
  CreatureK1 b = r1_block(2);
  CreatureK1 m = min_creature(b);
  CHECK(m.a == std::set<int>{0});
  CHECK(m.val == std::set<Assignment>{Assignment{{2, 0}}});
  CHECK(m.m_dn == b.m_dn);
  CHECK(m.m_up == b.m_up);
  CHECK(m.u == b.u);
  CHECK(m.i == b.i);
  CHECK(min_creature(m) == m);
  CHECK(min_creature(r1_block(0)) == r1_block(0));
}

TEST_CASE("recovered conclusion a holds level by level") {
  auto t = dense_r1(8);
  auto d = [](int level, const Assignment& f) {
    return static_cast<int>(
        hash_bytes(std::to_string(level) + "#" + assignment_key(f), 11) & 1);
  };
  RecoverA out = recover_conclusion_a(t, d, 2);
  CHECK(out.verified);
  REQUIRE(out.prefix.size() == 2);
  REQUIRE(out.colors.size() == 2);
  CHECK(out.checked > 0);
  CHECK(depth(out.prefix, t).has_value());
  // spot check the claim directly
  for (int i = 0; i < 2; ++i) {
    std::vector<CreatureK1> tail(out.prefix.begin() + i, out.prefix.end());
    for (const Assignment& f : pos_enumerate(tail, PosMode::tight)) {
      int mark = -1;
      for (int l = 0; l < 8; ++l)
        if (t[l].m_dn == out.prefix[i].m_dn) mark = l;
      REQUIRE(mark >= 0);
      CHECK((d(mark, f) != 0 ? 1 : 0) == out.colors[i]);
    }
  }
}

TEST_CASE("recovered conclusion b picks one color for every start") {
  auto t = dense_r1(8);
  // color by the level where the position starts
  auto d = [&t](int level, const Assignment&) { return level & 1; };
  RecoverBK1 out = recover_conclusion_b(t, d, 2);
  CHECK(out.verified);
  CHECK(out.color == 1);
  REQUIRE(out.prefix.size() == 2);
  CHECK(out.prefix[0].m_dn == 1);
  CHECK(out.prefix[1].m_dn == 3);
  CHECK(out.prefix[1].m_up == 8);
  CHECK(out.checked > 0);

  // keying on the least wish value leaves whole value classes mono per
  // level, so the step chain stays long enough for the pick floors; a hash
  // over the full assignment shreds the runs at this depth
  auto ds = [](int, const Assignment& f) {
    return static_cast<int>(
        hash_bytes(std::to_string(f.begin()->second), 3) & 1);
  };
  RecoverBK1 seeded = recover_conclusion_b(t, ds, 2);
  CHECK(seeded.verified);
  CHECK(seeded.color == 1);
  CHECK(seeded.checked == 7);

  auto t2 = dense_r2(8);
  auto d2 = [](const Assignment& f) {
    return static_cast<int>(hash_bytes(assignment_key(f), 5) & 1);
  };
  RecoverBK2 out2 = recover_conclusion_b(t2, d2, 2);
  CHECK(out2.verified);
  REQUIRE(out2.prefix.size() == 2);
  CHECK(out2.checked > 0);
  for (const Assignment& f : pos_enumerate(out2.prefix, PosMode::loose))
    CHECK((d2(f) != 0 ? 1 : 0) == out2.color);
}

TEST_CASE("input checks reject broken prefixes") {
  std::vector<CreatureK1> skewed{r1_block(1)};
  ColoringK1 c = [](const std::vector<CreatureK1>&) { return 0; };
  CHECK_THROWS_AS(a4_example_2_10(skewed, 1, c, 1), std::invalid_argument);

  auto t = dense_r1(3);
  CHECK_THROWS_AS(a4_example_2_10(t, 1, c, 0), std::invalid_argument);

  std::vector<CreatureK1> gap{r1_block(0), r1_block(2)};
  CHECK_THROWS_AS(a4_example_2_10(gap, 1, c, 1), std::invalid_argument);
}
