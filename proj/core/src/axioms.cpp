#include "ramsey/axioms.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  // modulo keeps the draws identical across standard libraries
  int below(int n) {
    return static_cast<int>(g() % static_cast<std::uint64_t>(n));
  }
};

// k distinct picks from 0..n-1 by partial shuffle
std::vector<int> pick_distinct(Rng& r, int n, int k) {
  std::vector<int> cand(static_cast<std::size_t>(n));
  std::iota(cand.begin(), cand.end(), 0);
  for (int j = 0; j < k; ++j)
    std::swap(cand[static_cast<std::size_t>(j)],
              cand[static_cast<std::size_t>(j + r.below(n - j))]);
  cand.resize(static_cast<std::size_t>(k));
  return cand;
}

CreatureK1 random_k1_block(Rng& r, int l, int& pos) {
  CreatureK1 b;
  b.m_dn = pos;
  b.m_up = pos + 1 + r.below(3);
  pos = b.m_up;
  b.i = b.m_up - 1;
  b.u = {b.i};
  for (int v : pick_distinct(r, b.i + 1, l + 1)) {
    b.a.insert(v);
    b.val.insert(Assignment{{b.i, v}});
  }
  return b;
}

CreatureK2 random_k2_block(Rng& r, int l, int& pos) {
  int need = 1;
  while ((1 << need) < l + 1) ++need;
  int dsize = need + r.below(2);
  CreatureK2 b;
  b.m_dn = pos + r.below(3);
  int width = dsize + r.below(2);
  b.m_up = b.m_dn + width;
  pos = b.m_up;
  std::vector<int> offs = pick_distinct(r, width, dsize);
  std::sort(offs.begin(), offs.end());
  for (int o : offs) b.dis.push_back(b.m_dn + o);
  for (int mask : pick_distinct(r, 1 << dsize, l + 1)) {
    Assignment f;
    for (int j = 0; j < dsize; ++j)
      f[b.dis[static_cast<std::size_t>(j)]] = mask >> j & 1;
    b.val.insert(std::move(f));
  }
  return b;
}

CreatureKN random_kn_block(Rng& r, int alphabet, int& pos) {
  CreatureKN b;
  b.alphabet = alphabet;
  b.m_dn = pos;
  int width = 1 + r.below(2);
  b.m_up = b.m_dn + width;
  pos = b.m_up;
  if (width == 2 && r.below(3) == 0) {
    int p = b.m_dn + r.below(2);
    b.x = {p};
    b.phi[p] = r.below(alphabet);
  }
  return b;
}

CreatureK1 random_composite(Rng& r, const std::vector<CreatureK1>& run) {
  SigmaChoiceK1 ch;
  ch.l_star = r.below(static_cast<int>(run.size()));
  int count = 1 + r.below(2);
  for (int c = 0; c < count; ++c) {
    std::vector<Assignment> tuple;
    for (const CreatureK1& t : run) {
      int pick = r.below(static_cast<int>(t.val.size()));
      tuple.push_back(*std::next(t.val.begin(), pick));
    }
    ch.members.push_back(std::move(tuple));
  }
  return sigma_compose(run, ch);
}

CreatureK2 random_composite(Rng& r, const std::vector<CreatureK2>& run) {
  SigmaChoiceK2 ch;
  ch.l_star = r.below(static_cast<int>(run.size()));
  const CreatureK2& star = run[static_cast<std::size_t>(ch.l_star)];
  int keep = 1 + r.below(static_cast<int>(star.val.size()));
  for (int idx : pick_distinct(r, static_cast<int>(star.val.size()), keep))
    ch.val_subset.insert(*std::next(star.val.begin(), idx));
  return sigma_compose(run, ch);
}

CreatureKN random_composite(Rng& r, const std::vector<CreatureKN>& run) {
  SigmaChoiceKN ch;
  bool kept = false;
  for (std::size_t j = 0; j < run.size(); ++j) {
    int d = r.below(run[0].alphabet + 1);
    if (d == run[0].alphabet) {
      ch.fills.push_back(kVar);
      kept = true;
    } else {
      ch.fills.push_back(d);
    }
  }
  if (!kept)
    ch.fills[static_cast<std::size_t>(r.below(static_cast<int>(run.size())))] =
        kVar;
  return sigma_compose(run, ch);
}

template <class C>
std::vector<C> head_of(const std::vector<C>& t, std::size_t k) {
  return std::vector<C>(t.begin(), t.begin() + static_cast<long>(k));
}

// b composed out of boundary runs of the truncation at m; the loose space
// may leave gap blocks between runs
template <class C>
LeFinPair<C> random_pair(Rng& r, const FragmentSample<C>& s, int m, int cover,
                         bool single, bool loose) {
  LeFinPair<C> out;
  out.a = head_of(s.t, static_cast<std::size_t>(m));
  int start = m - cover;
  if (single) {
    std::vector<C> run(s.t.begin() + start, s.t.begin() + m);
    out.b.push_back(random_composite(r, run));
    return out;
  }
  int i = start;
  while (i < m) {
    int len = 1 + r.below(std::min(2, m - i));
    std::vector<C> run(s.t.begin() + i, s.t.begin() + i + len);
    out.b.push_back(random_composite(r, run));
    i += len;
    if (loose && i < m - 1 && r.below(3) == 0) ++i;
  }
  return out;
}

template <class C, class BlockFn>
FragmentSample<C> build_sample(const char* tag, std::uint64_t seed,
                               BlockFn block, bool loose) {
  Rng r(hash_bytes(tag, seed));
  FragmentSample<C> s;
  s.example = tag;
  s.seed = seed;
  int len = 6 + r.below(5);
  int pos = 0;
  for (int l = 0; l < len; ++l) s.t.push_back(block(r, l, pos));
  // the sibling reshapes the last block so the sequences split exactly there
  s.t_sib = s.t;
  int base = s.t[static_cast<std::size_t>(len - 2)].m_up;
  do {
    int p = base;
    s.t_sib[static_cast<std::size_t>(len - 1)] = block(r, len - 1, p);
  } while (s.t_sib[static_cast<std::size_t>(len - 1)] ==
           s.t[static_cast<std::size_t>(len - 1)]);
  for (int k = 0; k <= len; ++k)
    s.truncations.push_back(head_of(s.t, static_cast<std::size_t>(k)));
  auto cut = [&](int lo) { return std::max(2, len - r.below(lo)); };
  int m0 = len - 2;
  s.pairs.push_back(random_pair(r, s, m0, std::min(m0, 2 + r.below(3)), false,
                                loose));
  int m1 = cut(3);
  s.pairs.push_back(random_pair(r, s, m1, std::min(m1, 2 + r.below(3)), false,
                                loose));
  int m2 = cut(3);
  s.pairs.push_back(random_pair(r, s, m2, std::min(m2, 2 + r.below(4)), false,
                                loose));
  int m3 = len - 1 - r.below(2);
  s.pairs.push_back(random_pair(r, s, m3, std::min(m3, 1 + r.below(2)), true,
                                loose));
  for (const LeFinPair<C>& pr : s.pairs)
    for (const C& w : pr.b) s.composites.push_back(w);
  return s;
}

AxiomReport fresh_report(const char* axiom, const std::string& example,
                         std::uint64_t seed) {
  AxiomReport rep;
  rep.axiom = axiom;
  rep.example = example;
  rep.seed = seed;
  return rep;
}

template <class C>
AxiomReport a1_impl(const FragmentSample<C>& s) {
  AxiomReport rep = fresh_report("A.1", s.example, s.seed);
  auto bad = [&rep](std::string m) { rep.violations.push_back(std::move(m)); };
  if (!validate_prefix(s.t).empty()) bad("the sequence fails validation");
  if (!validate_prefix(s.t_sib).empty()) bad("the sibling fails validation");
  rep.checked += 2;
  if (s.truncations.size() != s.t.size() + 1) {
    bad("the truncation table length is off");
    return rep;
  }
  if (!s.truncations[0].empty()) bad("the zero truncation is not empty");
  ++rep.checked;
  for (std::size_t k = 0; k < s.truncations.size(); ++k) {
    if (s.truncations[k] != head_of(s.t, k))
      bad("truncation " + std::to_string(k) + " disagrees with the sequence");
    ++rep.checked;
  }
  for (std::size_t m = 0; m < s.truncations.size(); ++m)
    for (std::size_t n = m + 1; n < s.truncations.size(); ++n) {
      if (s.truncations[m] == s.truncations[n])
        bad("truncations " + std::to_string(m) + " and " + std::to_string(n) +
            " coincide");
      ++rep.checked;
    }
  // distinct sequences split at a finite stage and never rejoin
  std::size_t split = s.t.size() + 1;
  for (std::size_t n = 0; n <= s.t.size(); ++n)
    if (head_of(s.t, n) != head_of(s.t_sib, n)) {
      split = n;
      break;
    }
  if (split > s.t.size()) bad("the sibling never splits off");
  ++rep.checked;
  for (std::size_t m = 0; m <= s.t.size(); ++m)
    for (std::size_t n = 0; n <= s.t_sib.size(); ++n) {
      if (head_of(s.t, m) == head_of(s.t_sib, n)) {
        if (m != n)
          bad("stages " + std::to_string(m) + " and " + std::to_string(n) +
              " carry one truncation");
        else
          for (std::size_t j = 0; j < m; ++j)
            if (head_of(s.t, j) != head_of(s.t_sib, j))
              bad("agreement at stage " + std::to_string(m) +
                  " without agreement below");
      }
      ++rep.checked;
    }
  return rep;
}

std::uint64_t comp_count(const std::vector<CreatureK1>& run) {
  std::uint64_t prod = 1;
  for (const CreatureK1& t : run) {
    prod *= t.val.size();
    if (prod > 40)
      throw EnumerationGuardExceeded("wish pool too wide for the cone law");
  }
  return run.size() * ((std::uint64_t{1} << prod) - 1);
}

std::uint64_t comp_count(const std::vector<CreatureK2>& run) {
  std::uint64_t total = 0;
  for (const CreatureK2& t : run) {
    if (t.val.size() > 40)
      throw EnumerationGuardExceeded("pattern set too wide for the cone law");
    total += (std::uint64_t{1} << t.val.size()) - 1;
  }
  return total;
}

std::uint64_t comp_count(const std::vector<CreatureKN>& run) {
  std::uint64_t with = 1;
  std::uint64_t without = 1;
  std::uint64_t n = static_cast<std::uint64_t>(run[0].alphabet);
  for (std::size_t j = 0; j < run.size(); ++j) {
    with *= n + 1;
    without *= n;
    if (with > (std::uint64_t{1} << 40))
      throw EnumerationGuardExceeded("letter count too wide for the cone law");
  }
  return with - without;
}

// closed count of the cone: pick the first covered block, then runs chain
// to the top; the loose space may restart runs past gap blocks
template <class C>
std::uint64_t cone_law(const std::vector<C>& a, bool tight) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> cont(n + 1, 0);
  cont[n] = 1;
  for (std::size_t j = n; j-- > 0;) {
    std::uint64_t c = 0;
    std::size_t last = tight ? j : n - 1;
    for (std::size_t i = j; i <= last; ++i)
      for (std::size_t h = i; h < n; ++h) {
        std::vector<C> run(a.begin() + static_cast<long>(i),
                           a.begin() + static_cast<long>(h + 1));
        c += comp_count(run) * cont[h + 1];
      }
    cont[j] = c;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = i; h < n; ++h) {
      std::vector<C> run(a.begin() + static_cast<long>(i),
                         a.begin() + static_cast<long>(h + 1));
      total += comp_count(run) * cont[h + 1];
    }
  return total;
}

template <class C>
void grow_cone(const std::vector<C>& a, std::size_t j, bool tight, bool placed,
               std::vector<C>& cur, std::vector<std::vector<C>>& out,
               std::uint64_t cap) {
  if (j >= a.size()) return;
  // blocks may be skipped ahead of the first run, and between runs in the
  // loose space; a skip that strands the top boundary never closes
  if (!placed || !tight) grow_cone(a, j + 1, tight, placed, cur, out, cap);
  for (std::size_t h = j; h < a.size(); ++h) {
    std::vector<C> run(a.begin() + static_cast<long>(j),
                       a.begin() + static_cast<long>(h + 1));
    for (const C& w : sigma_enumerate(run)) {
      cur.push_back(w);
      if (h + 1 == a.size()) {
        out.push_back(cur);
        if (out.size() > cap)
          throw EnumerationGuardExceeded("cone grew past the cap");
      } else {
        grow_cone(a, h + 1, tight, true, cur, out, cap);
      }
      cur.pop_back();
    }
  }
}

template <class C>
std::vector<std::vector<C>> cone_impl(const std::vector<C>& a, bool tight,
                                      std::uint64_t cap) {
  std::vector<std::vector<C>> out;
  std::vector<C> cur;
  grow_cone(a, 0, tight, false, cur, out, cap);
  return out;
}

template <class C>
AxiomReport a2_impl(const FragmentSample<C>& s, bool tight) {
  AxiomReport rep = fresh_report("A.2", s.example, s.seed);
  auto bad = [&rep](std::string m) { rep.violations.push_back(std::move(m)); };
  // finiteness with a verified cardinality on the short truncations
  for (std::size_t n0 = 0; n0 <= std::min<std::size_t>(3, s.t.size()); ++n0) {
    std::vector<C> a = head_of(s.t, n0);
    std::uint64_t law = cone_law(a, tight);
    if (law > kSigmaCap)
      throw EnumerationGuardExceeded("cone law past the cap");
    std::vector<std::vector<C>> cone = cone_impl(a, tight, kSigmaCap);
    if (cone.size() + 1 != law)
      bad("cone size " + std::to_string(cone.size() + 1) +
          " misses the law " + std::to_string(law) + " at cut " +
          std::to_string(n0));
    std::set<std::string> keys;
    keys.insert(element_key(std::vector<C>{}));
    if (!le_fin(std::vector<C>{}, a)) bad("the empty prefix is not below");
    for (const std::vector<C>& v : cone) {
      if (!le_fin(v, a)) bad("an enumerated cone member is not below its cut");
      keys.insert(element_key(v));
    }
    if (keys.size() != cone.size() + 1) bad("cone members collide");
    if (!cone.empty()) {
      std::vector<C> probe = cone.front();
      probe.back().m_up += 1;
      if (le_fin(probe, a)) bad("a broken top boundary still relates");
    }
    rep.checked += cone.size() + 3;
  }
  // recorded pairs relate, stage by stage, and their strict heads land
  // below strict stages
  for (const LeFinPair<C>& pr : s.pairs) {
    if (!le_fin(pr.b, pr.a)) {
      bad("a recorded pair fails the relation");
      ++rep.checked;
      continue;
    }
    for (std::size_t nn = 0; nn <= pr.b.size(); ++nn) {
      bool hit = false;
      for (std::size_t mm = 0; mm <= pr.a.size() && !hit; ++mm)
        hit = le_fin(head_of(pr.b, nn), head_of(pr.a, mm));
      if (!hit) bad("a truncation of b finds no stage of a");
      ++rep.checked;
    }
    for (std::size_t j = 1; j < pr.b.size(); ++j) {
      bool hit = false;
      for (std::size_t mm = 0; mm < pr.a.size() && !hit; ++mm)
        hit = le_fin(head_of(pr.b, j), head_of(pr.a, mm));
      if (!hit) bad("no strict stage of a hosts a strict head of b");
      ++rep.checked;
    }
  }
  return rep;
}

CreatureK1 unit_block(int at, const CreatureK1&) {
  CreatureK1 b;
  b.m_dn = at;
  b.m_up = at + 1;
  b.u = {at};
  b.i = at;
  b.a = {0};
  b.val = {Assignment{{at, 0}}};
  return b;
}

CreatureK2 unit_block(int at, const CreatureK2&) {
  CreatureK2 b;
  b.m_dn = at;
  b.m_up = at + 1;
  b.dis = {at};
  b.val = {Assignment{{at, 0}}};
  return b;
}

CreatureKN unit_block(int at, const CreatureKN& like) {
  CreatureKN b;
  b.alphabet = like.alphabet;
  b.m_dn = at;
  b.m_up = at + 1;
  return b;
}

CreatureK1 simple_composite(const std::vector<CreatureK1>& run) {
  SigmaChoiceK1 ch;
  ch.l_star = 0;
  std::vector<Assignment> tuple;
  for (const CreatureK1& t : run) {
    if (t.val.empty()) throw ShapeError("a block offers no function");
    tuple.push_back(*t.val.begin());
  }
  ch.members.push_back(std::move(tuple));
  return sigma_compose(run, ch);
}

CreatureK2 simple_composite(const std::vector<CreatureK2>& run) {
  SigmaChoiceK2 ch;
  ch.l_star = 0;
  if (run[0].val.empty()) throw ShapeError("a block offers no pattern");
  ch.val_subset = {*run[0].val.begin()};
  return sigma_compose(run, ch);
}

CreatureKN simple_composite(const std::vector<CreatureKN>& run) {
  SigmaChoiceKN ch;
  ch.fills.assign(run.size(), kVar);
  return sigma_compose(run, ch);
}

// pair consecutive blocks above the cut, one leftover kept alone
template <class C>
std::vector<C> composed_tail(const std::vector<C>& t, int n) {
  std::vector<C> d;
  std::size_t i = static_cast<std::size_t>(n);
  while (i < t.size()) {
    std::size_t len = std::min<std::size_t>(2, t.size() - i);
    std::vector<C> run(t.begin() + static_cast<long>(i),
                       t.begin() + static_cast<long>(i + len));
    d.push_back(simple_composite(run));
    i += len;
  }
  return d;
}

template <class C>
AxiomReport a3_impl(const FragmentSample<C>& s) {
  AxiomReport rep = fresh_report("A.3", s.example, s.seed);
  auto bad = [&rep](std::string m) { rep.violations.push_back(std::move(m)); };
  // a prefix poking above the sequence has no depth and is skipped
  {
    std::vector<C> marker = s.t;
    marker.push_back(unit_block(s.t.back().m_up, s.t.back()));
    if (depth(marker, s.t))
      bad("an overreaching prefix still took a depth");
    else
      rep.notices.push_back("depth marker skipped");
    ++rep.checked;
  }
  for (const LeFinPair<C>& pr : s.pairs) {
    const std::vector<C>& u = pr.b;
    std::optional<int> dep = depth(u, s.t);
    if (!dep) {
      rep.notices.push_back("a pair without a depth was skipped");
      continue;
    }
    int n = *dep;
    if (n >= static_cast<int>(s.t.size())) {
      rep.notices.push_back("no room above a top-height prefix");
      continue;
    }
    try {
      std::vector<C> d = composed_tail(s.t, n);
      // every finite window agreeing below the depth hosts an extension
      std::vector<std::vector<C>> tails;
      tails.push_back(std::vector<C>(s.t.begin() + n, s.t.end()));
      tails.push_back(d);
      for (const std::vector<C>& tail : tails) {
        std::vector<C> y = head_of(s.t, static_cast<std::size_t>(n));
        y.insert(y.end(), tail.begin(), tail.end());
        std::vector<C> ext = u;
        ext.push_back(tail.front());
        if (!validate_prefix(ext).empty())
          bad("a one-block extension broke the chain");
        if (!le_fin(ext, head_of(y, static_cast<std::size_t>(n) + 1)))
          bad("an extension is not below its stage");
        rep.checked += 2;
      }
      // shrinking the window below the depth keeps it nonempty and inside
      std::vector<C> y_alt = u;
      y_alt.insert(y_alt.end(), d.begin(), d.end());
      std::vector<C> y_prime = head_of(s.t, static_cast<std::size_t>(n));
      y_prime.insert(y_prime.end(), d.begin(), d.end());
      for (std::size_t j = 0; j <= y_prime.size(); ++j) {
        bool hit = false;
        for (std::size_t m = 0; m <= s.t.size() && !hit; ++m)
          hit = le_fin(head_of(y_prime, j), head_of(s.t, m));
        if (!hit) bad("the shrunk window escapes the sequence");
        ++rep.checked;
      }
      std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(n) + 2,
                                              y_prime.size());
      for (std::size_t h = static_cast<std::size_t>(n); h < top; ++h) {
        std::vector<C> run(y_prime.begin() + n,
                           y_prime.begin() + static_cast<long>(h + 1));
        for (const C& w : sigma_enumerate(run)) {
          std::vector<C> e = u;
          e.push_back(w);
          if (!le_fin(e, head_of(y_prime, h + 1))) {
            bad("a window member failed its own stage");
            ++rep.checked;
            continue;
          }
          bool inside = false;
          for (std::size_t m = 0; m <= y_alt.size() && !inside; ++m)
            inside = le_fin(e, head_of(y_alt, m));
          if (!inside) bad("a window member escapes the original");
          ++rep.checked;
        }
      }
    } catch (const std::exception& ex) {
      bad(std::string("construction failed: ") + ex.what());
    }
  }
  return rep;
}

struct A4Outcome {
  int achieved = 0;
  bool full = false;
  bool viol = false;
  std::string note;
};

template <class C, class Op, class Col>
A4Outcome a4_once(const std::vector<C>& t, int k, int target, Op op,
                  const Col& coloring) {
  A4Outcome out;
  for (int tl = target; tl >= 1; --tl) {
    A4Cert<C> cert;
    try {
      cert = op(t, k, coloring, tl);
    } catch (const NotFoundWithinDepth&) {
      continue;
    } catch (const EnumerationGuardExceeded&) {
      continue;
    } catch (const ShapeTooSmall&) {
      continue;
    } catch (const ShapeError&) {
      continue;
    }
    if (!cert.verified || !verify_a4(cert, coloring)) {
      out.viol = true;
      out.note = "certificate failed re-verification at target " +
                 std::to_string(tl);
      return out;
    }
    out.achieved = tl;
    out.full = tl == target;
    if (!out.full)
      out.note = "settled at target " + std::to_string(tl) + " of " +
                 std::to_string(target);
    return out;
  }
  out.note = "no certificate within depth";
  return out;
}

void run_strided(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& body) {
  int threads = std::max(1, jobs);
  threads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads),
                            count == 0 ? 1 : count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(threads))
        body(i);
    });
  for (std::thread& th : pool) th.join();
}

}  // namespace

std::vector<CreatureK1> dense_prefix_2_10(int depth) {
  std::vector<CreatureK1> t;
  for (int l = 0; l < depth; ++l) {
    CreatureK1 b;
    b.m_dn = l;
    b.m_up = l + 1;
    b.u = {l};
    b.i = l;
    for (int a = 0; a <= l; ++a) {
      b.a.insert(a);
      b.val.insert(Assignment{{l, a}});
    }
    t.push_back(std::move(b));
  }
  return t;
}

std::vector<CreatureK2> dense_prefix_2_11(int depth) {
  std::vector<CreatureK2> t;
  int pos = 0;
  for (int l = 0; l < depth; ++l) {
    int width = 3;
    while ((1 << width) < l + 1) ++width;
    CreatureK2 b;
    b.m_dn = pos;
    b.m_up = pos + width;
    pos = b.m_up;
    for (int p = 0; p < width; ++p) b.dis.push_back(b.m_dn + p);
    for (int idx = 0; idx <= l; ++idx) {
      Assignment f;
      for (int j = 0; j < width; ++j) f[b.m_dn + j] = idx >> j & 1;
      b.val.insert(std::move(f));
    }
    t.push_back(std::move(b));
  }
  return t;
}

std::vector<CreatureKN> dense_prefix_2_13(int alphabet, int depth) {
  std::vector<CreatureKN> t;
  for (int l = 0; l < depth; ++l) {
    CreatureKN b;
    b.alphabet = alphabet;
    b.m_dn = l;
    b.m_up = l + 1;
    t.push_back(std::move(b));
  }
  return t;
}

FragmentK1 sample_2_10(std::uint64_t seed) {
  return build_sample<CreatureK1>(
      "2.10", seed,
      [](Rng& r, int l, int& pos) { return random_k1_block(r, l, pos); },
      false);
}

FragmentK2 sample_2_11(std::uint64_t seed) {
  return build_sample<CreatureK2>(
      "2.11", seed,
      [](Rng& r, int l, int& pos) { return random_k2_block(r, l, pos); },
      true);
}

FragmentKN sample_2_13(std::uint64_t seed) {
  return build_sample<CreatureKN>(
      "2.13", seed,
      [](Rng& r, int, int& pos) { return random_kn_block(r, 2, pos); },
      false);
}

AxiomReport check_a1(const FragmentK1& s) { return a1_impl(s); }
AxiomReport check_a1(const FragmentK2& s) { return a1_impl(s); }
AxiomReport check_a1(const FragmentKN& s) { return a1_impl(s); }

AxiomReport check_a2(const FragmentK1& s) { return a2_impl(s, true); }
AxiomReport check_a2(const FragmentK2& s) { return a2_impl(s, false); }
AxiomReport check_a2(const FragmentKN& s) { return a2_impl(s, true); }

AxiomReport check_a3(const FragmentK1& s) { return a3_impl(s); }
AxiomReport check_a3(const FragmentK2& s) { return a3_impl(s); }
AxiomReport check_a3(const FragmentKN& s) { return a3_impl(s); }

std::vector<std::vector<CreatureK1>> cone_below(
    const std::vector<CreatureK1>& a, std::uint64_t cap) {
  return cone_impl(a, true, cap);
}
std::vector<std::vector<CreatureK2>> cone_below(
    const std::vector<CreatureK2>& a, std::uint64_t cap) {
  return cone_impl(a, false, cap);
}
std::vector<std::vector<CreatureKN>> cone_below(
    const std::vector<CreatureKN>& a, std::uint64_t cap) {
  return cone_impl(a, true, cap);
}

std::vector<AxiomReport> axiom_battery(const std::string& example,
                                       std::uint64_t first_seed, int count,
                                       int jobs) {
  if (example != "2.10" && example != "2.11" && example != "2.13")
    throw std::invalid_argument("unknown example tag");
  std::vector<std::array<AxiomReport, 3>> slots(
      static_cast<std::size_t>(std::max(0, count)));
  run_strided(slots.size(), jobs, [&](std::size_t i) {
    std::uint64_t seed = first_seed + i;
    if (example == "2.10") {
      FragmentK1 s = sample_2_10(seed);
      slots[i] = {check_a1(s), check_a2(s), check_a3(s)};
    } else if (example == "2.11") {
      FragmentK2 s = sample_2_11(seed);
      slots[i] = {check_a1(s), check_a2(s), check_a3(s)};
    } else {
      FragmentKN s = sample_2_13(seed);
      slots[i] = {check_a1(s), check_a2(s), check_a3(s)};
    }
  });
  std::vector<AxiomReport> out;
  out.reserve(slots.size() * 3);
  for (const std::array<AxiomReport, 3>& slot : slots)
    for (const AxiomReport& rep : slot) out.push_back(rep);
  return out;
}

A4Aggregate check_a4_finite(const std::string& example,
                            const std::vector<std::uint64_t>& seeds, int depth,
                            int k, int target, int jobs) {
  if (example != "2.10" && example != "2.11" && example != "2.13")
    throw std::invalid_argument("unknown example tag");
  A4Aggregate agg;
  agg.example = example;
  agg.depth = depth;
  agg.k = k;
  agg.target = target > 0 ? target : (example == "2.11" ? 1 : 2);
  agg.runs = static_cast<int>(seeds.size());
  std::vector<A4Outcome> slots(seeds.size());
  std::vector<CreatureK1> t10;
  std::vector<CreatureK2> t11;
  std::vector<CreatureKN> t13;
  if (example == "2.10") t10 = dense_prefix_2_10(depth);
  if (example == "2.11") t11 = dense_prefix_2_11(depth);
  if (example == "2.13") t13 = dense_prefix_2_13(2, depth);
  run_strided(seeds.size(), jobs, [&](std::size_t i) {
    std::uint64_t sd = seeds[i];
    if (example == "2.10") {
      slots[i] = a4_once(
          t10, k, agg.target,
          [](const std::vector<CreatureK1>& t, int kk, const ColoringK1& c,
             int tl) { return a4_example_2_10(t, kk, c, tl); },
          seeded_coloring_k1(sd));
    } else if (example == "2.11") {
      slots[i] = a4_once(
          t11, k, agg.target,
          [](const std::vector<CreatureK2>& t, int kk, const ColoringK2& c,
             int tl) { return a4_example_2_11(t, kk, c, tl); },
          seeded_coloring_k2(sd));
    } else {
      slots[i] = a4_once(
          t13, k, agg.target,
          [](const std::vector<CreatureKN>& t, int kk, const ColoringKN& c,
             int tl) { return a4_example_2_13(t, kk, c, tl); },
          seeded_coloring_kn(sd));
    }
  });
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const A4Outcome& o = slots[i];
    std::string head = "seed " + std::to_string(seeds[i]) + ": ";
    if (o.viol)
      agg.violations.push_back(head + o.note);
    else if (o.full)
      ++agg.verified;
    else
      agg.shortfalls.push_back(head + o.note);
  }
  return agg;
}

}  // namespace ramsey
