#include "ramsey/creatures.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace ramsey {
namespace {

bool increasing_in_range(const std::vector<int>& xs, int lo, int hi) {
  int prev = lo - 1;
  for (int v : xs) {
    if (v <= prev || v < lo || v >= hi) return false;
    prev = v;
  }
  return true;
}

bool domain_is(const Assignment& f, const std::vector<int>& dom) {
  if (f.size() != dom.size()) return false;
  std::size_t at = 0;
  for (const auto& [p, v] : f) {
    (void)v;
    if (p != dom[at++]) return false;
  }
  return true;
}

std::set<int> projection_at(const std::set<Assignment>& val, int i) {
  std::set<int> out;
  for (const Assignment& f : val) {
    auto it = f.find(i);
    if (it != f.end()) out.insert(it->second);
  }
  return out;
}

Assignment merged(const Assignment& a, const Assignment& b) {
  Assignment out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class C>
void check_chain(const std::vector<C>& parts, bool tight) {
  if (parts.empty()) throw std::invalid_argument("no blocks to compose");
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    bool ok = tight ? parts[j].m_up == parts[j + 1].m_dn
                    : parts[j].m_up <= parts[j + 1].m_dn;
    if (!ok) throw std::invalid_argument("blocks do not chain");
  }
}

template <class C>
std::vector<std::string> prefix_violations(const std::vector<C>& ts,
                                           bool tight) {
  std::vector<std::string> out;
  for (std::size_t l = 0; l < ts.size(); ++l) {
    for (const std::string& v : validate(ts[l]))
      out.push_back("block " + std::to_string(l) + ": " + v);
    if (l + 1 < ts.size()) {
      bool ok = tight ? ts[l].m_up == ts[l + 1].m_dn
                      : ts[l].m_up <= ts[l + 1].m_dn;
      if (!ok)
        out.push_back("block " + std::to_string(l) +
                      ": top boundary does not meet the next block");
    }
  }
  return out;
}

// all block-tuple unions, one val member per block
std::vector<Assignment> union_pool(const std::vector<CreatureK1>& parts,
                                   std::uint64_t cap) {
  std::vector<Assignment> pool{Assignment{}};
  for (const CreatureK1& t : parts) {
    if (pool.size() * t.val.size() > cap)
      throw EnumerationGuardExceeded("composition pool past the cap");
    std::vector<Assignment> next;
    next.reserve(pool.size() * t.val.size());
    for (const Assignment& u : pool)
      for (const Assignment& f : t.val) next.push_back(merged(u, f));
    pool = std::move(next);
  }
  return pool;
}

template <class C>
bool chains(const std::vector<C>& ts, bool tight) {
  for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
    bool ok = tight ? ts[j].m_up == ts[j + 1].m_dn
                    : ts[j].m_up <= ts[j + 1].m_dn;
    if (!ok) return false;
  }
  return true;
}

// consecutive runs of a's blocks, matched by boundary values; the top
// boundaries must agree and every run end is pinned by b's own boundaries
template <class C>
bool le_fin_runs(const std::vector<C>& b, const std::vector<C>& a,
                 bool tight) {
  if (!chains(b, tight) || !chains(a, tight)) return false;
  if (b.empty()) return true;
  if (a.empty()) return false;
  if (b.back().m_up != a.back().m_up) return false;
  std::size_t cursor = 0;
  for (const C& t : b) {
    std::size_t lo = cursor;
    while (lo < a.size() && a[lo].m_dn != t.m_dn) ++lo;
    std::size_t hi = lo;
    while (hi < a.size() && a[hi].m_up != t.m_up) ++hi;
    if (hi == a.size()) return false;
    std::vector<C> run(a.begin() + lo, a.begin() + hi + 1);
    if (!sigma_member(t, run)) return false;
    cursor = hi + 1;
  }
  return true;
}

template <class C, class ValOf>
std::set<Assignment> pos_impl(const std::vector<C>& prefix, PosMode mode,
                              std::uint64_t cap, ValOf val_of) {
  std::set<Assignment> out;
  if (mode == PosMode::loose) {
    for (const C& t : prefix)
      for (const Assignment& f : val_of(t)) {
        out.insert(f);
        if (out.size() > cap)
          throw EnumerationGuardExceeded("possibility count past the cap");
      }
    return out;
  }
  std::vector<Assignment> layer{Assignment{}};
  for (const C& t : prefix) {
    std::set<Assignment> vals = val_of(t);
    if (layer.size() * vals.size() > cap || out.size() > cap)
      throw EnumerationGuardExceeded("possibility count past the cap");
    std::vector<Assignment> next;
    next.reserve(layer.size() * vals.size());
    for (const Assignment& u : layer)
      for (const Assignment& f : vals) next.push_back(merged(u, f));
    out.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

CreatureK1 make_k1(const std::vector<CreatureK1>& parts, int l_star,
                   std::set<Assignment> val) {
  CreatureK1 out;
  out.m_dn = parts.front().m_dn;
  out.m_up = parts.back().m_up;
  for (const CreatureK1& t : parts)
    out.u.insert(out.u.end(), t.u.begin(), t.u.end());
  out.i = parts[static_cast<std::size_t>(l_star)].i;
  out.val = std::move(val);
  out.a = projection_at(out.val, out.i);
  return out;
}

}  // namespace

std::vector<std::string> validate(const CreatureK1& t) {
  std::vector<std::string> bad;
  if (t.m_dn >= t.m_up) bad.push_back("bounds: m_dn must be below m_up");
  if (t.u.empty() || !increasing_in_range(t.u, t.m_dn, t.m_up))
    bad.push_back("u: needs increasing positions inside [m_dn, m_up)");
  if (!std::binary_search(t.u.begin(), t.u.end(), t.i))
    bad.push_back("i: must be a member of u");
  if (t.a.empty() || *t.a.begin() < 0 || *t.a.rbegin() > t.i)
    bad.push_back("A: needs a nonempty subset of 0..i");
  if (t.val.empty()) bad.push_back("val: must be nonempty");
  for (const Assignment& f : t.val) {
    if (!domain_is(f, t.u)) {
      bad.push_back("val: every function must live exactly on u");
      break;
    }
  }
  for (const Assignment& f : t.val) {
    bool ok = true;
    for (const auto& [p, v] : f) ok = ok && v >= 0 && v <= p;
    if (!ok) {
      bad.push_back("val: values at position j stay within 0..j");
      break;
    }
  }
  if (bad.empty() && projection_at(t.val, t.i) != t.a)
    bad.push_back("A: must equal the projection of val at i");
  return bad;
}

std::vector<std::string> validate(const CreatureK2& t) {
  std::vector<std::string> bad;
  if (t.m_dn >= t.m_up) bad.push_back("bounds: m_dn must be below m_up");
  if (t.dis.empty() || !increasing_in_range(t.dis, t.m_dn, t.m_up))
    bad.push_back("dis: needs nonempty increasing positions inside [m_dn, m_up)");
  if (t.val.empty()) bad.push_back("val: must be nonempty");
  for (const Assignment& f : t.val) {
    if (!domain_is(f, t.dis)) {
      bad.push_back("val: every pattern must live exactly on dis");
      break;
    }
  }
  for (const Assignment& f : t.val) {
    bool ok = true;
    for (const auto& [p, v] : f) {
      (void)p;
      ok = ok && (v == 0 || v == 1);
    }
    if (!ok) {
      bad.push_back("val: patterns are 0/1 valued");
      break;
    }
  }
  return bad;
}

std::vector<std::string> validate(const CreatureKN& t) {
  std::vector<std::string> bad;
  if (t.alphabet < 1) bad.push_back("alphabet: needs at least one letter");
  if (t.m_dn >= t.m_up) bad.push_back("bounds: m_dn must be below m_up");
  if (!increasing_in_range(t.x, t.m_dn, t.m_up))
    bad.push_back("X: needs increasing positions inside [m_dn, m_up)");
  if (static_cast<int>(t.x.size()) >= t.m_up - t.m_dn)
    bad.push_back("X: must leave at least one free position");
  if (!domain_is(t.phi, t.x))
    bad.push_back("phi: must live exactly on X");
  for (const auto& [p, v] : t.phi) {
    (void)p;
    if (v < 0 || v >= t.alphabet) {
      bad.push_back("phi: letters stay below the alphabet size");
      break;
    }
  }
  return bad;
}

int nor_size(const CreatureK1& t) { return static_cast<int>(t.a.size()); }
int nor_size(const CreatureK2& t) { return static_cast<int>(t.val.size()); }
int nor_size(const CreatureKN& t) { return t.m_up; }

std::set<Assignment> kn_val(const CreatureKN& t) {
  std::set<Assignment> out;
  for (int letter = 0; letter < t.alphabet; ++letter) {
    Assignment f = t.phi;
    for (int p = t.m_dn; p < t.m_up; ++p)
      if (!f.count(p)) f[p] = letter;
    out.insert(std::move(f));
  }
  return out;
}

std::string describe(const CreatureKN& t) {
  std::string out;
  for (int p = t.m_dn; p < t.m_up; ++p) {
    auto it = t.phi.find(p);
    if (it == t.phi.end()) {
      out += 'v';
    } else if (it->second < 10) {
      out += static_cast<char>('0' + it->second);
    } else {
      out += '[' + std::to_string(it->second) + ']';
    }
  }
  return out;
}

std::vector<std::string> validate_prefix(const std::vector<CreatureK1>& ts) {
  return prefix_violations(ts, true);
}
std::vector<std::string> validate_prefix(const std::vector<CreatureK2>& ts) {
  return prefix_violations(ts, false);
}
std::vector<std::string> validate_prefix(const std::vector<CreatureKN>& ts) {
  return prefix_violations(ts, true);
}

CreatureK1 sigma_compose(const std::vector<CreatureK1>& parts,
                         const SigmaChoiceK1& choice) {
  check_chain(parts, true);
  if (choice.l_star < 0 ||
      choice.l_star >= static_cast<int>(parts.size()))
    throw std::invalid_argument("l* outside the blocks");
  if (choice.members.empty())
    throw std::invalid_argument("composition keeps at least one function");
  std::set<Assignment> val;
  for (const std::vector<Assignment>& tuple : choice.members) {
    if (tuple.size() != parts.size())
      throw std::invalid_argument("tuple needs one function per block");
    Assignment f;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (!parts[j].val.count(tuple[j]))
        throw std::invalid_argument("tuple entry not offered by its block");
      f = merged(f, tuple[j]);
    }
    val.insert(std::move(f));
  }
  return make_k1(parts, choice.l_star, std::move(val));
}

CreatureK2 sigma_compose(const std::vector<CreatureK2>& parts,
                         const SigmaChoiceK2& choice) {
  check_chain(parts, false);
  if (choice.l_star < 0 ||
      choice.l_star >= static_cast<int>(parts.size()))
    throw std::invalid_argument("l* outside the blocks");
  const CreatureK2& star = parts[static_cast<std::size_t>(choice.l_star)];
  if (choice.val_subset.empty())
    throw std::invalid_argument("composition keeps at least one pattern");
  for (const Assignment& f : choice.val_subset)
    if (!star.val.count(f))
      throw std::invalid_argument("pattern not offered by the l* block");
  CreatureK2 out;
  out.m_dn = parts.front().m_dn;
  out.m_up = parts.back().m_up;
  out.dis = star.dis;
  out.val = choice.val_subset;
  return out;
}

CreatureKN sigma_compose(const std::vector<CreatureKN>& parts,
                         const SigmaChoiceKN& choice) {
  check_chain(parts, true);
  if (choice.fills.size() != parts.size())
    throw std::invalid_argument("one fill entry per block");
  for (std::size_t j = 1; j < parts.size(); ++j)
    if (parts[j].alphabet != parts[0].alphabet)
      throw std::invalid_argument("blocks disagree on the alphabet");
  bool kept_one = false;
  CreatureKN out;
  out.alphabet = parts[0].alphabet;
  out.m_dn = parts.front().m_dn;
  out.m_up = parts.back().m_up;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const CreatureKN& t = parts[j];
    int fill = choice.fills[j];
    if (fill == kVar) {
      kept_one = true;
      out.x.insert(out.x.end(), t.x.begin(), t.x.end());
      out.phi.insert(t.phi.begin(), t.phi.end());
    } else if (fill >= 0 && fill < out.alphabet) {
      for (int p = t.m_dn; p < t.m_up; ++p) {
        out.x.push_back(p);
        auto it = t.phi.find(p);
        out.phi[p] = it == t.phi.end() ? fill : it->second;
      }
    } else {
      throw std::invalid_argument("fill is neither a letter nor a kept mark");
    }
  }
  if (!kept_one)
    throw std::invalid_argument("every block filled leaves no free position");
  return out;
}

std::vector<CreatureK1> sigma_enumerate(const std::vector<CreatureK1>& parts,
                                        std::uint64_t cap) {
  check_chain(parts, true);
  std::vector<Assignment> pool = union_pool(parts, cap);
  if (pool.size() > 62 ||
      parts.size() * ((1ull << pool.size()) - 1) > cap)
    throw EnumerationGuardExceeded("subcomposition count past the cap");
  std::vector<CreatureK1> out;
  for (int l_star = 0; l_star < static_cast<int>(parts.size()); ++l_star) {
    for (std::uint64_t mask = 1; mask < (1ull << pool.size()); ++mask) {
      std::set<Assignment> val;
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (mask >> b & 1) val.insert(pool[b]);
      out.push_back(make_k1(parts, l_star, std::move(val)));
    }
  }
  return out;
}

std::vector<CreatureK2> sigma_enumerate(const std::vector<CreatureK2>& parts,
                                        std::uint64_t cap) {
  check_chain(parts, false);
  std::uint64_t total = 0;
  for (const CreatureK2& t : parts) {
    if (t.val.size() > 62)
      throw EnumerationGuardExceeded("subcomposition count past the cap");
    total += (1ull << t.val.size()) - 1;
    if (total > cap)
      throw EnumerationGuardExceeded("subcomposition count past the cap");
  }
  std::vector<CreatureK2> out;
  for (int l_star = 0; l_star < static_cast<int>(parts.size()); ++l_star) {
    const CreatureK2& star = parts[static_cast<std::size_t>(l_star)];
    std::vector<Assignment> offers(star.val.begin(), star.val.end());
    for (std::uint64_t mask = 1; mask < (1ull << offers.size()); ++mask) {
      SigmaChoiceK2 choice;
      choice.l_star = l_star;
      for (std::size_t b = 0; b < offers.size(); ++b)
        if (mask >> b & 1) choice.val_subset.insert(offers[b]);
      out.push_back(sigma_compose(parts, choice));
    }
  }
  return out;
}

std::vector<CreatureKN> sigma_enumerate(const std::vector<CreatureKN>& parts,
                                        std::uint64_t cap) {
  check_chain(parts, true);
  int n = parts[0].alphabet;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    total *= static_cast<std::uint64_t>(n) + 1;
    if (total > cap)
      throw EnumerationGuardExceeded("subcomposition count past the cap");
  }
  std::vector<CreatureKN> out;
  // digit n marks a kept block; skip the all-filled combinations
  std::vector<int> digits(parts.size(), 0);
  while (true) {
    SigmaChoiceKN choice;
    bool kept = false;
    for (int d : digits) {
      kept = kept || d == n;
      choice.fills.push_back(d == n ? kVar : d);
    }
    if (kept) out.push_back(sigma_compose(parts, choice));
    std::size_t at = parts.size();
    while (at > 0 && digits[at - 1] == n) digits[--at] = 0;
    if (at == 0) break;
    ++digits[at - 1];
  }
  return out;
}

bool sigma_member(const CreatureK1& s, const std::vector<CreatureK1>& parts) {
  if (parts.empty() || !validate(s).empty()) return false;
  if (s.m_dn != parts.front().m_dn || s.m_up != parts.back().m_up)
    return false;
  std::vector<int> u;
  for (const CreatureK1& t : parts) u.insert(u.end(), t.u.begin(), t.u.end());
  if (s.u != u) return false;
  bool star_found = false;
  for (const CreatureK1& t : parts) star_found = star_found || t.i == s.i;
  if (!star_found) return false;
  for (const Assignment& f : s.val) {
    for (const CreatureK1& t : parts) {
      Assignment part;
      for (int p : t.u) {
        auto it = f.find(p);
        if (it == f.end()) return false;
        part[p] = it->second;
      }
      if (!t.val.count(part)) return false;
    }
  }
  return true;
}

bool sigma_member(const CreatureK2& s, const std::vector<CreatureK2>& parts) {
  if (parts.empty() || !validate(s).empty()) return false;
  if (s.m_dn != parts.front().m_dn || s.m_up != parts.back().m_up)
    return false;
  for (const CreatureK2& t : parts) {
    if (t.dis != s.dis) continue;
    bool inside = true;
    for (const Assignment& f : s.val) inside = inside && t.val.count(f) > 0;
    if (inside) return true;
  }
  return false;
}

bool sigma_member(const CreatureKN& s, const std::vector<CreatureKN>& parts) {
  if (parts.empty() || !validate(s).empty()) return false;
  if (s.m_dn != parts.front().m_dn || s.m_up != parts.back().m_up)
    return false;
  for (const CreatureKN& t : parts) {
    if (t.alphabet != s.alphabet) return false;
    std::vector<int> kept_x;
    for (int p : s.x)
      if (p >= t.m_dn && p < t.m_up) kept_x.push_back(p);
    bool agrees = true;
    for (const auto& [p, v] : t.phi) {
      auto it = s.phi.find(p);
      agrees = agrees && it != s.phi.end() && it->second == v;
    }
    if (kept_x == t.x && agrees) continue;
    if (static_cast<int>(kept_x.size()) != t.m_up - t.m_dn || !agrees)
      return false;
    std::optional<int> fill;
    bool constant = true;
    for (int p = t.m_dn; p < t.m_up; ++p) {
      if (std::binary_search(t.x.begin(), t.x.end(), p)) continue;
      int v = s.phi.at(p);
      if (fill && *fill != v) constant = false;
      fill = v;
    }
    if (!constant) return false;
  }
  return true;
}

bool le_fin(const std::vector<CreatureK1>& b,
            const std::vector<CreatureK1>& a) {
  return le_fin_runs(b, a, true);
}
bool le_fin(const std::vector<CreatureK2>& b,
            const std::vector<CreatureK2>& a) {
  return le_fin_runs(b, a, false);
}
bool le_fin(const std::vector<CreatureKN>& b,
            const std::vector<CreatureKN>& a) {
  return le_fin_runs(b, a, true);
}

std::set<Assignment> pos_enumerate(const std::vector<CreatureK1>& prefix,
                                   PosMode mode, std::uint64_t cap) {
  return pos_impl(prefix, mode, cap,
                  [](const CreatureK1& t) { return t.val; });
}
std::set<Assignment> pos_enumerate(const std::vector<CreatureK2>& prefix,
                                   PosMode mode, std::uint64_t cap) {
  return pos_impl(prefix, mode, cap,
                  [](const CreatureK2& t) { return t.val; });
}
std::set<Assignment> pos_enumerate(const std::vector<CreatureKN>& prefix,
                                   PosMode mode, std::uint64_t cap) {
  return pos_impl(prefix, mode, cap,
                  [](const CreatureKN& t) { return kn_val(t); });
}

bool in_dense_r1(const std::vector<CreatureK1>& prefix) {
  for (std::size_t l = 0; l < prefix.size(); ++l) {
    const CreatureK1& t = prefix[l];
    if (!validate(t).empty()) return false;
    if (t.a.size() != l + 1 || t.val.size() != l + 1) return false;
  }
  return true;
}

bool in_dense_r2(const std::vector<CreatureK2>& prefix) {
  for (std::size_t l = 0; l < prefix.size(); ++l) {
    if (!validate(prefix[l]).empty()) return false;
    if (prefix[l].val.size() != l + 1) return false;
  }
  return true;
}

std::vector<CreatureK1> dense_embed(const std::vector<CreatureK1>& source,
                                    int target_len) {
  std::vector<CreatureK1> out;
  std::size_t next = 0;
  for (int l = 0; l < target_len; ++l) {
    std::size_t e = next;
    while (e < source.size() &&
           static_cast<int>(source[e].a.size()) < l + 1)
      ++e;
    if (e == source.size())
      throw InsufficientMaterial("no block offers " + std::to_string(l + 1) +
                                 " values");
    std::vector<CreatureK1> run(source.begin() + next, source.begin() + e + 1);
    SigmaChoiceK1 choice;
    choice.l_star = static_cast<int>(e - next);
    auto stop = source[e].a.begin();
    std::advance(stop, l + 1);
    for (auto it = source[e].a.begin(); it != stop; ++it) {
      std::vector<Assignment> tuple;
      for (std::size_t j = next; j <= e; ++j) {
        if (j == e) {
          const CreatureK1& t = source[j];
          auto hit = std::find_if(
              t.val.begin(), t.val.end(),
              [&](const Assignment& f) { return f.at(t.i) == *it; });
          tuple.push_back(*hit);
        } else {
          tuple.push_back(*source[j].val.begin());
        }
      }
      choice.members.push_back(std::move(tuple));
    }
    out.push_back(sigma_compose(run, choice));
    next = e + 1;
  }
  return out;
}

std::vector<CreatureK2> dense_embed(const std::vector<CreatureK2>& source,
                                    int target_len) {
  std::vector<CreatureK2> out;
  std::size_t next = 0;
  for (int l = 0; l < target_len; ++l) {
    std::size_t e = next;
    while (e < source.size() &&
           static_cast<int>(source[e].val.size()) < l + 1)
      ++e;
    if (e == source.size())
      throw InsufficientMaterial("no block offers " + std::to_string(l + 1) +
                                 " patterns");
    std::vector<CreatureK2> run(source.begin() + next, source.begin() + e + 1);
    SigmaChoiceK2 choice;
    choice.l_star = static_cast<int>(e - next);
    auto stop = source[e].val.begin();
    std::advance(stop, l + 1);
    choice.val_subset = std::set<Assignment>(source[e].val.begin(), stop);
    out.push_back(sigma_compose(run, choice));
    next = e + 1;
  }
  return out;
}

VariableWord sigma_to_word(const CreatureKN& s,
                           const std::vector<CreatureKN>& blocks) {
  check_chain(blocks, true);
  if (s.m_dn != blocks.front().m_dn || s.m_up != blocks.back().m_up)
    throw std::invalid_argument("boundaries do not match the blocks");
  VariableWord w;
  w.alphabet = s.alphabet;
  for (const CreatureKN& t : blocks) {
    if (t.alphabet != s.alphabet)
      throw std::invalid_argument("blocks disagree on the alphabet");
    std::vector<int> kept_x;
    for (int p : s.x)
      if (p >= t.m_dn && p < t.m_up) kept_x.push_back(p);
    bool agrees = true;
    for (const auto& [p, v] : t.phi) {
      auto it = s.phi.find(p);
      agrees = agrees && it != s.phi.end() && it->second == v;
    }
    if (kept_x == t.x && agrees) {
      w.symbols.push_back(kVar);
      continue;
    }
    std::optional<int> fill;
    bool filled = agrees && static_cast<int>(kept_x.size()) == t.m_up - t.m_dn;
    for (int p = t.m_dn; filled && p < t.m_up; ++p) {
      if (std::binary_search(t.x.begin(), t.x.end(), p)) continue;
      int v = s.phi.at(p);
      filled = !fill || *fill == v;
      fill = v;
    }
    if (!filled || !fill)
      throw std::invalid_argument("not a composition of the blocks");
    w.symbols.push_back(*fill);
  }
  validate_variable_word(w);
  return w;
}

CreatureKN word_to_sigma(const std::vector<CreatureKN>& blocks,
                         const VariableWord& w) {
  validate_variable_word(w);
  if (w.symbols.size() != blocks.size())
    throw std::invalid_argument("one symbol per block");
  SigmaChoiceKN choice;
  choice.fills = w.symbols;
  CreatureKN out = sigma_compose(blocks, choice);
  if (out.alphabet != w.alphabet)
    throw std::invalid_argument("blocks disagree on the alphabet");
  return out;
}

}  // namespace ramsey
