#pragma once

// Brute-force reference implementations.  They read only raw tables (the
// composition table, the action maps) and never call the code under test
// beyond accessors.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hrg/action.hpp"
#include "hrg/groupoid.hpp"
#include "hrg/pgraph.hpp"
#include "hrg/qlo.hpp"

namespace oracle {

using namespace hrg;

// mu <= lambda from the composition table alone.
inline std::vector<std::vector<bool>> prefix_matrix(const PGraph& g) {
  std::vector<std::vector<bool>> le(g.size(), std::vector<bool>(g.size(), false));
  for (MorphismId i = 0; i < g.size(); ++i) le[i][i] = true;
  for (const auto& c : g.composition_table()) le[c[0]][c[2]] = true;
  return le;
}

// Every nonempty hereditary directed subset, by scanning all 2^|Lambda| subsets.
inline std::set<std::vector<MorphismId>> power_set_filters(const PGraph& g) {
  const std::size_t n = g.size();
  auto le = prefix_matrix(g);
  std::set<std::vector<MorphismId>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1; };
    bool ok = true;
    for (std::size_t l = 0; l < n && ok; ++l) {
      if (!in(l)) continue;
      for (std::size_t m = 0; m < n && ok; ++m)
        if (le[m][l] && !in(m)) ok = false;  // hereditary
    }
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (!in(a) || !in(b)) continue;
        bool bounded = false;
        for (std::size_t c = 0; c < n && !bounded; ++c) bounded = in(c) && le[a][c] && le[b][c];
        ok = bounded;  // directed
      }
    if (!ok) continue;
    std::vector<MorphismId> s;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) s.push_back(i);
    out.insert(s);
  }
  return out;
}

// Reduced word of u v^-1 over {a, b} (letters 1, 2; negatives are inverses).
inline GroupElement word_label(const std::string& u, const std::string& v) {
  std::vector<std::int64_t> w;
  for (char c : u) w.push_back(c - 'a' + 1);
  for (auto it = v.rbegin(); it != v.rend(); ++it) w.push_back(-(*it - 'a' + 1));
  return GroupElement::word(w);
}

inline std::vector<std::string> ab_words(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      next.push_back(w + "a");
      next.push_back(w + "b");
    }
    out = next;
  }
  return out;
}

// Tail equivalence with lag on words of length n: x = uz, y = vz, label u v^-1.
inline std::set<std::tuple<std::string, GroupElement, std::string>> cuntz_arrows(std::size_t n) {
  std::set<std::tuple<std::string, GroupElement, std::string>> out;
  auto words = ab_words(n);
  for (const auto& x : words)
    for (const auto& y : words)
      for (std::size_t k = 0; k <= n; ++k) {  // |z| = k
        if (x.substr(n - k) != y.substr(n - k)) continue;
        out.emplace(x, word_label(x.substr(0, n - k), y.substr(0, n - k)), y);
      }
  return out;
}

// (x, m n^-1, y) for m, n in the window with x.m = y.n, read from the maps.
inline std::set<std::tuple<StateId, GroupElement, StateId>> semidirect_arrows(const PartialAction& a,
                                                                               std::size_t radius) {
  std::set<std::tuple<StateId, GroupElement, StateId>> out;
  for (const auto& m : a.degrees())
    for (const auto& n : a.degrees()) {
      auto q = multiply(m, inverse(n));
      if (q.length() > radius) continue;
      const auto& tm = a.map(m);
      const auto& tn = a.map(n);
      for (StateId x = 0; x < a.size(); ++x)
        for (StateId y = 0; y < a.size(); ++y)
          if (tm[x] && tn[y] && *tm[x] == *tn[y]) out.emplace(x, q, y);
    }
  return out;
}

inline std::set<std::tuple<StateId, GroupElement, StateId>> arrow_set(const Groupoid& g) {
  std::set<std::tuple<StateId, GroupElement, StateId>> out;
  for (ArrowId id = 0; id < g.size(); ++id) out.emplace(g.arrow(id).target, g.arrow(id).label, g.arrow(id).source);
  return out;
}

// Naive associativity: every composable triple, composites looked up by label.
inline bool associative(const Groupoid& g) {
  for (ArrowId a = 0; a < g.size(); ++a)
    for (ArrowId b = 0; b < g.size(); ++b) {
      if (g.arrow(a).source != g.arrow(b).target) continue;
      auto ab = g.find(g.arrow(a).target, multiply(g.arrow(a).label, g.arrow(b).label), g.arrow(b).source);
      if (!ab) continue;
      for (ArrowId c = 0; c < g.size(); ++c) {
        if (g.arrow(b).source != g.arrow(c).target) continue;
        auto bc = g.find(g.arrow(b).target, multiply(g.arrow(b).label, g.arrow(c).label), g.arrow(c).source);
        if (!bc) continue;
        auto l = g.find(g.arrow(*ab).target, multiply(g.arrow(*ab).label, g.arrow(c).label), g.arrow(c).source);
        auto r = g.find(g.arrow(a).target, multiply(g.arrow(a).label, g.arrow(*bc).label), g.arrow(*bc).source);
        if (l != r) return false;
      }
    }
  return true;
}

// Plain greedy cover: rescan every shift each round, keep the first maximum.
inline std::vector<GroupElement> greedy_cover(const Groupoid& g, const std::vector<std::pair<UnitId, GroupElement>>& y,
                                              const GroupSpec& q, std::size_t search, std::size_t window) {
  std::set<std::pair<UnitId, GroupElement>> todo;
  for (UnitId u = 0; u < g.unit_count(); ++u)
    for (const auto& a : ball(q, window)) todo.emplace(u, a);
  std::vector<GroupElement> picked;
  auto shifts = ball(q, search);
  while (!todo.empty()) {
    std::size_t best = 0;
    const GroupElement* pick = nullptr;
    for (const auto& t : shifts) {
      std::size_t hit = 0;
      for (const auto& [u, b] : y) hit += todo.count({u, multiply(t, b)});
      if (hit > best) {
        best = hit;
        pick = &t;
      }
    }
    if (!pick) break;
    picked.push_back(*pick);
    for (const auto& [u, b] : y) todo.erase({u, multiply(*pick, b)});
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace oracle
