#include "hrg/paths.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hrg/action.hpp"

namespace hrg {

Verdict check_filter(const PGraph& g, std::span<const MorphismId> elements) {
  const std::string check = "filter";
  if (elements.empty()) return Verdict::fail(check, "empty set");
  std::set<MorphismId> in(elements.begin(), elements.end());
  const VertexId r = g.range(elements.front());
  std::set<GroupElement> degrees;
  for (MorphismId lam : in) {
    if (g.range(lam) != r)
      return Verdict::fail(check, "elements do not share a range", json{{"element", g.name(lam)}});
    if (!degrees.insert(g.degree(lam)).second)
      return Verdict::fail(check, "two elements share a degree", json{{"element", g.name(lam)}});
    for (const auto& [mu, nu] : g.factorizations(lam))
      if (!in.count(mu))
        return Verdict::fail(check, "not hereditary",
                             json{{"element", g.name(lam)}, {"missing_prefix", g.name(mu)}});
  }
  for (MorphismId a : in)
    for (MorphismId b : in) {
      if (b <= a) continue;
      bool bounded = std::any_of(in.begin(), in.end(),
                                 [&](MorphismId c) { return precedes(g, a, c) && precedes(g, b, c); });
      if (!bounded)
        return Verdict::fail(check, "not directed", json{{"pair", json::array({g.name(a), g.name(b)})}});
    }
  return Verdict::pass(check);
}

Filter principal_filter(const PGraph& g, MorphismId lambda) {
  Filter f;
  for (const auto& [mu, nu] : g.factorizations(lambda)) f.elements.push_back(mu);
  std::sort(f.elements.begin(), f.elements.end());
  f.elements.erase(std::unique(f.elements.begin(), f.elements.end()), f.elements.end());
  f.frontier_open = g.extends_past_window(lambda);
  return f;
}

MorphismId filter_top(const PGraph& g, const Filter& a) {
  for (MorphismId top : a.elements)
    if (std::all_of(a.elements.begin(), a.elements.end(), [&](MorphismId m) { return precedes(g, m, top); }))
      return top;
  throw Error(ErrorKind::domain_mismatch, "set has no largest element");
}

std::string filter_name(const PGraph& g, const Filter& a) { return "F(" + g.name(filter_top(g, a)) + ")"; }

std::optional<std::size_t> PathSpace::index_of(const std::vector<MorphismId>& elements) const {
  auto it = index.find(elements);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

PathSpace enumerate_filters(const PGraph& g, std::size_t budget) {
  if (g.size() > budget)
    throw Error(ErrorKind::budget_exceeded, "graph exceeds the enumeration budget",
                json{{"morphisms", g.size()}, {"budget", budget}});
  PathSpace ps{g.window(), {}, {}};
  for (MorphismId lam = 0; lam < g.size(); ++lam) {
    auto f = principal_filter(g, lam);
    if (ps.index.emplace(f.elements, ps.filters.size()).second) ps.filters.push_back(std::move(f));
  }
  return ps;
}

std::optional<Filter> shift_filter(const PGraph& g, const Filter& a, const GroupElement& n) {
  const auto& p = g.monoid();
  Filter out;
  out.frontier_open = a.frontier_open;
  for (MorphismId lam : a.elements)
    if (p.leq(n, g.degree(lam))) out.elements.push_back(tail(g, lam, n));
  if (out.elements.empty()) return std::nullopt;
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

Filter prepend(const PGraph& g, MorphismId mu, const Filter& b) {
  if (b.elements.empty() || g.source(mu) != g.range(b.elements.front()))
    throw Error(ErrorKind::range_mismatch, "s(mu) differs from the range of the filter",
                json{{"mu", g.name(mu)}});
  std::set<MorphismId> acc;
  bool cut = false;
  for (MorphismId nu : b.elements) {
    if (!g.window().contains(multiply(g.degree(mu), g.degree(nu)))) {
      cut = true;
      continue;
    }
    for (const auto& [pre, rest] : g.factorizations(compose(g, mu, nu))) acc.insert(pre);
  }
  Filter out{{acc.begin(), acc.end()}, false};
  try {
    out.frontier_open = g.extends_past_window(filter_top(g, out));
  } catch (const Error&) {
    throw Error(ErrorKind::degree_overflow, "prepending leaves the window in several directions",
                json{{"mu", g.name(mu)}, {"cut", cut}});
  }
  return out;
}

std::vector<MorphismId> restrict_to(const PGraph& g, const Filter& a, const DegreeWindow& w) {
  std::vector<MorphismId> out;
  for (MorphismId lam : a.elements)
    if (w.contains(g.degree(lam))) out.push_back(lam);
  return out;
}

std::vector<PathState> path_states(const PGraph& g, const PathSpace& ps) {
  std::vector<PathState> states;
  std::map<std::pair<std::vector<MorphismId>, std::string>, std::size_t> seen;
  auto add = [&](PathState s) {
    auto key = std::pair{s.filter.elements, s.known.to_string()};
    if (seen.emplace(key, states.size()).second) states.push_back(std::move(s));
  };
  for (const auto& f : ps.filters) add({f, g.window()});
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].filter.frontier_open) continue;
    for (const auto& n : g.window().elements()) {
      if (n.is_identity()) continue;
      auto s = shift_filter(g, states[i].filter, n);
      if (!s) continue;
      add({std::move(*s), states[i].known.shifted(n)});
    }
  }
  return states;
}

PartialAction shift_on_paths(const PGraph& g, const PathSpace& ps) {
  auto states = path_states(g, ps);
  std::map<std::pair<std::vector<MorphismId>, std::string>, StateId> id_of;
  std::vector<std::string> names;
  for (StateId i = 0; i < states.size(); ++i) {
    id_of[{states[i].filter.elements, states[i].known.to_string()}] = i;
    auto nm = filter_name(g, states[i].filter);
    if (i >= ps.filters.size()) nm += "@" + states[i].known.to_string();
    names.push_back(std::move(nm));
  }
  return PartialAction::from_function(
      std::move(names), g.window(), [&](StateId x, const GroupElement& n) -> std::optional<StateId> {
        const auto& st = states[x];
        auto s = shift_filter(g, st.filter, n);
        if (!s) return std::nullopt;
        auto known = st.filter.frontier_open ? st.known.shifted(n) : g.window();
        return id_of.at({s->elements, known.to_string()});
      });
}

NicaSpace nica_omega(const QloMonoid& p, const DegreeWindow& depth) {
  auto graph = from_monoid(p, depth);
  auto space = enumerate_filters(graph);
  Verdict seg = Verdict::pass("segments dense");
  for (const auto& f : space.filters) {
    if (f.frontier_open) continue;
    MorphismId top = filter_top(graph, f);
    std::vector<MorphismId> segment;
    for (const auto& m : p.down_set(graph.degree(top))) segment.push_back(graph.with_degree(m).front());
    std::sort(segment.begin(), segment.end());
    if (segment != f.elements) {
      seg = Verdict::fail("segments dense", "filter is neither a segment nor frontier-open",
                          json{{"filter", filter_name(graph, f)}});
      break;
    }
  }
  return {std::move(graph), std::move(space), std::move(seg)};
}

}  // namespace hrg
