#include "hrg/boundary.hpp"

#include <algorithm>
#include <set>

namespace hrg {

namespace {

json names(const PGraph& g, std::span<const MorphismId> ids) {
  json j = json::array();
  for (auto id : ids) j.push_back(g.name(id));
  return j;
}

std::vector<MorphismId> at_vertex(const PGraph& g, VertexId v) {
  std::vector<MorphismId> out;
  for (MorphismId id = 0; id < g.size(); ++id)
    if (g.range(id) == v) out.push_back(id);
  return out;
}

bool exhaustive_at(const PGraph& g, VertexId v, std::span<const MorphismId> e) {
  for (MorphismId lam : at_vertex(g, v))
    if (std::none_of(e.begin(), e.end(), [&](MorphismId mu) { return g.range(mu) == v && has_cub(g, lam, mu); }))
      return false;
  return true;
}

std::vector<MorphismId> candidates(const PGraph& g, VertexId v, ExhaustiveFamily family) {
  std::vector<MorphismId> out;
  if (family == ExhaustiveFamily::window) {
    for (MorphismId id : at_vertex(g, v))
      if (!g.is_vertex(id)) out.push_back(id);
    return out;
  }
  const auto& p = g.monoid();
  auto gens = p.generators();
  std::set<GroupElement> degrees(gens.begin(), gens.end());
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (auto l = p.lub(a, b)) degrees.insert(*l);
  for (const auto& d : degrees)
    for (MorphismId id : g.with_degree(d))
      if (g.range(id) == v) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool has_cub(const PGraph& g, MorphismId a, MorphismId b) {
  if (g.range(a) != g.range(b)) return false;
  auto l = g.monoid().lub(g.degree(a), g.degree(b));
  if (!l) return false;
  if (!g.window().contains(*l)) return true;
  for (MorphismId nu : g.with_degree(*l))
    if (precedes(g, a, nu) && precedes(g, b, nu)) return true;
  return false;
}

bool is_exhaustive(const PGraph& g, std::span<const MorphismId> e) {
  std::set<VertexId> ranges;
  for (auto mu : e) ranges.insert(g.range(mu));
  return std::all_of(ranges.begin(), ranges.end(), [&](VertexId v) { return exhaustive_at(g, v, e); });
}

Extendability is_extendable(const PGraph& g, const Filter& a, MorphismId lambda, ExhaustiveFamily family) {
  if (!std::binary_search(a.elements.begin(), a.elements.end(), lambda))
    throw Error(ErrorKind::lambda_not_in_filter, g.name(lambda) + " is not in the filter",
                json{{"lambda", g.name(lambda)}});
  const VertexId v = g.source(lambda);
  std::vector<MorphismId> bad, bad_strict;
  for (MorphismId mu : candidates(g, v, family)) {
    auto d = multiply(g.degree(lambda), g.degree(mu));
    if (!g.window().contains(d)) {
      bad_strict.push_back(mu);
      if (!a.frontier_open) bad.push_back(mu);
      continue;
    }
    MorphismId lm = compose(g, lambda, mu);
    if (!std::binary_search(a.elements.begin(), a.elements.end(), lm)) {
      bad.push_back(mu);
      bad_strict.push_back(mu);
    }
  }
  Extendability out;
  if (!bad.empty() && exhaustive_at(g, v, bad)) {
    out.extendable = false;
    out.blocking = std::move(bad);
    return out;
  }
  out.by_convention = !bad_strict.empty() && exhaustive_at(g, v, bad_strict);
  return out;
}

BoundaryReport boundary_report(const PGraph& g, const PathSpace& ps, ExhaustiveFamily family) {
  BoundaryReport rep;
  for (std::size_t i = 0; i < ps.filters.size(); ++i) {
    const auto& f = ps.filters[i];
    FilterExtendability row;
    row.filter = i;
    for (MorphismId lam : f.elements) {
      auto e = is_extendable(g, f, lam, family);
      row.by_convention = row.by_convention || e.by_convention;
      if (!e.extendable) {
        row.boundary = false;
        row.failing = lam;
        row.blocking = std::move(e.blocking);
        break;
      }
    }
    if (row.boundary) rep.boundary.push_back(i);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<std::size_t> boundary_paths(const PGraph& g, const PathSpace& ps, ExhaustiveFamily family) {
  return boundary_report(g, ps, family).boundary;
}

Verdict check_boundary_invariance(const PGraph& g, const PathSpace& ps, std::span<const std::size_t> bd) {
  const std::string check = "boundary invariance";
  auto member = [&](const std::vector<MorphismId>& elements, const DegreeWindow& known) {
    return std::any_of(bd.begin(), bd.end(),
                       [&](std::size_t c) { return restrict_to(g, ps.filters.at(c), known) == elements; });
  };
  for (std::size_t b : bd) {
    const auto& f = ps.filters.at(b);
    for (const auto& n : g.window().elements()) {
      if (n.is_identity()) continue;
      auto s = shift_filter(g, f, n);
      if (!s) continue;
      auto known = f.frontier_open ? g.window().shifted(n) : g.window();
      if (!member(s->elements, known))
        return Verdict::fail(check, "shift leaves the set",
                             json{{"filter", filter_name(g, f)}, {"n", n.to_string()},
                                  {"result", names(g, s->elements)}});
    }
    const VertexId r = g.range(f.elements.front());
    for (MorphismId mu = g.vertex_count(); mu < g.size(); ++mu) {
      if (g.source(mu) != r) continue;
      Filter pre;
      try {
        pre = prepend(g, mu, f);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::degree_overflow) throw;
        return Verdict::unknown(check, "prepend result not representable in the window",
                                json{{"filter", filter_name(g, f)}, {"mu", g.name(mu)}});
      }
      if (!member(pre.elements, g.window()))
        return Verdict::fail(check, "prepend leaves the set",
                             json{{"filter", filter_name(g, f)}, {"mu", g.name(mu)},
                                  {"result", names(g, pre.elements)}});
    }
  }
  return Verdict::pass(check);
}

DirectedIso directed_action_iso(const PartialAction& a) {
  const std::string check = "directed action isomorphism";
  auto graph = from_action(a);
  auto space = enumerate_filters(graph);
  auto bd = boundary_paths(graph, space);
  DirectedIso out{Verdict::pass(check), std::move(graph), std::move(space), std::move(bd), {}};
  const auto& g = out.graph;

  if (auto v = validate(a); !v) {
    out.verdict = v;
    return out;
  }
  if (auto v = is_directed(a); v.status == Status::violation) {
    out.verdict = v;
    return out;
  }

  std::vector<Filter> j(a.size());
  for (MorphismId id = 0; id < g.size(); ++id) j[g.range(id)].elements.push_back(id);
  std::set<std::size_t> hit;
  for (StateId x = 0; x < a.size(); ++x) {
    auto idx = out.space.index_of(j[x].elements);
    if (!idx) {
      out.verdict = Verdict::fail(check, "J(x) is not a filter", json{{"x", a.name(x)}});
      return out;
    }
    j[x] = out.space.filters[*idx];
    if (!std::binary_search(out.boundary.begin(), out.boundary.end(), *idx)) {
      out.verdict = Verdict::fail(check, "J(x) is not a boundary path", json{{"x", a.name(x)}});
      return out;
    }
    if (!hit.insert(*idx).second) {
      out.verdict = Verdict::fail(check, "J is not injective", json{{"x", a.name(x)}});
      return out;
    }
    out.image.push_back(*idx);
  }
  if (hit.size() != out.boundary.size()) {
    for (auto b : out.boundary)
      if (!hit.count(b)) {
        out.verdict = Verdict::fail(check, "J misses a boundary path",
                                    json{{"filter", filter_name(g, out.space.filters[b])}});
        return out;
      }
  }
  for (StateId x = 0; x < a.size(); ++x)
    for (const auto& m : a.degrees()) {
      auto y = a.act(x, m);
      if (!y) continue;
      auto s = shift_filter(g, j[x], m);
      auto known = j[x].frontier_open ? g.window().shifted(m) : g.window();
      auto expect = restrict_to(g, j[*y], known);
      if (!s || s->elements != expect) {
        out.verdict = Verdict::fail(check, "J(x.m) differs from J(x) shifted by m",
                                    json{{"x", a.name(x)}, {"m", m.to_string()}});
        return out;
      }
    }
  return out;
}

}  // namespace hrg
