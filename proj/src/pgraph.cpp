#include "hrg/pgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hrg/action.hpp"

namespace hrg {

namespace {

std::uint64_t pair_key(MorphismId a, MorphismId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

json morphism_json(const PGraph& g, MorphismId id) {
  return json{{"name", g.name(id)}, {"degree", g.degree(id).to_string()}};
}

}  // namespace

PGraph::PGraph(DegreeWindow window, Tables t)
    : window_(std::move(window)), vertex_count_(t.vertices.size()) {
  const auto& p = window_.monoid();
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    info_.push_back({t.vertices[v], v, v, p.identity()});
  for (auto& m : t.morphisms) {
    if (m.range >= vertex_count_ || m.source >= vertex_count_)
      throw Error(ErrorKind::schema, "morphism " + m.name + " has an unknown endpoint");
    p.require(m.degree);
    if (!window_.contains(m.degree))
      throw Error(ErrorKind::degree_overflow, "morphism " + m.name + " lies outside the window",
                  json{{"name", m.name}, {"degree", m.degree.to_string()}});
    info_.push_back(std::move(m));
  }
  for (MorphismId id = 0; id < info_.size(); ++id) {
    if (!by_name_.emplace(info_[id].name, id).second)
      throw Error(ErrorKind::schema, "duplicate morphism name " + info_[id].name);
    by_degree_[info_[id].degree].push_back(id);
  }

  auto add = [this](MorphismId mu, MorphismId nu, MorphismId lam) {
    if (mu >= info_.size() || nu >= info_.size() || lam >= info_.size())
      throw Error(ErrorKind::schema, "composition refers to an unknown morphism");
    auto [it, fresh] = compose_.emplace(pair_key(mu, nu), lam);
    if (!fresh && it->second != lam)
      throw Error(ErrorKind::schema, "conflicting compositions",
                  json{{"first", name(mu)}, {"second", name(nu)}});
  };
  for (const auto& c : t.compositions) add(c[0], c[1], c[2]);
  for (MorphismId id = 0; id < info_.size(); ++id) {
    add(info_[id].range, id, id);
    add(id, info_[id].source, id);
  }
  for (const auto& [k, lam] : compose_)
    table_.push_back({static_cast<MorphismId>(k >> 32), static_cast<MorphismId>(k & 0xffffffffULL), lam});
  std::sort(table_.begin(), table_.end());

  factors_.resize(info_.size());
  for (const auto& [mu, nu, lam] : table_) factors_[lam].emplace_back(mu, nu);
  for (auto& f : factors_)
    std::sort(f.begin(), f.end(), [this](const auto& a, const auto& b) {
      if (auto c = info_[a.first].degree <=> info_[b.first].degree; c != 0) return c < 0;
      return a < b;
    });

  extensions_ = std::move(t.extensions);
  if (extensions_.empty()) {
    extensions_.resize(vertex_count_);
    auto gens = p.generators();
    for (const auto& gen : gens)
      for (MorphismId id : with_degree(gen)) extensions_[info_[id].range].push_back(gen);
    for (auto& e : extensions_) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
  }
  if (extensions_.size() != vertex_count_)
    throw Error(ErrorKind::schema, "extension table does not match the vertex count");
  infinite_fibers_ = std::move(t.infinite_fibers);
}

std::optional<MorphismId> PGraph::find(const std::string& n) const {
  auto it = by_name_.find(n);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::span<const MorphismId> PGraph::with_degree(const GroupElement& m) const {
  auto it = by_degree_.find(m);
  if (it == by_degree_.end()) return {};
  return it->second;
}

std::optional<MorphismId> PGraph::lookup(MorphismId mu, MorphismId nu) const {
  auto it = compose_.find(pair_key(mu, nu));
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::pair<MorphismId, MorphismId>> PGraph::factorizations(MorphismId lambda) const {
  return factors_.at(lambda);
}

bool PGraph::extends_past_window(MorphismId lambda) const {
  const auto& d = degree(lambda);
  for (const auto& gen : extensions_.at(source(lambda)))
    if (!window_.contains(multiply(d, gen))) return true;
  return false;
}

MorphismId compose(const PGraph& g, MorphismId mu, MorphismId nu) {
  if (g.source(mu) != g.range(nu))
    throw Error(ErrorKind::not_composable, g.name(mu) + " and " + g.name(nu) + " are not composable",
                json{{"first", g.name(mu)}, {"second", g.name(nu)}});
  auto d = multiply(g.degree(mu), g.degree(nu));
  if (!g.window().contains(d))
    throw Error(ErrorKind::degree_overflow, "composite degree " + d.to_string() + " leaves the window",
                json{{"first", g.name(mu)}, {"second", g.name(nu)}, {"degree", d.to_string()}});
  auto lam = g.lookup(mu, nu);
  if (!lam)
    throw Error(ErrorKind::missing_composite, "composition table has no entry",
                json{{"first", g.name(mu)}, {"second", g.name(nu)}});
  return *lam;
}

std::pair<MorphismId, MorphismId> factorize(const PGraph& g, MorphismId lambda, const GroupElement& m) {
  if (!g.monoid().contains(m) || !g.monoid().leq(m, g.degree(lambda)))
    throw Error(ErrorKind::degree_not_dominated, m.to_string() + " is not below d(" + g.name(lambda) + ")",
                json{{"morphism", g.name(lambda)}, {"degree", m.to_string()}});
  for (const auto& f : g.factorizations(lambda))
    if (g.degree(f.first) == m) return f;
  throw Error(ErrorKind::missing_composite, "no factorisation of the requested degree",
              json{{"morphism", g.name(lambda)}, {"degree", m.to_string()}});
}

bool precedes(const PGraph& g, MorphismId mu, MorphismId lambda) {
  if (g.range(mu) != g.range(lambda)) return false;
  if (!g.monoid().leq(g.degree(mu), g.degree(lambda))) return false;
  for (const auto& f : g.factorizations(lambda))
    if (f.first == mu) return true;
  return false;
}

Verdict verify_ufp(const PGraph& g) {
  const std::string check = "unique factorisation";
  const auto& p = g.monoid();
  for (const auto& [mu, nu, lam] : g.composition_table()) {
    bool ok = g.source(mu) == g.range(nu) && g.range(lam) == g.range(mu) && g.source(lam) == g.source(nu) &&
              g.degree(lam) == multiply(g.degree(mu), g.degree(nu));
    if (!ok)
      return Verdict::fail(check, "composition is not functorial",
                           json{{"first", morphism_json(g, mu)},
                                {"second", morphism_json(g, nu)},
                                {"composite", morphism_json(g, lam)}});
  }

  std::vector<std::vector<MorphismId>> by_range(g.vertex_count());
  for (MorphismId id = 0; id < g.size(); ++id) by_range[g.range(id)].push_back(id);

  // Totality: every composable pair inside the window composes.
  for (MorphismId mu = 0; mu < g.size(); ++mu)
    for (MorphismId nu : by_range[g.source(mu)]) {
      auto d = multiply(g.degree(mu), g.degree(nu));
      if (g.window().contains(d) && !g.lookup(mu, nu))
        return Verdict::fail(check, "composable pair has no composite",
                             json{{"first", morphism_json(g, mu)}, {"second", morphism_json(g, nu)}});
    }

  // Exactly one factorisation per intermediate degree.
  for (MorphismId lam = 0; lam < g.size(); ++lam) {
    auto f = g.factorizations(lam);
    for (const auto& m : p.down_set(g.degree(lam))) {
      json hits = json::array();
      for (const auto& [mu, nu] : f)
        if (g.degree(mu) == m) hits.push_back(json::array({g.name(mu), g.name(nu)}));
      if (hits.size() != 1) {
        json w{{"morphism", morphism_json(g, lam)},
               {"m", m.to_string()},
               {"n", multiply(inverse(m), g.degree(lam)).to_string()},
               {"pairs", hits}};
        return Verdict::fail(check, hits.empty() ? "missing factorisation" : "colliding factorisations",
                             std::move(w));
      }
    }
  }

  // Associativity on triples inside the window.
  for (const auto& [mu, nu, mn] : g.composition_table()) {
    if (g.is_vertex(mu) || g.is_vertex(nu)) continue;
    for (MorphismId rho : by_range[g.source(nu)]) {
      if (g.is_vertex(rho)) continue;
      auto left = g.lookup(mn, rho);
      auto nr = g.lookup(nu, rho);
      auto right = nr ? g.lookup(mu, *nr) : std::nullopt;
      if (left != right)
        return Verdict::fail(check, "composition is not associative",
                             json{{"triple", json::array({g.name(mu), g.name(nu), g.name(rho)})}});
    }
  }
  return Verdict::pass(check);
}

Verdict check_rd_proper(const PGraph& g) {
  if (g.infinite_fibers().empty()) return Verdict::pass("(r,d) proper");
  const auto& [v, n] = g.infinite_fibers().front();
  return Verdict::fail("(r,d) proper", "fibre declared infinite",
                       json{{"vertex", g.name(v)}, {"degree", n.to_string()}});
}

std::vector<MorphismId> lub_set(const PGraph& g, std::span<const MorphismId> a, std::span<const MorphismId> b) {
  std::set<MorphismId> out;
  for (MorphismId lam : a)
    for (MorphismId mu : b) {
      if (g.range(lam) != g.range(mu)) continue;
      auto l = g.monoid().lub(g.degree(lam), g.degree(mu));
      if (!l || !g.window().contains(*l)) continue;
      for (MorphismId nu : g.with_degree(*l))
        if (precedes(g, lam, nu) && precedes(g, mu, nu)) out.insert(nu);
    }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Builders

PGraph from_skeleton(const Skeleton& sk, const DegreeWindow& depth) {
  if (!(depth.monoid().group() == GroupSpec::zd(sk.colors)))
    throw Error(ErrorKind::group_mismatch, "skeleton with " + std::to_string(sk.colors) +
                                               " colours needs the window to live in N^" +
                                               std::to_string(sk.colors));
  std::map<std::string, VertexId> vidx;
  for (VertexId v = 0; v < sk.vertices.size(); ++v)
    if (!vidx.emplace(sk.vertices[v], v).second)
      throw Error(ErrorKind::schema, "duplicate vertex " + sk.vertices[v]);

  struct E {
    std::string name;
    std::size_t color;
    VertexId r, s;
  };
  std::vector<E> edges;
  std::map<std::string, std::size_t> eidx;
  for (const auto& e : sk.edges) {
    if (e.color >= sk.colors) throw Error(ErrorKind::schema, "edge " + e.name + " has colour out of range");
    auto r = vidx.find(e.range);
    auto s = vidx.find(e.source);
    if (r == vidx.end() || s == vidx.end())
      throw Error(ErrorKind::schema, "edge " + e.name + " has an unknown endpoint");
    if (!eidx.emplace(e.name, edges.size()).second) throw Error(ErrorKind::schema, "duplicate edge " + e.name);
    edges.push_back({e.name, e.color, r->second, s->second});
  }

  // (third, fourth) -> (first, second)
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> swap;
  for (const auto& sq : sk.squares) {
    json w = json::array({sq.first, sq.second, sq.third, sq.fourth});
    std::array<std::size_t, 4> ix{};
    std::array<const std::string*, 4> nm{&sq.first, &sq.second, &sq.third, &sq.fourth};
    for (std::size_t i = 0; i < 4; ++i) {
      auto it = eidx.find(*nm[i]);
      if (it == eidx.end()) throw Error(ErrorKind::square_mismatch, "square names unknown edge " + *nm[i], w);
      ix[i] = it->second;
    }
    const auto &a = edges[ix[0]], &b = edges[ix[1]], &c = edges[ix[2]], &d = edges[ix[3]];
    if (!(a.color == d.color && b.color == c.color && a.color < b.color))
      throw Error(ErrorKind::square_mismatch, "square colours are not (i,j,j,i) with i<j", w);
    if (!(a.s == b.r && c.s == d.r && a.r == c.r && b.s == d.s))
      throw Error(ErrorKind::square_mismatch, "square endpoints disagree", w);
    auto [it, fresh] = swap.emplace(std::pair{ix[2], ix[3]}, std::pair{ix[0], ix[1]});
    if (!fresh && it->second != std::pair{ix[0], ix[1]})
      throw Error(ErrorKind::square_mismatch, "pair " + c.name + "." + d.name + " is assigned two squares", w);
  }

  using Path = std::vector<std::size_t>;
  auto try_swap = [&](Path& path, std::size_t pos) {
    auto it = swap.find({path[pos], path[pos + 1]});
    if (it == swap.end()) return false;
    path[pos] = it->second.first;
    path[pos + 1] = it->second.second;
    return true;
  };
  auto normalize = [&](Path path) -> std::optional<Path> {
    for (;;) {
      std::size_t pos = 0;
      while (pos + 1 < path.size() && edges[path[pos]].color <= edges[path[pos + 1]].color) ++pos;
      if (pos + 1 >= path.size()) return path;
      if (!try_swap(path, pos)) return std::nullopt;
    }
  };

  // Cube condition: both reduced words for reversing three colours agree.
  for (std::size_t x = 0; x < edges.size(); ++x)
    for (std::size_t y = 0; y < edges.size(); ++y) {
      if (edges[x].s != edges[y].r || edges[x].color <= edges[y].color) continue;
      for (std::size_t z = 0; z < edges.size(); ++z) {
        if (edges[y].s != edges[z].r || edges[y].color <= edges[z].color) continue;
        Path p1{x, y, z}, p2{x, y, z};
        bool ok1 = try_swap(p1, 0) && try_swap(p1, 1) && try_swap(p1, 0);
        bool ok2 = try_swap(p2, 1) && try_swap(p2, 0) && try_swap(p2, 1);
        if (ok1 && ok2 && p1 != p2) {
          auto names = [&](const Path& p) {
            json j = json::array();
            for (auto e : p) j.push_back(edges[e].name);
            return j;
          };
          throw Error(ErrorKind::cube_inconsistency, "square rewrites of a three-colour path disagree",
                      json{{"triple", names({x, y, z})}, {"via_012", names(p1)}, {"via_121", names(p2)}});
        }
      }
    }

  // Normal-form paths: colours non-decreasing.
  std::vector<std::pair<GroupElement, Path>> paths;
  for (const auto& m : depth.elements()) {
    if (m.is_identity()) continue;
    std::vector<std::size_t> colors;
    for (std::size_t c = 0; c < sk.colors; ++c)
      for (std::int64_t k = 0; k < m.coords()[c]; ++k) colors.push_back(c);
    Path cur;
    std::function<void()> rec = [&] {
      if (cur.size() == colors.size()) {
        paths.emplace_back(m, cur);
        return;
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].color != colors[cur.size()]) continue;
        if (!cur.empty() && edges[cur.back()].s != edges[e].r) continue;
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  auto path_name = [&](const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += '.';
      s += edges[p[i]].name;
    }
    return s;
  };
  std::sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
    if (auto c = a.first <=> b.first; c != 0) return c < 0;
    if (edges[a.second.front()].r != edges[b.second.front()].r)
      return edges[a.second.front()].r < edges[b.second.front()].r;
    return path_name(a.second) < path_name(b.second);
  });

  PGraph::Tables t;
  t.vertices = sk.vertices;
  std::map<Path, MorphismId> id_of;
  const std::size_t nv = sk.vertices.size();
  std::vector<Path> path_of(nv);
  for (const auto& [m, p] : paths) {
    id_of[p] = nv + t.morphisms.size();
    path_of.push_back(p);
    t.morphisms.push_back({path_name(p), edges[p.front()].r, edges[p.back()].s, m});
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) {
      const auto& [dm, pm] = paths[i];
      const auto& [dn, pn] = paths[j];
      if (edges[pm.back()].s != edges[pn.front()].r) continue;
      if (!depth.contains(multiply(dm, dn))) continue;
      Path cat = pm;
      cat.insert(cat.end(), pn.begin(), pn.end());
      auto nf = normalize(std::move(cat));
      if (!nf) continue;
      auto it = id_of.find(*nf);
      if (it == id_of.end()) continue;
      t.compositions.push_back({nv + i, nv + j, it->second});
    }

  t.extensions.resize(nv);
  for (const auto& e : edges) {
    std::vector<std::int64_t> c(sk.colors, 0);
    c[e.color] = 1;
    t.extensions[e.r].push_back(GroupElement::vector(std::move(c)));
  }
  for (auto& ext : t.extensions) {
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  }
  return PGraph(depth, std::move(t));
}

PGraph from_monoid(const QloMonoid& p, const DegreeWindow& depth) {
  if (!(depth.monoid() == p)) throw Error(ErrorKind::group_mismatch, "window lives in a different monoid");
  const auto& els = depth.elements();
  PGraph::Tables t;
  t.vertices.push_back(p.identity().to_string());
  std::map<GroupElement, MorphismId> id_of;
  for (MorphismId i = 0; i < els.size(); ++i) {
    id_of[els[i]] = i;
    if (i) t.morphisms.push_back({els[i].to_string(), 0, 0, els[i]});
  }
  for (MorphismId i = 1; i < els.size(); ++i)
    for (MorphismId j = 1; j < els.size(); ++j) {
      auto mn = multiply(els[i], els[j]);
      if (depth.contains(mn)) t.compositions.push_back({i, j, id_of.at(mn)});
    }
  t.extensions = {p.generators()};
  return PGraph(depth, std::move(t));
}

PGraph from_action(const PartialAction& a, std::optional<DegreeWindow> depth) {
  DegreeWindow w = depth.value_or(a.window());
  for (const auto& m : w.elements())
    if (!a.window().contains(m))
      throw Error(ErrorKind::degree_overflow, "requested depth exceeds the action's window",
                  json{{"degree", m.to_string()}});
  PGraph::Tables t;
  const std::size_t nx = a.size();
  for (StateId x = 0; x < nx; ++x) t.vertices.push_back(a.name(x));
  std::map<std::pair<GroupElement, StateId>, MorphismId> id_of;
  for (StateId x = 0; x < nx; ++x) id_of[{w.elements().front(), x}] = x;
  for (const auto& n : w.elements()) {
    if (n.is_identity()) continue;
    for (StateId x = 0; x < nx; ++x) {
      auto y = a.act(x, n);
      if (!y) continue;
      id_of[{n, x}] = nx + t.morphisms.size();
      t.morphisms.push_back({a.name(x) + "*" + n.to_string(), x, *y, n});
    }
  }
  for (const auto& [km, mid] : id_of) {
    const auto& [m, x] = km;
    if (m.is_identity()) continue;
    StateId y = t.morphisms[mid - nx].source;
    for (const auto& n : w.elements()) {
      if (n.is_identity()) continue;
      auto mn = multiply(m, n);
      if (!w.contains(mn)) continue;
      auto nid = id_of.find({n, y});
      auto lid = id_of.find({mn, x});
      if (nid != id_of.end() && lid != id_of.end()) t.compositions.push_back({mid, nid->second, lid->second});
    }
  }
  auto gens = a.monoid().generators();
  t.extensions.resize(nx);
  for (StateId x = 0; x < nx; ++x)
    for (const auto& gen : gens)
      if (a.window().contains(gen) && a.act(x, gen)) t.extensions[x].push_back(gen);
  return PGraph(std::move(w), std::move(t));
}

}  // namespace hrg
