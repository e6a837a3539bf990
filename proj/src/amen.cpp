#include "hrg/amen.hpp"

#include <algorithm>
#include <set>

namespace hrg {

namespace {

json elements_json(std::span<const GroupElement> s) {
  json j = json::array();
  for (const auto& m : s) j.push_back(m.to_string());
  return j;
}

Subset normalized(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Subset> subsets(std::span<const GroupElement> s) {
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    Subset sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::vector<StateId> common_domain(const PartialAction& a, std::span<const GroupElement> s) {
  std::vector<StateId> out;
  for (StateId x = 0; x < a.size(); ++x)
    if (std::all_of(s.begin(), s.end(), [&](const GroupElement& m) { return a.in_domain(x, m); })) out.push_back(x);
  return out;
}

std::vector<GroupElement> lub_closure(const PartialAction& a, std::span<const GroupElement> universe) {
  const auto& p = a.monoid();
  std::set<GroupElement> acc(universe.begin(), universe.end());
  acc.insert(p.identity());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<GroupElement> cur(acc.begin(), acc.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (auto l = p.lub(cur[i], cur[j]); l && a.window().contains(*l) && acc.insert(*l).second) grew = true;
  }
  return {acc.begin(), acc.end()};
}

// ---------------------------------------------------------------------------
// r_F

RFBuilder::RFBuilder(const PartialAction& a, std::vector<GroupElement> candidates) : a_(&a) {
  if (candidates.empty()) candidates.assign(a.degrees().begin(), a.degrees().end());
  for (const auto& m : candidates)
    if (!a.window().contains(m))
      throw Error(ErrorKind::degree_overflow, "candidate outside the window", json{{"m", m.to_string()}});
  candidates_ = normalized(std::move(candidates));
}

std::optional<GroupElement> RFBuilder::r(Subset f) {
  f = normalized(std::move(f));
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  if (failed_.count(f)) return std::nullopt;
  if (f.empty()) return memo_[f] = a_->monoid().identity();
  auto target = common_domain(*a_, f);
  if (target.empty())
    throw Error(ErrorKind::domain_mismatch, "subset has empty common domain", json{{"subset", elements_json(f)}});
  if (f.size() == 1) return memo_[f] = f.front();

  std::vector<GroupElement> lower;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Subset s = f;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    auto rs = r(std::move(s));
    if (!rs) {
      failed_[f] = true;
      return std::nullopt;
    }
    lower.push_back(*rs);
  }
  const auto& p = a_->monoid();
  for (const auto& c : candidates_) {
    if (!std::all_of(lower.begin(), lower.end(), [&](const GroupElement& l) { return p.leq(l, c); })) continue;
    if (a_->domain(c) == target) return memo_[f] = c;
  }
  failed_[f] = true;
  failure_ = f;
  return std::nullopt;
}

RFResult build_rF(const PartialAction& a, std::span<const GroupElement> universe,
                  std::span<const GroupElement> candidates) {
  Subset u = normalized({universe.begin(), universe.end()});
  if (u.size() > 16)
    throw Error(ErrorKind::budget_exceeded, "universe too large for subset enumeration",
                json{{"size", u.size()}, {"budget", 16}});
  std::vector<GroupElement> cands(candidates.begin(), candidates.end());
  if (cands.empty()) cands = lub_closure(a, u);
  RFBuilder rf(a, cands);
  RFResult out;
  out.search_window.assign(rf.candidates().begin(), rf.candidates().end());
  for (const auto& s : subsets(u)) {
    if (!s.empty() && common_domain(a, s).empty()) continue;
    if (!rf.r(s)) {
      out.status = Status::inconclusive;
      out.witness = {{"error", "SearchWindowExhausted"},
                     {"subset", elements_json(*rf.failure())},
                     {"search_window", elements_json(out.search_window)}};
      break;
    }
  }
  out.values = rf.values();
  return out;
}

Verdict check_rF(const PartialAction& a, const std::map<Subset, GroupElement>& values) {
  const std::string check = "r_F properties";
  const auto& p = a.monoid();
  for (const auto& [f, r] : values) {
    auto w = [&] { return json{{"F", elements_json(f)}, {"r", r.to_string()}}; };
    if (f.empty() && !r.is_identity()) return Verdict::fail(check, "r of the empty set is not e", w());
    if (f.size() == 1 && !(r == f.front())) return Verdict::fail(check, "r_{n} differs from n", w());
    for (const auto& n : f)
      if (!p.leq(n, r)) return Verdict::fail(check, "(a) fails", w());
    if (!f.empty() && a.domain(r) != common_domain(a, f)) return Verdict::fail(check, "(b) fails", w());
    for (const auto& [g, s] : values)
      if (std::includes(f.begin(), f.end(), g.begin(), g.end()) && !p.leq(s, r)) {
        auto j = w();
        j["sub"] = elements_json(g);
        return Verdict::fail(check, "(c) fails", j);
      }
  }
  return Verdict::pass(check);
}

ActionDirectedSet extend_to_action_directed(RFBuilder& rf, std::span<const GroupElement> s) {
  Subset base = normalized({s.begin(), s.end()});
  if (base.size() > 20)
    throw Error(ErrorKind::budget_exceeded, "set too large for subset enumeration",
                json{{"size", base.size()}, {"budget", 20}});
  const auto& a = rf.action();
  ActionDirectedSet out;
  std::set<GroupElement> f;
  for (auto& sub : subsets(base)) {
    if (!sub.empty() && common_domain(a, sub).empty()) continue;
    auto r = rf.r(sub);
    if (!r)
      throw Error(ErrorKind::search_window_exhausted, "no r_F within the search window",
                  json{{"subset", elements_json(*rf.failure())},
                       {"search_window", elements_json(rf.candidates())}});
    f.insert(*r);
    out.rF.emplace(std::move(sub), *r);
  }
  out.elements.assign(f.begin(), f.end());
  return out;
}

Verdict is_action_directed(const PartialAction& a, std::span<const GroupElement> f) {
  const std::string check = "action-directed";
  const auto& p = a.monoid();
  if (std::find(f.begin(), f.end(), p.identity()) == f.end()) return Verdict::fail(check, "e is missing");
  std::vector<std::vector<StateId>> dom;
  for (const auto& m : f) dom.push_back(a.domain(m));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      std::vector<StateId> both;
      std::set_intersection(dom[i].begin(), dom[i].end(), dom[j].begin(), dom[j].end(), std::back_inserter(both));
      if (both.empty()) continue;
      bool found = false;
      for (std::size_t k = 0; k < f.size() && !found; ++k)
        found = p.leq(f[i], f[k]) && p.leq(f[j], f[k]) && dom[k] == both;
      if (!found)
        return Verdict::fail(check, "no dominating element with the common domain",
                             json{{"n", f[i].to_string()}, {"m", f[j].to_string()}});
    }
  return Verdict::pass(check);
}

// ---------------------------------------------------------------------------
// R_F

bool EquivRelation::contains(StateId x, StateId y) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{x, y});
}

std::optional<std::array<StateId, 3>> transitivity_failure(const EquivRelation& r) {
  std::vector<std::vector<StateId>> adj(r.base);
  for (const auto& [x, y] : r.pairs) adj[x].push_back(y);
  for (StateId x = 0; x < r.base; ++x)
    for (StateId y : adj[x])
      for (StateId z : adj[y])
        if (!std::binary_search(adj[x].begin(), adj[x].end(), z)) return std::array{x, y, z};
  return std::nullopt;
}

EquivRelation relation_RF(const PartialAction& a, std::span<const GroupElement> f) {
  std::set<std::pair<StateId, StateId>> acc;
  for (const auto& m : f) {
    std::map<StateId, std::vector<StateId>> fibres;
    for (StateId x = 0; x < a.size(); ++x)
      if (auto y = a.act(x, m)) fibres[*y].push_back(x);
    for (const auto& [img, xs] : fibres)
      for (StateId x : xs)
        for (StateId y : xs) acc.emplace(x, y);
  }
  EquivRelation rel{a.size(), {acc.begin(), acc.end()}};
  if (auto t = transitivity_failure(rel))
    throw Error(ErrorKind::not_action_directed, "R_F is not transitive",
                json{{"triple", json::array({a.name((*t)[0]), a.name((*t)[1]), a.name((*t)[2])})},
                     {"F", elements_json(f)}});
  return rel;
}

std::vector<StateId> fibre_union(const PartialAction& a, std::span<const GroupElement> f, StateId x) {
  std::set<StateId> out;
  for (const auto& m : f) {
    auto xm = a.act(x, m);
    if (!xm) continue;
    for (StateId y = 0; y < a.size(); ++y)
      if (a.act(y, m) == xm) out.insert(y);
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Kernel exhaustion

ExhaustionReport exhaust_kernel(const Groupoid& g, const Cocycle& c, const PartialAction& a,
                                std::span<const GroupElement> universe) {
  ExhaustionReport rep;
  rep.states = a.states();
  Subset u = normalized({universe.begin(), universe.end()});
  const auto e = a.monoid().identity();
  if (u.empty() || !(u.front() == e)) u.insert(u.begin(), e);

  RFBuilder rf(a, lub_closure(a, u));
  std::vector<EquivRelation> rels;
  std::vector<GroupElement> prev;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<GroupElement> s = prev;
    s.push_back(u[i]);
    std::vector<GroupElement> f;
    try {
      f = extend_to_action_directed(rf, s).elements;
    } catch (const Error& err) {
      rep.status = Status::inconclusive;
      rep.witness = {{"error", std::string(to_string(err.kind()))}, {"step", i + 1}, {"detail", err.witness()}};
      break;
    }
    if (auto v = is_action_directed(a, f); !v) {
      rep.status = Status::violation;
      rep.witness = to_json(v);
      break;
    }
    if (!std::includes(f.begin(), f.end(), prev.begin(), prev.end())) rep.monotone = false;
    rels.push_back(relation_RF(a, f));
    if (rels.size() > 1) {
      const auto& lo = rels[rels.size() - 2].pairs;
      const auto& hi = rels.back().pairs;
      if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) rep.monotone = false;
    }
    rep.chain.push_back(f);
    prev = std::move(f);
  }

  std::set<std::pair<StateId, StateId>> kernel;
  for (ArrowId id = 0; id < g.size(); ++id)
    if (c(id).is_identity()) kernel.emplace(g.arrow(id).target, g.arrow(id).source);
  for (const auto& [x, y] : kernel) {
    std::size_t first = 0;
    for (std::size_t i = 0; i < rels.size() && !first; ++i)
      if (rels[i].contains(x, y)) first = i + 1;
    if (first)
      rep.covered.push_back({x, y, first});
    else
      rep.uncovered.emplace_back(x, y);
  }
  if (rep.status == Status::ok && !rep.uncovered.empty()) {
    rep.status = Status::inconclusive;
    rep.witness = {{"uncovered", rep.uncovered.size()}};
  }
  if (rep.status == Status::ok && !rep.monotone) rep.status = Status::violation;
  return rep;
}

// ---------------------------------------------------------------------------
// Densities

DensityReport verify_approx_inv_density(const Groupoid& g, const std::vector<std::vector<Rational>>& gs,
                                        Rational eps, std::span<const ArrowId> probes) {
  const std::string check = "approximate invariant density";
  for (std::size_t n = 0; n < gs.size(); ++n) {
    if (gs[n].size() != g.size())
      throw Error(ErrorKind::domain_mismatch, "density does not match the arrows",
                  json{{"n", n + 1}, {"values", gs[n].size()}, {"arrows", g.size()}});
    for (ArrowId id = 0; id < g.size(); ++id)
      if (gs[n][id] < 0)
        throw Error(ErrorKind::domain_mismatch, "density takes a negative value", json{{"n", n + 1}, {"arrow", id}});
  }
  std::vector<ArrowId> all;
  if (probes.empty()) {
    all.resize(g.size());
    for (ArrowId id = 0; id < g.size(); ++id) all[id] = id;
    probes = all;
  }

  DensityReport rep{Verdict::pass(check), {}};
  for (std::size_t n = 0; n < gs.size(); ++n) {
    const auto& val = gs[n];
    DensityRow row;
    row.n = n + 1;
    bool first = true;
    for (UnitId u = 0; u < g.unit_count(); ++u) {
      Rational mass = 0;
      for (ArrowId id : g.with_target(u)) mass += val[id];
      if (first || mass < row.min_mass) row.min_mass = mass;
      if (first || mass > row.max_mass) row.max_mass = mass;
      first = false;
      if (mass > 1 && rep.verdict.ok())
        rep.verdict = Verdict::fail(check, "mass exceeds 1", json{{"n", n + 1}, {"unit", g.unit_name(u)}});
    }
    for (ArrowId gam : probes) {
      const auto& ga = g.arrow(gam);
      const auto qinv = inverse(ga.label);
      Rational disp = 0;
      for (ArrowId other : g.with_target(ga.target)) {
        const auto& go = g.arrow(other);
        auto lab = multiply(qinv, go.label);
        Rational moved = 0;
        if (auto id = g.find(ga.source, lab, go.source))
          moved = val[*id];
        else if (val[other] != Rational(0) && lab.length() > g.label_radius())
          ++row.frontier_terms;
        disp += abs(moved - val[other]);
      }
      // g^-1 g' in the support while g' itself lies past the radius
      for (ArrowId eta : g.with_target(ga.source)) {
        const auto& ge = g.arrow(eta);
        auto lab = multiply(ga.label, ge.label);
        if (g.find(ga.target, lab, ge.source)) continue;
        if (val[eta] != Rational(0) && lab.length() > g.label_radius()) ++row.frontier_terms;
        disp += val[eta];
      }
      row.max_displacement = std::max(row.max_displacement, disp);
      if (n + 1 == gs.size() && disp > eps && rep.verdict.ok())
        rep.verdict = Verdict::fail(check, "displacement exceeds eps",
                                    json{{"n", n + 1}, {"arrow", json::array({g.unit_name(ga.target),
                                                                              ga.label.to_string(),
                                                                              g.unit_name(ga.source)})}});
    }
    if (n + 1 == gs.size() && row.min_mass < 1 - eps && rep.verdict.ok())
      rep.verdict = Verdict::fail(check, "mass below 1 - eps at the horizon", json{{"n", n + 1}});
    rep.rows.push_back(row);
  }
  if (gs.empty()) rep.verdict = Verdict::unknown(check, "empty sequence");
  return rep;
}

// ---------------------------------------------------------------------------
// Certificate

namespace {

Status worst(std::initializer_list<Status> ss) {
  Status out = Status::ok;
  for (auto s : ss) {
    if (s == Status::violation) return Status::violation;
    if (s == Status::inconclusive) out = Status::inconclusive;
  }
  return out;
}

json unit_label_json(const std::vector<std::string>& names, const UnitLabel& ul) {
  return json::array({names.at(ul.first), ul.second.to_string()});
}

}  // namespace

CertificateBundle amenability_certificate(const PartialAction& a, std::size_t radius) {
  CertificateBundle b;
  b.radius = radius;
  b.depth = a.window().to_string();
  b.q_amenable = a.monoid().group().amenable();
  b.directedness = is_directed(a);
  b.y_invariance = Verdict::unknown("Y invariance", "not run");
  b.cover.status = Status::inconclusive;
  b.kernel.status = Status::inconclusive;
  b.kernel.states = a.states();
  const std::string scale = "(radius=" + std::to_string(radius) + ", depth=" + b.depth + ")";
  if (b.directedness.status == Status::violation) {
    b.status = Status::violation;
    b.verdict = "action not directed " + scale;
    return b;
  }
  auto g = semidirect_product(a, radius);
  auto c = Cocycle::canonical(g);
  b.kernel = exhaust_kernel(g, c, a, a.degrees());
  auto y = compute_Y(g, c);
  b.y_invariance = check_Y_invariance(g, c, y, radius);
  b.cover = check_translate_cover(g, c, y, radius, radius);

  Status checks = worst({b.directedness.status, b.kernel.status, b.y_invariance.status, b.cover.status});
  if (!b.q_amenable) {
    b.status = Status::violation;
    b.verdict = checks == Status::ok ? "kernel certificate only: enveloping group not amenable " + scale
                                     : "enveloping group not amenable; hypotheses not verified " + scale;
  } else {
    b.status = checks;
    b.verdict = checks == Status::ok ? "hypotheses verified at scale " + scale
                                     : "hypotheses not verified at scale " + scale;
  }
  return b;
}

json to_json(const ExhaustionReport& r) {
  auto name = [&](StateId x) { return x < r.states.size() ? json(r.states[x]) : json(x); };
  json chain = json::array();
  for (const auto& f : r.chain) chain.push_back(elements_json(f));
  json covered = json::array();
  for (const auto& k : r.covered) covered.push_back(json::array({name(k.x), name(k.y), k.first}));
  json uncovered = json::array();
  for (const auto& [x, y] : r.uncovered) uncovered.push_back(json::array({name(x), name(y)}));
  json j{{"status", std::string(to_string(r.status))},
         {"chain", chain},
         {"covered", covered},
         {"uncovered", uncovered},
         {"monotone", r.monotone}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

json to_json(const CertificateBundle& b) {
  json translates = json::array();
  for (const auto& q : b.cover.translates) translates.push_back(q.to_string());
  json cover{{"status", std::string(to_string(b.cover.status))},
             {"translates", translates},
             {"strongly_surjective", b.cover.strongly_surjective},
             {"search_radius", b.cover.search_radius},
             {"window_radius", b.cover.window_radius}};
  if (!b.cover.uncovered.empty()) {
    json un = json::array();
    for (const auto& ul : b.cover.uncovered) un.push_back(unit_label_json(b.kernel.states, ul));
    cover["uncovered"] = un;
  }
  return json{{"status", std::string(to_string(b.status))},
              {"verdict", b.verdict},
              {"scale", {{"radius", b.radius}, {"depth", b.depth}}},
              {"directedness", to_json(b.directedness)},
              {"q_amenable", {{"value", b.q_amenable}, {"basis", "declared by group family"}}},
              {"kernel_exhaustion", to_json(b.kernel)},
              {"y_invariance", to_json(b.y_invariance)},
              {"translate_cover", cover}};
}

}  // namespace hrg
