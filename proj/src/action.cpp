#include "hrg/action.hpp"

#include <algorithm>
#include <iterator>

namespace hrg {

namespace {

// Generator word for m, in canonical application order.
void generator_word(const GroupSpec& q, const GroupElement& m, std::vector<GroupElement>& out,
                    const std::function<GroupElement(GroupElement)>& embed) {
  switch (q.family()) {
    case GroupSpec::Family::zd:
      for (std::size_t i = 0; i < q.rank(); ++i) {
        std::vector<std::int64_t> c(q.rank(), 0);
        c[i] = 1;
        for (std::int64_t k = 0; k < m.coords()[i]; ++k) out.push_back(embed(GroupElement::vector(c)));
      }
      break;
    case GroupSpec::Family::free:
      for (auto l : m.letters()) out.push_back(embed(GroupElement::word({l})));
      break;
    case GroupSpec::Family::product: {
      auto id = q.identity();
      for (std::size_t i = 0; i < q.factors().size(); ++i) {
        generator_word(q.factors()[i], m.parts()[i], out, [&](GroupElement g) {
          std::vector<GroupElement> parts(id.parts().begin(), id.parts().end());
          parts[i] = std::move(g);
          return embed(GroupElement::tuple(std::move(parts)));
        });
      }
      break;
    }
  }
}

std::vector<StateId> intersect(const std::vector<StateId>& a, const std::vector<StateId>& b) {
  std::vector<StateId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PartialAction::PartialAction(std::vector<std::string> states, DegreeWindow window, std::vector<PartialMap> maps)
    : states_(std::move(states)), window_(std::move(window)), maps_(std::move(maps)) {
  const auto& els = window_.elements();
  if (maps_.size() != els.size())
    throw Error(ErrorKind::schema, "action table does not cover the window");
  for (std::size_t i = 0; i < els.size(); ++i) {
    slot_[els[i]] = i;
    if (maps_[i].size() != states_.size())
      throw Error(ErrorKind::schema, "partial map for " + els[i].to_string() + " has the wrong size");
    for (const auto& y : maps_[i])
      if (y && *y >= states_.size()) throw Error(ErrorKind::schema, "partial map leaves the state space");
  }
  for (StateId x = 0; x < states_.size(); ++x)
    if (!by_name_.emplace(states_[x], x).second) throw Error(ErrorKind::schema, "duplicate state " + states_[x]);
}

PartialAction PartialAction::from_function(
    std::vector<std::string> states, DegreeWindow window,
    const std::function<std::optional<StateId>(StateId, const GroupElement&)>& f) {
  std::vector<PartialMap> maps;
  for (const auto& m : window.elements()) {
    PartialMap t(states.size());
    for (StateId x = 0; x < states.size(); ++x) t[x] = f(x, m);
    maps.push_back(std::move(t));
  }
  return PartialAction(std::move(states), std::move(window), std::move(maps));
}

PartialAction PartialAction::from_generators(std::vector<std::string> states, DegreeWindow window,
                                             const std::map<GroupElement, PartialMap>& generators) {
  const auto& q = window.monoid().group();
  std::vector<PartialMap> maps;
  for (const auto& m : window.elements()) {
    std::vector<GroupElement> word;
    generator_word(q, m, word, [](GroupElement g) { return g; });
    PartialMap t(states.size());
    for (StateId x = 0; x < states.size(); ++x) {
      std::optional<StateId> cur = x;
      for (const auto& gen : word) {
        auto it = generators.find(gen);
        if (it == generators.end())
          throw Error(ErrorKind::schema, "no transition map for generator " + gen.to_string());
        if (it->second.size() != states.size())
          throw Error(ErrorKind::schema, "transition map for " + gen.to_string() + " has the wrong size");
        cur = it->second[*cur];
        if (!cur) break;
      }
      t[x] = cur;
    }
    maps.push_back(std::move(t));
  }
  return PartialAction(std::move(states), std::move(window), std::move(maps));
}

std::optional<StateId> PartialAction::find(const std::string& n) const {
  auto it = by_name_.find(n);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t PartialAction::slot(const GroupElement& m) const {
  auto it = slot_.find(m);
  if (it == slot_.end())
    throw Error(ErrorKind::degree_overflow, m.to_string() + " lies outside the action window " + window_.to_string(),
                json{{"degree", m.to_string()}});
  return it->second;
}

std::optional<StateId> PartialAction::act(StateId x, const GroupElement& m) const {
  return maps_[slot(m)].at(x);
}

const PartialMap& PartialAction::map(const GroupElement& m) const { return maps_[slot(m)]; }

std::vector<StateId> PartialAction::domain(const GroupElement& m) const {
  std::vector<StateId> out;
  const auto& t = map(m);
  for (StateId x = 0; x < t.size(); ++x)
    if (t[x]) out.push_back(x);
  return out;
}

std::vector<StateId> PartialAction::image(const GroupElement& m) const {
  std::vector<StateId> out;
  for (const auto& y : map(m))
    if (y) out.push_back(*y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict validate(const PartialAction& a) {
  const std::string check = "action axioms";
  const auto& p = a.monoid();
  const auto& els = a.window().elements();
  const auto e = p.identity();

  for (StateId x = 0; x < a.size(); ++x)
    if (a.act(x, e) != x)
      return Verdict::fail(check, "unit axiom fails", json{{"axiom", "unit"}, {"x", a.name(x)}});

  for (const auto& m : els)
    for (const auto& m2 : els) {
      if (m == m2 || !p.leq(m, m2)) continue;
      for (StateId x = 0; x < a.size(); ++x)
        if (a.in_domain(x, m2) && !a.in_domain(x, m))
          return Verdict::fail(check, "domains are not monotone",
                               json{{"axiom", "monotonicity"}, {"x", a.name(x)}, {"m", m.to_string()},
                                    {"m_prime", m2.to_string()}});
    }

  for (const auto& m : els)
    for (const auto& n : els) {
      auto mn = multiply(m, n);
      if (!a.window().contains(mn)) continue;
      for (StateId x = 0; x < a.size(); ++x) {
        auto xm = a.act(x, m);
        std::optional<StateId> two_step = xm ? a.act(*xm, n) : std::nullopt;
        auto direct = a.act(x, mn);
        if (two_step != direct) {
          json w{{"axiom", "composition"}, {"x", a.name(x)}, {"m", m.to_string()}, {"n", n.to_string()}};
          w["x.(mn)"] = direct ? json(a.name(*direct)) : json(nullptr);
          w["(x.m).n"] = two_step ? json(a.name(*two_step)) : json(nullptr);
          return Verdict::fail(check, "composition axiom fails", std::move(w));
        }
      }
    }
  return Verdict::pass(check);
}

std::optional<GroupElement> directedness_certificate(const PartialAction& a, const GroupElement& m,
                                                     const GroupElement& n, DirectedMode mode,
                                                     std::span<const GroupElement> candidates) {
  const auto& p = a.monoid();
  auto meet = intersect(a.domain(m), a.domain(n));
  if (candidates.empty()) candidates = a.degrees();
  for (const auto& r : candidates) {
    if (!a.window().contains(r) || !p.leq(m, r) || !p.leq(n, r)) continue;
    auto ur = a.domain(r);
    bool good = mode == DirectedMode::equality
                    ? ur == meet
                    : std::includes(ur.begin(), ur.end(), meet.begin(), meet.end());
    if (good) return r;
  }
  return std::nullopt;
}

Verdict is_directed(const PartialAction& a, DirectedMode mode) {
  const std::string check = "directed action";
  const auto& p = a.monoid();
  const auto& els = a.window().elements();
  std::optional<Verdict> pending;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const auto &m = els[i], &n = els[j];
      auto meet = intersect(a.domain(m), a.domain(n));
      if (meet.empty()) continue;
      if (directedness_certificate(a, m, n, mode)) continue;
      json w{{"m", m.to_string()}, {"n", n.to_string()}, {"common_domain", json::array()}};
      for (auto x : meet) w["common_domain"].push_back(a.name(x));
      auto l = p.lub(m, n);
      if (!l) return Verdict::fail(check, "overlapping domains without a common upper bound", std::move(w));
      w["lub"] = l->to_string();
      if (a.window().contains(*l))
        return Verdict::fail(check, "no upper bound has a dominating domain", std::move(w));
      if (!pending) {
        w["window"] = a.window().to_string();
        pending = Verdict::unknown(check, "SearchWindowExhausted", std::move(w));
      }
    }
  return pending ? *pending : Verdict::pass(check);
}

std::vector<std::pair<StateId, StateId>> orbit_relation(const PartialAction& a) {
  auto v = is_directed(a);
  if (v.status == Status::violation)
    throw Error(ErrorKind::not_directed, "orbit relation needs a directed action", v.witness);
  const std::size_t nx = a.size();
  std::vector<std::vector<StateId>> reach(nx);  // reach[x] = {x.m}
  for (const auto& m : a.degrees()) {
    const auto& t = a.map(m);
    for (StateId x = 0; x < nx; ++x)
      if (t[x]) reach[x].push_back(*t[x]);
  }
  for (auto& r : reach) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId x = 0; x < nx; ++x)
    for (StateId y = 0; y < nx; ++y)
      if (!intersect(reach[x], reach[y]).empty()) out.emplace_back(x, y);
  return out;
}

PartialAction shift_on_graph(const PGraph& g) {
  std::vector<std::string> names;
  for (MorphismId id = 0; id < g.size(); ++id) names.push_back(g.name(id));
  const auto& p = g.monoid();
  return PartialAction::from_function(std::move(names), g.window(),
                                      [&](StateId lam, const GroupElement& m) -> std::optional<StateId> {
                                        if (!p.leq(m, g.degree(lam))) return std::nullopt;
                                        return tail(g, lam, m);
                                      });
}

}  // namespace hrg
