#include "hrg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hrg::io {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::schema, path + ": " + message, json{{"field", path}});
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const std::string& path) {
  auto v = as_int(j, path);
  if (v < 0) schema_error(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], at(path, i)));
  return out;
}

std::size_t index_in(const std::map<std::string, std::size_t>& names, const json& j, const std::string& path) {
  auto s = as_string(j, path);
  auto it = names.find(s);
  if (it == names.end()) schema_error(path, "unknown name '" + s + "'");
  return it->second;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names, const std::string& path) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], i).second) schema_error(at(path, i), "duplicate name '" + names[i] + "'");
  return out;
}

// Builds PartialMap entries from {"x": "y", ...}.
PartialMap parse_map(const json& j, const std::map<std::string, std::size_t>& states, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object of state -> state");
  PartialMap m(states.size());
  for (const auto& [k, v] : j.items()) {
    auto it = states.find(k);
    if (it == states.end()) schema_error(path + "." + k, "unknown state");
    if (v.is_null()) continue;
    m[it->second] = index_in(states, v, path + "." + k);
  }
  return m;
}

PartialAction parse_action_body(const json& j, const DegreeWindow& depth, const std::string& path) {
  auto states = string_list(field(j, "states", path), path + ".states");
  auto index = name_index(states, path + ".states");
  const auto& q = depth.monoid().group();
  const json* maps = optional_field(j, "maps");
  const json* gens = optional_field(j, "generators");
  if ((maps == nullptr) == (gens == nullptr)) schema_error(path, "exactly one of 'maps' and 'generators' is required");
  const std::string key = maps ? "maps" : "generators";
  const auto& arr = as_array(maps ? *maps : *gens, path + "." + key);
  std::map<GroupElement, PartialMap> table;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto p = at(path + "." + key, i);
    auto d = parse_element(q, field(arr[i], "degree", p), p + ".degree");
    if (!table.emplace(d, parse_map(field(arr[i], "map", p), index, p + ".map")).second)
      schema_error(p + ".degree", "duplicate degree");
  }
  if (gens) {
    try {
      return PartialAction::from_generators(std::move(states), depth, table);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::schema || e.kind() == ErrorKind::not_in_cone)
        schema_error(path + ".generators", e.what());
      throw;
    }
  }
  std::vector<PartialMap> full;
  for (const auto& d : depth.elements()) {
    auto it = table.find(d);
    if (it == table.end()) schema_error(path + ".maps", "no map for degree " + d.to_string());
    full.push_back(it->second);
  }
  return PartialAction(std::move(states), depth, std::move(full));
}

Skeleton parse_skeleton(const json& j, const std::string& path) {
  Skeleton sk;
  sk.colors = as_count(field(j, "colors", path), path + ".colors");
  sk.vertices = string_list(field(j, "vertices", path), path + ".vertices");
  const auto& edges = as_array(field(j, "edges", path), path + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto p = at(path + ".edges", i);
    sk.edges.push_back({as_string(field(edges[i], "name", p), p + ".name"),
                        as_count(field(edges[i], "color", p), p + ".color"),
                        as_string(field(edges[i], "range", p), p + ".range"),
                        as_string(field(edges[i], "source", p), p + ".source")});
  }
  if (const json* sq = optional_field(j, "squares")) {
    const auto& arr = as_array(*sq, path + ".squares");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto names = string_list(arr[i], at(path + ".squares", i));
      if (names.size() != 4) schema_error(at(path + ".squares", i), "a square lists four edges");
      sk.squares.push_back({names[0], names[1], names[2], names[3]});
    }
  }
  return sk;
}

PGraph::Tables parse_tables(const json& j, const GroupSpec& q, const std::string& path) {
  PGraph::Tables t;
  t.vertices = string_list(field(j, "vertices", path), path + ".vertices");
  auto vindex = name_index(t.vertices, path + ".vertices");
  std::map<std::string, std::size_t> mindex = vindex;
  const auto& morphisms = as_array(field(j, "morphisms", path), path + ".morphisms");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    auto p = at(path + ".morphisms", i);
    const auto& m = morphisms[i];
    MorphismInfo info{as_string(field(m, "name", p), p + ".name"), index_in(vindex, field(m, "range", p), p + ".range"),
                      index_in(vindex, field(m, "source", p), p + ".source"),
                      parse_element(q, field(m, "degree", p), p + ".degree")};
    if (!mindex.emplace(info.name, t.vertices.size() + i).second) schema_error(p + ".name", "duplicate name");
    t.morphisms.push_back(std::move(info));
  }
  if (const json* comps = optional_field(j, "compositions")) {
    const auto& arr = as_array(*comps, path + ".compositions");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto p = at(path + ".compositions", i);
      const auto& c = as_array(arr[i], p);
      if (c.size() != 3) schema_error(p, "a composition lists [mu, nu, mu nu]");
      t.compositions.push_back({index_in(mindex, c[0], at(p, 0)), index_in(mindex, c[1], at(p, 1)),
                                index_in(mindex, c[2], at(p, 2))});
    }
  }
  if (const json* ext = optional_field(j, "extensions")) {
    if (!ext->is_object()) schema_error(path + ".extensions", "expected an object of vertex -> degrees");
    t.extensions.assign(t.vertices.size(), {});
    for (const auto& [v, degs] : ext->items()) {
      auto p = path + ".extensions." + v;
      auto it = vindex.find(v);
      if (it == vindex.end()) schema_error(p, "unknown vertex");
      const auto& arr = as_array(degs, p);
      for (std::size_t i = 0; i < arr.size(); ++i) t.extensions[it->second].push_back(parse_element(q, arr[i], at(p, i)));
    }
  }
  if (const json* inf = optional_field(j, "infinite_fibers")) {
    const auto& arr = as_array(*inf, path + ".infinite_fibers");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto p = at(path + ".infinite_fibers", i);
      const auto& f = as_array(arr[i], p);
      if (f.size() != 2) schema_error(p, "a fibre lists [vertex, degree]");
      t.infinite_fibers.emplace_back(index_in(vindex, f[0], at(p, 0)), parse_element(q, f[1], at(p, 1)));
    }
  }
  return t;
}

Groupoid parse_groupoid(const json& j) {
  auto q = parse_group(field(j, "group", "$"), "$.group");
  auto radius = as_count(field(j, "radius", "$"), "$.radius");
  auto units = string_list(field(j, "units", "$"), "$.units");
  auto index = name_index(units, "$.units");
  std::vector<Arrow> arrows;
  const auto& arr = as_array(field(j, "arrows", "$"), "$.arrows");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto p = at("$.arrows", i);
    const auto& a = as_array(arr[i], p);
    if (a.size() != 3) schema_error(p, "an arrow lists [range, label, source]");
    arrows.push_back({index_in(index, a[0], at(p, 0)), parse_element(q, a[1], at(p, 1)), index_in(index, a[2], at(p, 2))});
  }
  try {
    return Groupoid(q, std::move(units), std::move(arrows), radius);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::budget_exceeded) schema_error("$.arrows", e.what());
    throw;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements

GroupSpec parse_group(const json& j, const std::string& path) {
  auto family = as_string(field(j, "family", path), path + ".family");
  if (family == "product") {
    const auto& fs = as_array(field(j, "factors", path), path + ".factors");
    if (fs.empty()) schema_error(path + ".factors", "a product needs factors");
    std::vector<GroupSpec> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(parse_group(fs[i], at(path + ".factors", i)));
    return GroupSpec::product(std::move(factors));
  }
  if (family != "N" && family != "Z" && family != "SF" && family != "F")
    schema_error(path + ".family", "unknown monoid family '" + family + "'");
  auto rank = as_count(field(j, "rank", path), path + ".rank");
  if (rank == 0) schema_error(path + ".rank", "rank must be positive");
  if (family == "N" || family == "Z") return GroupSpec::zd(rank);
  if (rank > 26) schema_error(path + ".rank", "at most 26 generators");
  return GroupSpec::free(rank);
}

GroupElement parse_element(const GroupSpec& q, const json& j, const std::string& path) {
  switch (q.family()) {
    case GroupSpec::Family::zd: {
      if (q.rank() == 1 && j.is_number_integer()) return GroupElement::vector({j.get<std::int64_t>()});
      const auto& arr = as_array(j, path);
      if (arr.size() != q.rank()) schema_error(path, "expected " + std::to_string(q.rank()) + " coordinates");
      std::vector<std::int64_t> v;
      for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(as_int(arr[i], at(path, i)));
      return GroupElement::vector(std::move(v));
    }
    case GroupSpec::Family::free: {
      auto s = as_string(j, path);
      if (s == "e") return GroupElement::word({});
      std::vector<std::int64_t> letters;
      for (char c : s) {
        if (!std::isalpha(static_cast<unsigned char>(c))) schema_error(path, "letters must be a-z or A-Z");
        std::int64_t l = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
        if (static_cast<std::size_t>(l) > q.rank()) schema_error(path, std::string("letter '") + c + "' exceeds the rank");
        letters.push_back(std::isupper(static_cast<unsigned char>(c)) ? -l : l);
      }
      return GroupElement::word(std::move(letters));
    }
    case GroupSpec::Family::product: {
      const auto& arr = as_array(j, path);
      if (arr.size() != q.factors().size()) schema_error(path, "expected one component per factor");
      std::vector<GroupElement> parts;
      for (std::size_t i = 0; i < arr.size(); ++i) parts.push_back(parse_element(q.factors()[i], arr[i], at(path, i)));
      return GroupElement::tuple(std::move(parts));
    }
  }
  schema_error(path, "unsupported group");
}

DegreeWindow parse_depth(const QloMonoid& p, const json& j, const std::string& path) {
  if (j.is_number_integer()) return DegreeWindow::length(p, as_count(j, path));
  auto m = parse_element(p.group(), j, path);
  if (!p.contains(m)) schema_error(path, "depth " + m.to_string() + " is not in the positive cone");
  return DegreeWindow::box(p, m);
}

json group_json(const GroupSpec& q, bool as_monoid) {
  switch (q.family()) {
    case GroupSpec::Family::zd: return {{"family", as_monoid ? "N" : "Z"}, {"rank", q.rank()}};
    case GroupSpec::Family::free: return {{"family", as_monoid ? "SF" : "F"}, {"rank", q.rank()}};
    case GroupSpec::Family::product: {
      json fs = json::array();
      for (const auto& f : q.factors()) fs.push_back(group_json(f, as_monoid));
      return {{"family", "product"}, {"factors", fs}};
    }
  }
  return {};
}

json element_json(const GroupElement& m) {
  switch (m.kind()) {
    case GroupElement::Kind::vector: {
      if (m.coords().size() == 1) return m.coords()[0];
      return json(std::vector<std::int64_t>(m.coords().begin(), m.coords().end()));
    }
    case GroupElement::Kind::word: return m.to_string();
    case GroupElement::Kind::tuple: {
      json arr = json::array();
      for (const auto& p : m.parts()) arr.push_back(element_json(p));
      return arr;
    }
  }
  return {};
}

json depth_json(const DegreeWindow& w) {
  if (w.is_box()) return element_json(*w.ceiling());
  return w.length_bound();
}

// ---------------------------------------------------------------------------
// Documents

Document parse_document(const json& j, const std::optional<json>& depth_override) {
  if (!j.is_object()) schema_error("$", "expected an object");
  const auto& version = field(j, "version", "$");
  if (!version.is_number_integer() || version.get<int>() != schema_version)
    schema_error("$.version", "unsupported version (expected " + std::to_string(schema_version) + ")");
  auto kind = as_string(field(j, "kind", "$"), "$.kind");
  if (kind == "groupoid") return parse_groupoid(j);
  if (kind != "monoid" && kind != "pgraph" && kind != "action") schema_error("$.kind", "unknown kind '" + kind + "'");

  QloMonoid p(parse_group(field(j, "monoid", "$"), "$.monoid"));
  auto depth = depth_override ? parse_depth(p, *depth_override, "--depth")
                              : parse_depth(p, field(j, "depth", "$"), "$.depth");
  if (kind == "monoid") return MonoidDoc{p, depth};
  if (kind == "action") return parse_action_body(j, depth, "$");

  auto construction = as_string(field(j, "construction", "$"), "$.construction");
  if (construction == "monoid") return GraphDoc{from_monoid(p, depth), std::nullopt};
  if (construction == "skeleton") {
    auto sk = parse_skeleton(field(j, "skeleton", "$"), "$.skeleton");
    return GraphDoc{from_skeleton(sk, depth), std::nullopt};
  }
  if (construction == "action") {
    auto a = parse_action_body(field(j, "action", "$"), depth, "$.action");
    auto g = from_action(a);
    return GraphDoc{std::move(g), std::move(a)};
  }
  if (construction == "explicit") return GraphDoc{PGraph(depth, parse_tables(j, p.group(), "$")), std::nullopt};
  schema_error("$.construction", "unknown construction '" + construction + "'");
}

Document load_document(const std::string& file, const std::optional<json>& depth) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::schema, "cannot open " + file, json{{"file", file}});
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::schema, file + ": " + e.what(), json{{"file", file}, {"byte", e.byte}});
  }
  return parse_document(j, depth);
}

namespace {

json envelope(const std::string& kind) { return {{"version", schema_version}, {"kind", kind}}; }

json map_json(const PartialAction& a, const PartialMap& m) {
  json j = json::object();
  for (StateId x = 0; x < m.size(); ++x)
    if (m[x]) j[a.name(x)] = a.name(*m[x]);
  return j;
}

}  // namespace

json monoid_document(const QloMonoid& p, const DegreeWindow& depth) {
  auto j = envelope("monoid");
  j["monoid"] = group_json(p.group(), true);
  j["depth"] = depth_json(depth);
  return j;
}

json skeleton_document(const Skeleton& sk, const DegreeWindow& depth) {
  auto j = envelope("pgraph");
  j["monoid"] = group_json(depth.monoid().group(), true);
  j["depth"] = depth_json(depth);
  j["construction"] = "skeleton";
  json edges = json::array();
  for (const auto& e : sk.edges)
    edges.push_back({{"name", e.name}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
  json squares = json::array();
  for (const auto& s : sk.squares) squares.push_back({s.first, s.second, s.third, s.fourth});
  j["skeleton"] = {{"colors", sk.colors}, {"vertices", sk.vertices}, {"edges", edges}, {"squares", squares}};
  return j;
}

json action_document(const PartialAction& a) {
  auto j = envelope("action");
  j["monoid"] = group_json(a.monoid().group(), true);
  j["depth"] = depth_json(a.window());
  j["states"] = a.states();
  json maps = json::array();
  for (const auto& d : a.degrees()) maps.push_back({{"degree", element_json(d)}, {"map", map_json(a, a.map(d))}});
  j["maps"] = maps;
  return j;
}

json groupoid_document(const Groupoid& g) {
  auto j = envelope("groupoid");
  j["group"] = group_json(g.label_group(), false);
  j["radius"] = g.label_radius();
  j["units"] = g.unit_names();
  json arrows = json::array();
  for (ArrowId id = 0; id < g.size(); ++id) {
    const auto& a = g.arrow(id);
    arrows.push_back({g.unit_name(a.target), element_json(a.label), g.unit_name(a.source)});
  }
  j["arrows"] = arrows;
  return j;
}

json tables_document(const DegreeWindow& depth, const PGraph::Tables& t) {
  auto j = envelope("pgraph");
  j["monoid"] = group_json(depth.monoid().group(), true);
  j["depth"] = depth_json(depth);
  j["construction"] = "explicit";
  j["vertices"] = t.vertices;
  std::vector<std::string> names = t.vertices;
  json morphisms = json::array();
  for (const auto& m : t.morphisms) {
    names.push_back(m.name);
    morphisms.push_back({{"name", m.name},
                         {"range", t.vertices.at(m.range)},
                         {"source", t.vertices.at(m.source)},
                         {"degree", element_json(m.degree)}});
  }
  j["morphisms"] = morphisms;
  json comps = json::array();
  for (const auto& c : t.compositions) comps.push_back({names.at(c[0]), names.at(c[1]), names.at(c[2])});
  j["compositions"] = comps;
  if (!t.extensions.empty()) {
    json ext = json::object();
    for (std::size_t v = 0; v < t.extensions.size(); ++v) {
      json ds = json::array();
      for (const auto& d : t.extensions[v]) ds.push_back(element_json(d));
      ext[t.vertices.at(v)] = ds;
    }
    j["extensions"] = ext;
  }
  if (!t.infinite_fibers.empty()) {
    json inf = json::array();
    for (const auto& [v, d] : t.infinite_fibers) inf.push_back({t.vertices.at(v), element_json(d)});
    j["infinite_fibers"] = inf;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Exports

json graph_json(const PGraph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  json morphisms = json::array();
  for (MorphismId id = g.vertex_count(); id < g.size(); ++id)
    morphisms.push_back({{"name", g.name(id)},
                         {"range", g.name(g.range(id))},
                         {"source", g.name(g.source(id))},
                         {"degree", element_json(g.degree(id))}});
  return {{"monoid", group_json(g.monoid().group(), true)},
          {"depth", depth_json(g.window())},
          {"vertices", vertices},
          {"morphisms", morphisms},
          {"size", g.size()}};
}

json path_space_json(const PGraph& g, const PathSpace& ps, const BoundaryReport* boundary) {
  auto names = [&](std::span<const MorphismId> ids) {
    json j = json::array();
    for (auto id : ids) j.push_back(g.name(id));
    return j;
  };
  json filters = json::array();
  for (std::size_t i = 0; i < ps.filters.size(); ++i) {
    const auto& f = ps.filters[i];
    json row{{"name", filter_name(g, f)}, {"elements", names(f.elements)}, {"frontier_open", f.frontier_open}};
    if (boundary) {
      const auto& r = boundary->rows.at(i);
      row["boundary"] = r.boundary;
      row["by_convention"] = r.by_convention;
      if (r.failing) {
        row["failing"] = g.name(*r.failing);
        row["blocking"] = names(r.blocking);
      }
    }
    filters.push_back(std::move(row));
  }
  json j{{"depth", depth_json(ps.depth)}, {"count", ps.filters.size()}, {"filters", filters}};
  if (boundary) {
    json bd = json::array();
    for (auto b : boundary->boundary) bd.push_back(filter_name(g, ps.filters[b]));
    j["boundary"] = bd;
    j["boundary_count"] = boundary->boundary.size();
  }
  return j;
}

json groupoid_json(const Groupoid& g) {
  json arrows = json::array();
  for (ArrowId id = 0; id < g.size(); ++id) {
    const auto& a = g.arrow(id);
    json row{{"range", g.unit_name(a.target)}, {"label", element_json(a.label)}, {"source", g.unit_name(a.source)}};
    if (const auto& w = g.witness(id)) row["witness"] = {element_json(w->first), element_json(w->second)};
    arrows.push_back(std::move(row));
  }
  return {{"group", group_json(g.label_group(), false)},
          {"radius", g.label_radius()},
          {"units", g.unit_names()},
          {"arrows", arrows},
          {"unit_count", g.unit_count()},
          {"arrow_count", g.size()}};
}

json unit_label_json(const Groupoid& g, const UnitLabel& u) {
  return json::array({g.unit_name(u.first), element_json(u.second)});
}

json error_json(const Error& e) {
  json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (!e.witness().is_null()) j["witness"] = e.witness();
  return {{"error", j}};
}

std::string groupoid_dot(const Groupoid& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph groupoid {\n  node [shape=doublecircle];\n";
  for (UnitId u = 0; u < g.unit_count(); ++u) os << "  " << quote(g.unit_name(u)) << ";\n";
  for (ArrowId id = 0; id < g.size(); ++id) {
    const auto& a = g.arrow(id);
    if (a.target == a.source && a.label.is_identity()) continue;
    os << "  " << quote(g.unit_name(a.source)) << " -> " << quote(g.unit_name(a.target))
       << " [label=" << quote(a.label.to_string()) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hrg::io
