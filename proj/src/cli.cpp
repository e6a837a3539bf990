#include "hrg/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "hrg/amen.hpp"
#include "hrg/boundary.hpp"
#include "hrg/groupoid.hpp"
#include "hrg/io.hpp"

namespace hrg {

namespace {

struct Options {
  std::string file;
  std::string depth;
  std::size_t radius = 0;
  std::size_t budget = default_filter_budget;
  bool boundary = false;
  bool reduce = false;
  bool skew = false;
  std::string dot;
  std::string json_path;
};

int code(Status s) {
  switch (s) {
    case Status::ok: return exit_ok;
    case Status::violation: return exit_violation;
    case Status::inconclusive: return exit_inconclusive;
  }
  return exit_input;
}

Status worse(Status a, Status b) {
  if (a == Status::violation || b == Status::violation) return Status::violation;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::ok;
}

std::optional<json> depth_arg(const Options& o) {
  if (o.depth.empty()) return std::nullopt;
  try {
    return json::parse(o.depth);
  } catch (const json::parse_error&) {
    return json(o.depth);  // a bare free-monoid word
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::schema, "cannot write " + path, json{{"file", path}});
  f << text;
}

void emit(const Options& o, const json& j, std::ostream& out) {
  auto text = j.dump(2) + "\n";
  if (o.json_path.empty())
    out << text;
  else
    write_file(o.json_path, text);
}

std::size_t radius_for(const Options& o, const DegreeWindow& w) {
  return o.radius ? o.radius : 2 * w.max_length();
}

// The graph behind a monoid or graph document.
PGraph graph_of(io::Document& doc) {
  if (auto* m = std::get_if<io::MonoidDoc>(&doc)) return from_monoid(m->monoid, m->depth);
  if (auto* g = std::get_if<io::GraphDoc>(&doc)) return g->graph;
  if (auto* a = std::get_if<PartialAction>(&doc)) return from_action(*a);
  throw Error(ErrorKind::schema, "a groupoid document has no path space", json{{"field", "$.kind"}});
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::optional<io::Document> loaded;
  try {
    loaded = io::load_document(o.file, depth_arg(o));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::square_mismatch && e.kind() != ErrorKind::cube_inconsistency) throw;
    emit(o, {{"status", "violation"}, {"check", "unique factorization"}, {"error", io::error_json(e)["error"]}}, out);
    return exit_violation;
  }
  auto& doc = *loaded;
  json checks = json::array();
  Status st = Status::ok;
  auto add = [&](const Verdict& v) {
    checks.push_back(to_json(v));
    st = worse(st, v.status);
  };
  json j;
  if (auto* m = std::get_if<io::MonoidDoc>(&doc)) {
    j["kind"] = "monoid";
    j["monoid"] = m->monoid.to_string();
    j["ore"] = m->monoid.is_ore();
    add(nica_omega(m->monoid, m->depth).segments);
  } else if (auto* g = std::get_if<io::GraphDoc>(&doc)) {
    j["kind"] = "pgraph";
    j["size"] = g->graph.size();
    add(verify_ufp(g->graph));
    if (g->action) {
      add(validate(*g->action));
      add(is_directed(*g->action));
    }
  } else if (auto* a = std::get_if<PartialAction>(&doc)) {
    j["kind"] = "action";
    j["states"] = a->size();
    add(validate(*a));
    add(is_directed(*a));
  } else {
    const auto& gr = std::get<Groupoid>(doc);
    j["kind"] = "groupoid";
    auto r = verify_groupoid(gr);
    add(r.verdict);
    j["triples"] = r.triples;
  }
  j["checks"] = checks;
  j["status"] = std::string(to_string(st));
  emit(o, j, out);
  return code(st);
}

int cmd_paths(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.file, depth_arg(o));
  auto g = graph_of(doc);
  auto ps = enumerate_filters(g, o.budget);
  json j;
  if (o.boundary) {
    auto rep = boundary_report(g, ps);
    j = io::path_space_json(g, ps, &rep);
    j["invariance"] = to_json(check_boundary_invariance(g, ps, rep.boundary));
  } else {
    j = io::path_space_json(g, ps);
  }
  emit(o, j, out);
  return exit_ok;
}

int cmd_groupoid(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.file, depth_arg(o));
  std::optional<Groupoid> gr;
  std::optional<PGraph> graph;
  std::optional<PathSpace> ps;
  std::size_t radius = o.radius;
  if (auto* a = std::get_if<PartialAction>(&doc)) {
    radius = radius_for(o, a->window());
    gr = semidirect_product(*a, radius);
  } else if (auto* given = std::get_if<Groupoid>(&doc)) {
    if (!radius) radius = given->label_radius();
    gr = *given;
  } else {
    graph = graph_of(doc);
    ps = enumerate_filters(*graph, o.budget);
    radius = radius_for(o, graph->window());
    gr = toeplitz_groupoid(*graph, *ps, radius);
  }
  json j;
  Status st = Status::ok;
  if (o.reduce) {
    if (!graph) throw Error(ErrorKind::schema, "--reduce-to-boundary needs a monoid or graph", json{{"field", "$.kind"}});
    auto bd = boundary_paths(*graph, *ps);
    try {
      gr = reduce(*gr, bd);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_invariant) throw;
      j = {{"status", "violation"}, {"error", io::error_json(e)["error"]}};
      emit(o, j, out);
      return exit_violation;
    }
    j["reduced_to_boundary"] = true;
  }
  if (o.skew) {
    auto c = Cocycle::canonical(*gr);
    auto y = compute_Y(*gr, c);
    auto yv = check_Y_invariance(*gr, c, y, radius);
    auto sp = skew_product(*gr, c, radius);
    json ys = json::array();
    for (const auto& u : y) ys.push_back(io::unit_label_json(*gr, u));
    j["base_units"] = gr->unit_count();
    j["skew_radius"] = radius;
    j["Y"] = ys;
    j["y_invariance"] = to_json(yv);
    st = worse(st, yv.status);
    auto tv = check_translation_automorphisms(sp);
    j["translations"] = to_json(tv);
    st = worse(st, tv.status);
    gr = std::move(sp.groupoid);
  }
  auto axioms = verify_groupoid(*gr);
  st = worse(st, axioms.verdict.status);
  j["groupoid"] = io::groupoid_json(*gr);
  j["axioms"] = {{"verdict", to_json(axioms.verdict)},
                 {"pairs", axioms.pairs},
                 {"triples", axioms.triples},
                 {"frontier", axioms.frontier}};
  j["status"] = std::string(to_string(st));
  if (!o.dot.empty()) write_file(o.dot, io::groupoid_dot(*gr));
  emit(o, j, out);
  return code(st);
}

int cmd_certify(const Options& o, std::ostream& out) {
  auto doc = io::load_document(o.file, depth_arg(o));
  std::optional<PartialAction> act;
  if (auto* a = std::get_if<PartialAction>(&doc)) {
    act = *a;
  } else if (auto* g = std::get_if<io::GraphDoc>(&doc); g && g->action) {
    act = *g->action;
  } else {
    auto graph = graph_of(doc);
    act = shift_on_paths(graph, enumerate_filters(graph, o.budget));
  }
  auto b = amenability_certificate(*act, radius_for(o, act->window()));
  emit(o, to_json(b), out);
  return code(b.status);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groupoids of partial actions and P-graphs", "hrg"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input document")->required();
    sub->add_option("--depth", o.depth, "degree window: an int or a degree (JSON)");
    sub->add_option("--budget", o.budget, "enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--json", o.json_path, "write JSON here instead of stdout");
  };
  auto* validate = app.add_subcommand("validate", "check the axioms of a document");
  add_common(validate);
  auto* paths = app.add_subcommand("paths", "enumerate the path space");
  add_common(paths);
  paths->add_flag("--boundary", o.boundary, "add the boundary and extendability witnesses");
  auto* groupoid = app.add_subcommand("groupoid", "build and check the groupoid");
  add_common(groupoid);
  groupoid->add_option("--radius", o.radius, "label radius")->check(CLI::PositiveNumber);
  groupoid->add_flag("--reduce-to-boundary", o.reduce, "reduce to the boundary path space");
  groupoid->add_flag("--skew", o.skew, "skew product by the canonical cocycle");
  groupoid->add_option("--dot", o.dot, "write a DOT rendering here");
  auto* certify = app.add_subcommand("certify", "amenability hypotheses at finite scale");
  add_common(certify);
  certify->add_option("--radius", o.radius, "label radius")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"hrg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return exit_input;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (paths->parsed()) return cmd_paths(o, out);
    if (groupoid->parsed()) return cmd_groupoid(o, out);
    return cmd_certify(o, out);
  } catch (const Error& e) {
    auto j = io::error_json(e);
    j["error"]["scale"] = {{"depth", o.depth.empty() ? json("from file") : json(o.depth)},
                           {"radius", o.radius ? json(o.radius) : json("default")},
                           {"budget", o.budget}};
    err << j.dump(2) << "\n";
    return e.kind() == ErrorKind::budget_exceeded ? exit_inconclusive : exit_input;
  }
}

}  // namespace hrg
