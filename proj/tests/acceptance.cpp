// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hrg/amen.hpp"
#include "hrg/boundary.hpp"
#include "hrg/cli.hpp"
#include "hrg/corpus.hpp"
#include "hrg/io.hpp"
#include "oracles.hpp"

using namespace hrg;

namespace {

const std::string corpus_dir = HRG_CORPUS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

GroupElement vec(std::vector<std::int64_t> c) { return GroupElement::vector(std::move(c)); }

std::vector<std::pair<std::string, PartialAction>> directed_actions() {
  auto n2 = corpus::n_monoid(2);
  auto sf2 = corpus::sf_monoid(2);
  return {{"binary_shift", corpus::binary_shift(3)},
          {"cyclic_shift", corpus::cyclic_shift(3)},
          {"point_action", corpus::point_action(3)},
          {"self_action_n2", corpus::self_action(DegreeWindow::box(n2, vec({2, 2})))},
          {"self_action_sf2", corpus::self_action(DegreeWindow::length(sf2, 2))},
          {"sgds_sample", corpus::sgds_sample()},
          {"corner_collapse", corpus::corner_collapse()}};
}

std::vector<std::pair<std::string, Groupoid>> corpus_groupoids() {
  std::vector<std::pair<std::string, Groupoid>> out;
  for (auto& [name, a] : directed_actions()) out.emplace_back(name, semidirect_product(a, 2 * a.window().max_length()));
  auto n2 = corpus::n_monoid(2);
  auto sf2 = corpus::sf_monoid(2);
  auto toeplitz = [&](const std::string& name, const PGraph& g) {
    auto ps = enumerate_filters(g);
    out.emplace_back(name, toeplitz_groupoid(g, ps, 2 * g.window().max_length()));
    out.emplace_back(name + "/boundary", reduce(out.back().second, boundary_paths(g, ps)));
  };
  toeplitz("toeplitz_sf2", from_monoid(sf2, DegreeWindow::length(sf2, 3)));
  toeplitz("toeplitz_n2", from_monoid(n2, DegreeWindow::box(n2, vec({2, 2}))));
  toeplitz("two_graph_flip", from_skeleton(corpus::two_graph_flip(), DegreeWindow::box(n2, vec({1, 1}))));
  toeplitz("grid_2graph", from_skeleton(corpus::grid_2graph(2), DegreeWindow::box(n2, vec({2, 2}))));
  out.emplace_back("group_bundle", corpus::group_bundle(3));
  auto b = semidirect_product(corpus::binary_shift(2), 4);
  out.emplace_back("skew_binary_shift", skew_product(b, Cocycle::canonical(b), 4).groupoid);
  return out;
}

// Filters equal the power-set scan.
Outcome filters() {
  Outcome o;
  auto n2 = corpus::n_monoid(2);
  auto sf2 = corpus::sf_monoid(2);
  std::vector<std::pair<std::string, PGraph>> graphs{
      {"SF2 depth 1", from_monoid(sf2, DegreeWindow::length(sf2, 1))},
      {"SF2 depth 2", from_monoid(sf2, DegreeWindow::length(sf2, 2))},
      {"N2 (1,1)", from_monoid(n2, DegreeWindow::box(n2, vec({1, 1})))},
      {"sgds depth 1", from_action(corpus::sgds_sample(), DegreeWindow::length(corpus::n_monoid(1), 1))},
      {"sgds depth 2", from_action(corpus::sgds_sample(), DegreeWindow::length(corpus::n_monoid(1), 2))},
      {"two_graph_flip", from_skeleton(corpus::two_graph_flip(), DegreeWindow::box(n2, vec({1, 1})))}};
  for (const auto& [name, g] : graphs) {
    if (g.size() > 12) o.fail(name + " has more than 12 morphisms");
    std::set<std::vector<MorphismId>> got;
    for (const auto& f : enumerate_filters(g).filters) got.insert(f.elements);
    if (got != oracle::power_set_filters(g)) o.fail(name + " differs from the power-set scan");
  }
  auto count = [&](std::size_t i) { return enumerate_filters(graphs[i].second).filters.size(); };
  if (count(1) != 7) o.fail("SF2 depth 2 does not give 7 filters");
  if (count(2) != 4) o.fail("N2 (1,1) does not give 4 filters");
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs; SF2/2 -> 7, N2/(1,1) -> 4";
  return o;
}

Outcome axioms() {
  Outcome o;
  std::size_t largest = 0, triples = 0, n = 0;
  for (const auto& [name, g] : corpus_groupoids()) {
    ++n;
    largest = std::max(largest, g.size());
    if (g.size() > 10000) o.fail(name + " exceeds 10^4 arrows");
    auto chk = verify_groupoid(g);
    triples += chk.triples;
    if (!chk.verdict.ok()) o.fail(name + ": " + chk.verdict.detail);
    for (ArrowId id = 0; id < g.size(); ++id)
      if (inverse(g, inverse(g, id)) != id) o.fail(name + ": inversion is not an involution");
    if (g.size() <= 600 && !oracle::associative(g)) o.fail(name + ": naive associativity scan failed");
  }
  if (n < 5) o.fail("fewer than 5 groupoids");
  if (o.pass)
    o.detail = std::to_string(n) + " groupoids, largest " + std::to_string(largest) + " arrows, " +
               std::to_string(triples) + " triples";
  return o;
}

std::pair<int, json> run_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str().empty() ? json() : json::parse(out.str())};
}

Outcome factorization() {
  Outcome o;
  std::size_t caught = 0;
  for (const auto* valid : {"monoid_n1", "monoid_n2", "monoid_sf2", "two_graph_flip", "grid_2graph",
                            "commuting_3graph", "sgds_graph"}) {
    auto [code, j] = run_json({"validate", corpus_dir + "/" + valid + ".json"});
    if (code != exit_ok) o.fail(std::string(valid) + " rejected");
  }
  for (const auto* broken : {"broken_square_missing", "broken_square_duplicate", "broken_square_ends", "broken_cube",
                             "broken_tables"}) {
    auto [code, j] = run_json({"validate", corpus_dir + "/" + broken + ".json"});
    bool witnessed = code == exit_violation && j.contains("error") && !j["error"]["witness"].empty();
    if (!witnessed) {
      for (const auto& c : j.value("checks", json::array()))
        if (c.value("status", "") == "violation" && !c["witness"].empty()) witnessed = code == exit_violation;
    }
    if (witnessed)
      ++caught;
    else
      o.fail(std::string(broken) + " not reported with a witness");
  }
  if (caught < 3) o.fail("fewer than 3 corrupted tables caught");
  if (o.pass) o.detail = "7 valid graphs pass, " + std::to_string(caught) + "/5 corrupted tables caught";
  return o;
}

Outcome cuntz() {
  Outcome o;
  auto sf2 = corpus::sf_monoid(2);
  double t5 = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    auto start = std::chrono::steady_clock::now();
    auto g = from_monoid(sf2, DegreeWindow::length(sf2, n));
    auto ps = enumerate_filters(g);
    auto red = reduce(toeplitz_groupoid(g, ps, 2 * n), boundary_paths(g, ps));
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (n == 5) t5 = dt.count();
    std::set<std::tuple<std::string, GroupElement, std::string>> got;
    auto word = [&](UnitId u) {
      const auto& s = red.unit_name(u);
      return s.substr(2, s.size() - 3);
    };
    for (ArrowId id = 0; id < red.size(); ++id)
      got.emplace(word(red.arrow(id).target), red.arrow(id).label, word(red.arrow(id).source));
    if (got != oracle::cuntz_arrows(n)) o.fail("N = " + std::to_string(n) + " differs from tail equivalence");
  }
  if (t5 >= 5.0) o.fail("N = 5 took " + std::to_string(t5) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "N = 3, 4, 5 equal arrow for arrow; N = 5 in " << std::fixed << std::setprecision(3) << t5 << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome claims() {
  Outcome o;
  std::size_t keys = 0, extensions = 0, pairs = 0;
  for (auto& [name, a] : directed_actions()) {
    const auto& win = a.window().elements();
    auto rf = build_rF(a, win);
    keys += rf.values.size();
    if (rf.status != Status::ok) o.fail(name + ": r_F search inconclusive");
    if (auto v = check_rF(a, rf.values); !v.ok()) o.fail(name + ": " + v.detail);

    RFBuilder rb(a);
    for (std::size_t i = 0; i < win.size(); ++i)
      for (std::size_t j = i; j < win.size(); ++j) {
        std::vector<GroupElement> s{win[i], win[j]};
        auto f = extend_to_action_directed(rb, s);
        ++extensions;
        if (!is_action_directed(a, f.elements).ok()) o.fail(name + ": extension not action-directed");
      }

    auto g = semidirect_product(a, 2 * a.window().max_length());
    auto c = Cocycle::canonical(g);
    auto rep = exhaust_kernel(g, c, a, win);
    pairs += rep.covered.size();
    if (rep.status != Status::ok || !rep.uncovered.empty()) o.fail(name + ": kernel pairs left uncovered");
    if (rep.covered.size() != kernel(g, c).size()) o.fail(name + ": kernel size mismatch");
    if (!rep.monotone) o.fail(name + ": R_F_i not monotone");
  }
  if (o.pass)
    o.detail = std::to_string(keys) + " r_F values, " + std::to_string(extensions) + " extensions, " +
               std::to_string(pairs) + " kernel pairs covered";
  return o;
}

Outcome dichotomy() {
  Outcome o;
  std::size_t transitive = 0;
  for (auto& [name, a] : directed_actions()) {
    RFBuilder rb(a);
    const auto& win = a.window().elements();
    for (std::size_t i = 0; i < win.size(); ++i) {
      std::vector<GroupElement> s{win[i], win[(i + 1) % win.size()]};
      auto f = extend_to_action_directed(rb, s);
      try {
        if (transitivity_failure(relation_RF(a, f.elements))) o.fail(name + ": intransitive R_F");
        ++transitive;
      } catch (const Error& e) {
        o.fail(name + ": " + e.what());
      }
    }
  }
  auto a = corpus::corner_collapse();
  auto f = corpus::corner_collapse_set();
  try {
    relation_RF(a, f);
    o.fail("corner collapse: no triple reported");
  } catch (const Error& e) {
    auto t = e.witness().value("triple", json::array());
    if (e.kind() != ErrorKind::not_action_directed || t.size() != 3) {
      o.fail("corner collapse: wrong error");
    } else {
      // check the triple against the raw maps
      std::set<std::pair<StateId, StateId>> rel;
      for (const auto& m : f) {
        const auto& tm = a.map(m);
        for (StateId x = 0; x < a.size(); ++x)
          for (StateId y = 0; y < a.size(); ++y)
            if (tm[x] && tm[y] && *tm[x] == *tm[y]) rel.emplace(x, y);
      }
      auto id = [&](const json& n) { return *a.find(n.get<std::string>()); };
      bool breaks = rel.count({id(t[0]), id(t[1])}) && rel.count({id(t[1]), id(t[2])}) &&
                    !rel.count({id(t[0]), id(t[2])});
      if (!breaks) o.fail("corner collapse: triple does not break transitivity");
      else o.detail = std::to_string(transitive) + " action-directed sets transitive; corner collapse triple (" +
                      t[0].get<std::string>() + ", " + t[1].get<std::string>() + ", " + t[2].get<std::string>() + ")";
    }
  }
  return o;
}

Outcome skew() {
  Outcome o;
  std::size_t frontier_cases = 0, covered = 0;
  for (auto& [name, a] : directed_actions()) {
    auto r = 2 * a.window().max_length();
    auto g = semidirect_product(a, r);
    auto c = Cocycle::canonical(g);
    auto y = compute_Y(g, c);
    auto v = check_Y_invariance(g, c, y, r);
    if (!v.ok()) o.fail(name + ": " + v.detail);
    if (!v.detail.empty()) ++frontier_cases;
    if (name == "self_action_sf2") continue;  // free labels: the ball grows too fast to cover
    auto cover = check_translate_cover(g, c, y, r, r / 2);
    if (cover.status != Status::ok) o.fail(name + ": no cover certificate");
    else ++covered;
  }
  auto bundle = corpus::group_bundle(3);
  auto c = Cocycle::canonical(bundle);
  auto cover = check_translate_cover(bundle, c, compute_Y(bundle, c), 1, 3);
  if (cover.status != Status::inconclusive) o.fail("group bundle was certified");
  if (o.pass)
    o.detail = "Y invariant on 7 actions (" + std::to_string(frontier_cases) + " with frontier arrows); " +
               std::to_string(covered) + " covers; group bundle inconclusive";
  return o;
}

Outcome iso() {
  Outcome o;
  auto n2 = corpus::n_monoid(2);
  auto sf2 = corpus::sf_monoid(2);
  std::vector<std::pair<std::string, PartialAction>> cases{
      {"self_action N2", corpus::self_action(DegreeWindow::box(n2, vec({2, 2})))},
      {"self_action SF2", corpus::self_action(DegreeWindow::length(sf2, 2))},
      {"binary shift 3", corpus::binary_shift(3)},
      {"binary shift 4", corpus::binary_shift(4)}};
  std::string sizes;
  for (const auto& [name, a] : cases) {
    auto r = directed_action_iso(a);
    if (!r.verdict.ok()) o.fail(name + ": " + r.verdict.detail);
    if (r.boundary.size() != a.size()) o.fail(name + ": |boundary| != |X|");
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(r.boundary.size());
  }
  if (o.pass) o.detail = "|boundary| = |X| = " + sizes;
  return o;
}

Outcome density() {
  Outcome o;
  auto a = corpus::binary_shift(3);
  auto g = semidirect_product(a, 6);
  auto k = kernel(g, Cocycle::canonical(g));
  std::vector<Rational> row(k.size());
  for (ArrowId id = 0; id < k.size(); ++id)
    row[id] = Rational(1, static_cast<std::int64_t>(k.with_target(k.arrow(id).target).size()));
  auto rep = verify_approx_inv_density(k, {row}, Rational(0));
  if (!rep.verdict.ok() || rep.rows[0].max_displacement != Rational(0) || rep.rows[0].min_mass != Rational(1) ||
      rep.rows[0].max_mass != Rational(1))
    o.fail("uniform density on the kernel classes is not exactly invariant");

  std::vector<Arrow> arrows;
  for (std::int64_t q = -40; q <= 40; ++q) arrows.push_back({0, vec({q}), 0});
  Groupoid ball(GroupSpec::zd(1), {"u"}, std::move(arrows), 40);
  std::vector<std::vector<Rational>> gs;
  for (std::int64_t n = 1; n <= 32; ++n) {
    std::vector<Rational> r(ball.size(), Rational(0));
    for (std::int64_t q = 0; q < n; ++q) r[*ball.find(0, vec({q}), 0)] = Rational(1, n);
    gs.push_back(r);
  }
  std::vector<ArrowId> probes{*ball.find(0, vec({1}), 0), *ball.find(0, vec({-1}), 0)};
  auto f = verify_approx_inv_density(ball, gs, Rational(1, 16), probes);
  for (const auto& r : f.rows)
    if (r.max_displacement > Rational(2, static_cast<std::int64_t>(r.n)) || r.min_mass != Rational(1))
      o.fail("Folner window n = " + std::to_string(r.n) + " out of bounds");
  if (!f.verdict.ok()) o.fail(f.verdict.detail);
  if (o.pass) o.detail = "kernel classes: displacement 0, mass 1; Z-ball n <= 32: displacement <= 2/n (exact)";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  auto tmp = std::filesystem::temp_directory_path();
  auto dot = (tmp / "hrg-acceptance.dot").string();
  std::size_t runs = 0;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir)) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    for (const auto& cmd : std::vector<std::vector<std::string>>{{"validate", file},
                                                                 {"paths", file, "--boundary"},
                                                                 {"groupoid", file, "--dot", dot},
                                                                 {"groupoid", file, "--skew"},
                                                                 {"certify", file}}) {
      std::string outs[2], dots[2];
      int codes[2];
      for (int i = 0; i < 2; ++i) {
        std::filesystem::remove(dot);
        std::ostringstream out, err;
        codes[i] = run_cli(cmd, out, err);
        outs[i] = out.str() + err.str();
        dots[i] = slurp(dot);
      }
      ++runs;
      if (codes[0] != codes[1] || outs[0] != outs[1] || dots[0] != dots[1])
        o.fail(cmd[0] + " " + std::filesystem::path(file).filename().string() + " is not reproducible");
    }
  }
  std::filesystem::remove(dot);
  if (o.pass) o.detail = std::to_string(runs) + " commands over " + std::to_string(files.size()) + " files, byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"filter enumeration equals the power-set oracle", 1.0, filters},
      {"groupoid axioms on every corpus groupoid", 10.0, axioms},
      {"unique-factorization detector", 0, factorization},
      {"Cuntz identification at N = 3, 4, 5", 0, cuntz},
      {"r_F, action-directed extension and kernel exhaustion", 0, claims},
      {"R_F transitivity dichotomy", 0, dichotomy},
      {"Y invariance and translate covers", 0, skew},
      {"directed-action boundary isomorphism", 0, iso},
      {"density verifier", 0, density},
      {"CLI determinism", 0, determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (c.limit > 0 && dt.count() >= c.limit) o.fail("over the " + std::to_string(c.limit) + " s limit");
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << std::fixed
              << std::setprecision(3) << dt.count() << " s): " << o.detail << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << "\n";
  return failed ? 1 : 0;
}
