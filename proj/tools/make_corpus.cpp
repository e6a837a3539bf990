// Regenerates the JSON corpus from the built-in examples.
#include <fstream>
#include <iostream>
#include <string>

#include "hrg/corpus.hpp"
#include "hrg/io.hpp"

using namespace hrg;

namespace {

void put(const std::string& dir, const std::string& name, const json& j) {
  std::ofstream f(dir + "/" + name + ".json", std::ios::binary);
  f << j.dump(2) << "\n";
}

GroupElement v(std::vector<std::int64_t> c) { return GroupElement::vector(std::move(c)); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hrg-make-corpus <dir>\n";
    return 3;
  }
  const std::string dir = argv[1];
  auto n1 = corpus::n_monoid(1);
  auto n2 = corpus::n_monoid(2);
  auto n3 = corpus::n_monoid(3);
  auto sf2 = corpus::sf_monoid(2);

  put(dir, "monoid_n2", io::monoid_document(n2, DegreeWindow::box(n2, v({1, 1}))));
  put(dir, "monoid_sf2", io::monoid_document(sf2, DegreeWindow::length(sf2, 2)));
  put(dir, "monoid_n1", io::monoid_document(n1, DegreeWindow::length(n1, 4)));

  put(dir, "two_graph_flip", io::skeleton_document(corpus::two_graph_flip(), DegreeWindow::box(n2, v({1, 1}))));
  put(dir, "grid_2graph", io::skeleton_document(corpus::grid_2graph(2), DegreeWindow::box(n2, v({2, 2}))));
  put(dir, "commuting_3graph",
      io::skeleton_document(corpus::commuting_graph(3, 2), DegreeWindow::box(n3, v({1, 1, 1}))));

  put(dir, "binary_shift", io::action_document(corpus::binary_shift(3)));
  put(dir, "cyclic_shift", io::action_document(corpus::cyclic_shift(3)));
  put(dir, "point_action", io::action_document(corpus::point_action(3)));
  put(dir, "self_action_n2", io::action_document(corpus::self_action(DegreeWindow::box(n2, v({2, 2})))));
  put(dir, "self_action_sf2", io::action_document(corpus::self_action(DegreeWindow::length(sf2, 2))));
  put(dir, "sgds_sample", io::action_document(corpus::sgds_sample()));
  put(dir, "glued_free", io::action_document(corpus::glued_free()));
  put(dir, "corner_collapse", io::action_document(corpus::corner_collapse()));

  auto sgds = io::action_document(corpus::sgds_sample());
  json graph{{"version", io::schema_version},
             {"kind", "pgraph"},
             {"construction", "action"},
             {"monoid", sgds["monoid"]},
             {"depth", sgds["depth"]},
             {"action", {{"states", sgds["states"]}, {"maps", sgds["maps"]}}}};
  put(dir, "sgds_graph", graph);

  put(dir, "group_bundle", io::groupoid_document(corpus::group_bundle(3)));

  put(dir, "broken_square_missing",
      io::skeleton_document(corpus::broken_square_missing(), DegreeWindow::box(n2, v({1, 1}))));
  put(dir, "broken_square_duplicate",
      io::skeleton_document(corpus::broken_square_duplicate(), DegreeWindow::box(n2, v({1, 1}))));
  put(dir, "broken_square_ends",
      io::skeleton_document(corpus::broken_square_ends(), DegreeWindow::box(n2, v({1, 1}))));
  put(dir, "broken_cube", io::skeleton_document(corpus::broken_cube(), DegreeWindow::box(n3, v({1, 1, 1}))));
  put(dir, "broken_tables", io::tables_document(corpus::broken_tables_window(), corpus::broken_tables()));

  json bad = io::monoid_document(n2, DegreeWindow::box(n2, v({1, 1})));
  bad["monoid"]["family"] = "braid";
  put(dir, "bad_family", bad);
  return 0;
}
