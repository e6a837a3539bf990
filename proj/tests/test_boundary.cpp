#include "doctest.h"
#include "helpers.hpp"
#include "hrg/boundary.hpp"
#include "hrg/corpus.hpp"
#include "oracles.hpp"

using namespace hrg;
using th::v;
using th::w;

namespace {

std::vector<std::string> boundary_names(const PGraph& g, const PathSpace& ps, const std::vector<std::size_t>& bd) {
  std::vector<std::string> out;
  for (auto i : bd) out.push_back(filter_name(g, ps.filters[i]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("exhaustive sets and common upper bounds") {
  auto sf2 = corpus::sf_monoid(2);
  auto g = from_monoid(sf2, DegreeWindow::length(sf2, 2));
  auto a = *g.find("a"), b = *g.find("b"), ab = *g.find("ab");
  CHECK(has_cub(g, a, ab));
  CHECK_FALSE(has_cub(g, a, b));
  CHECK(is_exhaustive(g, std::vector{a, b}));
  CHECK_FALSE(is_exhaustive(g, std::vector{a}));

  auto n2 = corpus::n_monoid(2);
  auto h = from_monoid(n2, DegreeWindow::box(n2, v({1, 1})));
  CHECK(is_exhaustive(h, std::vector{*h.find("(1,0)")}));
}

TEST_CASE("boundary of SF_2 is the words of maximal length") {
  auto sf2 = corpus::sf_monoid(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = from_monoid(sf2, DegreeWindow::length(sf2, n));
    auto ps = enumerate_filters(g);
    auto bd = boundary_paths(g, ps);
    std::vector<std::string> expect;
    for (const auto& x : oracle::ab_words(n)) expect.push_back("F(" + x + ")");
    std::sort(expect.begin(), expect.end());
    CHECK(boundary_names(g, ps, bd) == expect);
    CHECK(check_boundary_invariance(g, ps, bd).ok());
  }
}

TEST_CASE("boundary of N^2 inside (1,1)") {
  auto n2 = corpus::n_monoid(2);
  auto g = from_monoid(n2, DegreeWindow::box(n2, v({1, 1})));
  auto ps = enumerate_filters(g);
  auto rep = boundary_report(g, ps);
  CHECK(boundary_names(g, ps, rep.boundary) == std::vector<std::string>{"F((1,1))"});
  // F((1,0)) is blocked by the exhaustive set {(0,1)}
  for (const auto& row : rep.rows)
    if (!row.boundary) CHECK(row.failing.has_value());
  CHECK(check_boundary_invariance(g, ps, rep.boundary).ok());
}

TEST_CASE("boundary of the sample system is the maximal paths") {
  auto g = from_action(corpus::sgds_sample());
  auto ps = enumerate_filters(g);
  auto bd = boundary_paths(g, ps);
  CHECK(boundary_names(g, ps, bd) ==
        std::vector<std::string>{"F(p*(2))", "F(q*(1))", "F(r)", "F(s*(3))", "F(t*(3))"});
  CHECK(check_boundary_invariance(g, ps, bd).ok());
}

TEST_CASE("boundary of the binary shift graph") {
  auto a = corpus::binary_shift(3);
  auto g = from_action(a);
  auto ps = enumerate_filters(g);
  auto bd = boundary_paths(g, ps);
  CHECK(bd.size() == 15);
  CHECK(bd.size() == a.size());
}

TEST_CASE("two-graph boundaries") {
  auto n2 = corpus::n_monoid(2);
  auto g = from_skeleton(corpus::grid_2graph(2), DegreeWindow::box(n2, v({2, 2})));
  auto ps = enumerate_filters(g);
  auto bd = boundary_paths(g, ps);
  // a finite grid has a single sink at (2,2): every boundary path ends there
  for (auto i : bd) CHECK(g.source(filter_top(g, ps.filters[i])) == *g.find("2_2"));
  CHECK(bd.size() == 9);
  CHECK(check_boundary_invariance(g, ps, bd).ok());

  auto flip = from_skeleton(corpus::two_graph_flip(), DegreeWindow::box(n2, v({1, 1})));
  auto fps = enumerate_filters(flip);
  CHECK(boundary_paths(flip, fps).size() == 4);
}

TEST_CASE("extendability") {
  auto sf2 = corpus::sf_monoid(2);
  auto g = from_monoid(sf2, DegreeWindow::length(sf2, 2));
  auto ps = enumerate_filters(g);
  auto fa = principal_filter(g, *g.find("a"));
  auto e = is_extendable(g, fa, *g.find("a"));
  CHECK_FALSE(e.extendable);
  CHECK(e.blocking.size() == 2);
  auto fab = principal_filter(g, *g.find("ab"));
  auto ok = is_extendable(g, fab, *g.find("ab"));
  CHECK(ok.extendable);
  CHECK(ok.by_convention);
  CHECK_THROWS_AS(is_extendable(g, fa, *g.find("b")), Error);
  auto full = is_extendable(g, fab, *g.find("a"), ExhaustiveFamily::window);
  CHECK(full.extendable);
}

TEST_CASE("directed actions are their own boundary") {
  auto n2 = corpus::n_monoid(2);
  auto sf2 = corpus::sf_monoid(2);
  for (const auto& a : {corpus::self_action(DegreeWindow::box(n2, v({2, 2}))),
                        corpus::self_action(DegreeWindow::length(sf2, 2)), corpus::binary_shift(3),
                        corpus::binary_shift(4), corpus::sgds_sample()}) {
    auto iso = directed_action_iso(a);
    CHECK(iso.verdict.ok());
    CHECK(iso.boundary.size() == a.size());
    CHECK(iso.image.size() == a.size());
  }
  // The action of N^2 on itself: J(x) is the filter of the diagonal morphism x*x
  auto a = corpus::self_action(DegreeWindow::box(n2, v({2, 2})));
  auto iso = directed_action_iso(a);
  for (StateId x = 0; x < a.size(); ++x) {
    auto name = a.name(x);
    auto top = x == 0 ? name : name + "*" + name;  // degree-zero morphisms carry the vertex name
    CHECK(filter_name(iso.graph, iso.space.filters[iso.image[x]]) == "F(" + top + ")");
  }
  CHECK(directed_action_iso(corpus::glued_free()).verdict.status == Status::violation);
}
