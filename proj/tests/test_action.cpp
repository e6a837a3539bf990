#include "doctest.h"
#include "helpers.hpp"
#include "hrg/action.hpp"
#include "hrg/corpus.hpp"

using namespace hrg;
using th::v;
using th::w;

TEST_CASE("binary shift") {
  auto a = corpus::binary_shift(3);
  CHECK(a.size() == 15);
  CHECK(validate(a).ok());
  CHECK(is_directed(a).ok());
  auto x = *a.find("101");
  CHECK(a.name(*a.act(x, v({1}))) == "01");
  CHECK(a.name(*a.act(x, v({3}))) == "ε");
  CHECK_FALSE(a.act(*a.find("1"), v({2})).has_value());
  CHECK(a.domain(v({2})).size() == 12);
  CHECK_THROWS_AS(a.act(x, v({4})), Error);
}

TEST_CASE("unit, composition and monotonicity axioms") {
  auto n1 = corpus::n_monoid(1);
  auto win = DegreeWindow::length(n1, 2);
  // T_1 : x -> y, T_2 claims x -> x, which breaks T_2 = T_1 T_1
  PartialAction bad({"x", "y"}, win, {{0, 1}, {1, std::nullopt}, {0, std::nullopt}});
  auto r = validate(bad);
  CHECK(r.status == Status::violation);
  CHECK(r.witness["axiom"] == "composition");

  PartialAction bad_unit({"x", "y"}, win, {{1, 0}, {1, std::nullopt}, {std::nullopt, std::nullopt}});
  CHECK(validate(bad_unit).witness["axiom"] == "unit");
}

TEST_CASE("directedness") {
  auto glued = corpus::glued_free();
  CHECK(validate(glued).ok());
  auto d = is_directed(glued);
  CHECK(d.status == Status::violation);
  CHECK(d.witness["m"] == "a");
  CHECK(d.witness["n"] == "b");
  CHECK_THROWS_AS(orbit_relation(glued), Error);

  CHECK(is_directed(corpus::self_action(DegreeWindow::length(corpus::sf_monoid(2), 2))).ok());
  CHECK(is_directed(corpus::corner_collapse()).ok());

  // U(1,0) = U(0,1) = {x}; their lub (1,1) lies outside the length-1 window.
  auto n2 = corpus::n_monoid(2);
  auto win = DegreeWindow::length(n2, 1);
  auto a = PartialAction::from_function({"x", "y"}, win, [](StateId s, const GroupElement& m) -> std::optional<StateId> {
    if (m.is_identity()) return s;
    if (s == 0) return 1;
    return std::nullopt;
  });
  CHECK(is_directed(a).status == Status::inconclusive);
}

TEST_CASE("orbit relation of the sample system") {
  auto a = corpus::sgds_sample();
  auto rel = orbit_relation(a);
  // p, q, r meet at r only through p.2 = r, q.1 = r; s and t meet at s.
  auto has = [&](const std::string& x, const std::string& y) {
    return std::find(rel.begin(), rel.end(), std::pair{*a.find(x), *a.find(y)}) != rel.end();
  };
  CHECK(has("p", "r"));
  CHECK(has("t", "s"));
  CHECK_FALSE(has("p", "s"));
}

TEST_CASE("shift on a graph") {
  auto sf2 = corpus::sf_monoid(2);
  auto g = from_monoid(sf2, DegreeWindow::length(sf2, 2));
  auto t = shift_on_graph(g);
  CHECK(validate(t).ok());
  CHECK(t.name(*t.act(*t.find("ab"), w("a"))) == "b");
  CHECK_FALSE(t.act(*t.find("ab"), w("b")).has_value());
}
