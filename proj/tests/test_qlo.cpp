#include "doctest.h"
#include "helpers.hpp"
#include "hrg/qlo.hpp"

using namespace hrg;
using th::v;
using th::w;

TEST_CASE("group arithmetic") {
  CHECK(multiply(v({1, 2}), v({-1, 3})) == v({0, 5}));
  CHECK(inverse(v({2, -1})) == v({-2, 1}));
  CHECK(multiply(w("ab"), w("Ba")) == w("aa"));
  CHECK(multiply(w("aB"), inverse(w("aB"))).is_identity());
  CHECK(w("aA").is_identity());
  CHECK(w("abA").to_string() == "abA");
  CHECK(v({1, 0}).to_string() == "(1,0)");
  CHECK(w("").to_string() == "e");
  auto t = GroupElement::tuple({v({1}), w("a")});
  CHECK(multiply(t, inverse(t)) == GroupElement::tuple({v({0}), w("")}));
}

TEST_CASE("group specs") {
  CHECK(GroupSpec::zd(2).to_string() == "Z^2");
  CHECK(GroupSpec::free(2).to_string() == "F_2");
  CHECK(GroupSpec::zd(3).amenable());
  CHECK_FALSE(GroupSpec::free(2).amenable());
  CHECK(GroupSpec::free(1).amenable());
  CHECK_FALSE(GroupSpec::product({GroupSpec::zd(1), GroupSpec::free(2)}).amenable());
  CHECK_THROWS_AS(GroupSpec::zd(2).require(w("a")), Error);
}

TEST_CASE("balls") {
  // |ball| in Z^2 is 2r^2 + 2r + 1; in F_2 it is 2 * 3^r - 1.
  CHECK(ball(GroupSpec::zd(2), 2).size() == 13);
  CHECK(ball(GroupSpec::zd(1), 40).size() == 81);
  CHECK(ball(GroupSpec::free(2), 1).size() == 5);
  CHECK(ball(GroupSpec::free(2), 3).size() == 53);
  auto b = ball(GroupSpec::zd(1), 2);
  CHECK(b.front().is_identity());
}

TEST_CASE("positive cones, order and lubs") {
  QloMonoid n2(GroupSpec::zd(2));
  CHECK(n2.contains(v({1, 0})));
  CHECK_FALSE(n2.contains(v({-1, 0})));
  CHECK(n2.leq(v({1, 0}), v({1, 1})));
  CHECK_FALSE(n2.leq(v({1, 0}), v({0, 1})));
  CHECK(n2.lub(v({1, 0}), v({0, 2})) == v({1, 2}));
  CHECK(n2.is_ore());
  CHECK_THROWS_AS(n2.require(v({0, -1})), Error);

  QloMonoid sf2(GroupSpec::free(2));
  CHECK(sf2.contains(w("ab")));
  CHECK_FALSE(sf2.contains(w("aB")));
  CHECK(sf2.leq(w("a"), w("ab")));
  CHECK_FALSE(sf2.leq(w("b"), w("ab")));
  CHECK(sf2.lub(w("a"), w("ab")) == w("ab"));
  CHECK_FALSE(sf2.lub(w("a"), w("b")).has_value());
  CHECK_FALSE(sf2.is_ore());
  CHECK(sf2.generators().size() == 2);
  CHECK(sf2.down_set(w("ab")).size() == 3);
  CHECK(n2.down_set(v({1, 1})).size() == 4);
}

TEST_CASE("degree windows") {
  QloMonoid n2(GroupSpec::zd(2));
  auto box = DegreeWindow::box(n2, v({1, 1}));
  CHECK(box.elements().size() == 4);
  CHECK(box.elements().front().is_identity());
  CHECK(box.contains(v({1, 0})));
  CHECK_FALSE(box.contains(v({2, 0})));
  CHECK(box.to_string() == "<=(1,1)");
  CHECK(box.shifted(v({1, 0})) == DegreeWindow::box(n2, v({0, 1})));

  QloMonoid sf2(GroupSpec::free(2));
  auto len = DegreeWindow::length(sf2, 2);
  CHECK(len.elements().size() == 7);
  CHECK(len.max_length() == 2);
  CHECK(len.to_string() == "|m|<=2");
  CHECK(len.shifted(w("a")).elements().size() == 3);
}
