#include "hrg/corpus.hpp"

#include <algorithm>
#include <map>

namespace hrg::corpus {

namespace {

std::vector<std::string> binary_words(std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = min_len; len <= max_len; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string w;
      for (std::size_t i = len; i-- > 0;) w += (bits >> i) & 1 ? '1' : '0';
      out.push_back(w);
    }
  return out;
}

std::string word_name(const std::string& w) { return w.empty() ? "ε" : w; }

std::vector<std::string> names_of(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(word_name(w));
  return out;
}

GroupElement nvec(std::vector<std::int64_t> c) { return GroupElement::vector(std::move(c)); }

Skeleton one_vertex(std::size_t colors, std::size_t per_color) {
  Skeleton sk;
  sk.colors = colors;
  sk.vertices = {"v"};
  for (std::size_t c = 0; c < colors; ++c)
    for (std::size_t i = 0; i < per_color; ++i)
      sk.edges.push_back({std::string(1, static_cast<char>('a' + c)) + std::to_string(i), c, "v", "v"});
  return sk;
}

std::string edge(std::size_t c, std::size_t i) { return std::string(1, static_cast<char>('a' + c)) + std::to_string(i); }

// Squares x_i y_j = y_{f(i,j)} x_{g(i,j)} for colours c < d.
template <class F>
void add_squares(Skeleton& sk, std::size_t c, std::size_t d, std::size_t n, F f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [jj, ii] = f(i, j);
      sk.squares.push_back({edge(c, i), edge(d, j), edge(d, jj), edge(c, ii)});
    }
}

auto commute = [](std::size_t i, std::size_t j) { return std::pair{j, i}; };
auto flip = [](std::size_t i, std::size_t j) { return std::pair{i, j}; };

}  // namespace

QloMonoid n_monoid(std::size_t rank) { return QloMonoid(GroupSpec::zd(rank)); }
QloMonoid sf_monoid(std::size_t rank) { return QloMonoid(GroupSpec::free(rank)); }

PartialAction binary_shift(std::size_t n) {
  auto words = binary_words(0, n);
  std::map<std::string, StateId> id;
  for (StateId i = 0; i < words.size(); ++i) id[words[i]] = i;
  return PartialAction::from_function(names_of(words), DegreeWindow::length(n_monoid(1), n),
                                      [&](StateId x, const GroupElement& m) -> std::optional<StateId> {
                                        auto k = static_cast<std::size_t>(m.coords()[0]);
                                        if (words[x].size() < k) return std::nullopt;
                                        return id.at(words[x].substr(k));
                                      });
}

PartialAction cyclic_shift(std::size_t n) {
  auto words = binary_words(n, n);
  std::map<std::string, StateId> id;
  for (StateId i = 0; i < words.size(); ++i) id[words[i]] = i;
  return PartialAction::from_function(names_of(words), DegreeWindow::length(n_monoid(1), n),
                                      [&](StateId x, const GroupElement& m) -> std::optional<StateId> {
                                        const auto& w = words[x];
                                        if (w.empty()) return x;
                                        auto k = static_cast<std::size_t>(m.coords()[0]) % w.size();
                                        return id.at(w.substr(k) + w.substr(0, k));
                                      });
}

PartialAction point_action(std::size_t n) {
  return PartialAction::from_function({"*"}, DegreeWindow::length(n_monoid(1), n),
                                      [](StateId x, const GroupElement&) -> std::optional<StateId> { return x; });
}

PartialAction self_action(const DegreeWindow& w) {
  const auto& p = w.monoid();
  const auto& els = w.elements();
  std::vector<std::string> names;
  std::map<GroupElement, StateId> id;
  for (StateId i = 0; i < els.size(); ++i) {
    names.push_back(els[i].to_string());
    id[els[i]] = i;
  }
  return PartialAction::from_function(std::move(names), w, [&](StateId x, const GroupElement& m) -> std::optional<StateId> {
    if (!p.leq(m, els[x])) return std::nullopt;
    return id.at(multiply(inverse(m), els[x]));
  });
}

PartialAction sgds_sample() {
  // states p q r s t
  PartialMap one{1, 2, std::nullopt, 3, 3};
  return PartialAction::from_generators({"p", "q", "r", "s", "t"}, DegreeWindow::length(n_monoid(1), 3),
                                        {{nvec({1}), one}});
}

PartialAction glued_free() {
  PartialMap a{1, std::nullopt, std::nullopt};
  PartialMap b{2, std::nullopt, std::nullopt};
  return PartialAction::from_generators({"x", "y", "z"}, DegreeWindow::length(sf_monoid(2), 2),
                                        {{GroupElement::word({1}), a}, {GroupElement::word({2}), b}});
}

PartialAction corner_collapse() {
  // states 00 01 10 11 read as (u, v)
  PartialMap e1{0, 1, 0, 1};
  PartialMap e2{0, 0, 2, 2};
  return PartialAction::from_generators({"00", "01", "10", "11"}, DegreeWindow::box(n_monoid(2), nvec({1, 1})),
                                        {{nvec({1, 0}), e1}, {nvec({0, 1}), e2}});
}

std::vector<GroupElement> corner_collapse_set() { return {nvec({0, 0}), nvec({0, 1}), nvec({1, 0})}; }

Groupoid group_bundle(std::size_t r) {
  std::vector<Arrow> arrows;
  for (std::int64_t k = -static_cast<std::int64_t>(r); k <= static_cast<std::int64_t>(r); ++k)
    arrows.push_back({0, nvec({k}), 0});
  arrows.push_back({1, nvec({0}), 1});
  return Groupoid(GroupSpec::zd(1), {"uQ", "uN"}, std::move(arrows), r);
}

Skeleton two_graph_flip() {
  auto sk = one_vertex(2, 2);
  add_squares(sk, 0, 1, 2, flip);
  return sk;
}

Skeleton commuting_graph(std::size_t colors, std::size_t edges_per_color) {
  auto sk = one_vertex(colors, edges_per_color);
  for (std::size_t c = 0; c < colors; ++c)
    for (std::size_t d = c + 1; d < colors; ++d) add_squares(sk, c, d, edges_per_color, commute);
  return sk;
}

Skeleton grid_2graph(std::size_t side) {
  Skeleton sk;
  sk.colors = 2;
  auto v = [](std::size_t i, std::size_t j) { return std::to_string(i) + "_" + std::to_string(j); };
  for (std::size_t i = 0; i <= side; ++i)
    for (std::size_t j = 0; j <= side; ++j) sk.vertices.push_back(v(i, j));
  for (std::size_t i = 0; i <= side; ++i)
    for (std::size_t j = 0; j <= side; ++j) {
      if (i < side) sk.edges.push_back({"h" + v(i, j), 0, v(i, j), v(i + 1, j)});
      if (j < side) sk.edges.push_back({"v" + v(i, j), 1, v(i, j), v(i, j + 1)});
    }
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      sk.squares.push_back({"h" + v(i, j), "v" + v(i + 1, j), "v" + v(i, j), "h" + v(i, j + 1)});
  return sk;
}

Skeleton broken_square_missing() {
  auto sk = two_graph_flip();
  sk.squares.pop_back();
  return sk;
}

Skeleton broken_square_duplicate() {
  auto sk = two_graph_flip();
  // a1 b1 = b1 a1 becomes a1 b1 = b1 a0, the right side of a1 b0
  sk.squares.back().fourth = "a0";
  return sk;
}

Skeleton broken_square_ends() {
  auto sk = grid_2graph(1);
  sk.squares.front().fourth = "h0_0";
  return sk;
}

Skeleton broken_cube() {
  auto sk = one_vertex(3, 2);
  add_squares(sk, 0, 1, 2, flip);
  add_squares(sk, 0, 2, 2, commute);
  add_squares(sk, 1, 2, 2, flip);
  return sk;
}

PGraph::Tables broken_tables() {
  PGraph::Tables t;
  t.vertices = {"v"};
  // ids: v=0 e=1 f=2 ee=3 ef=4 ff=5; "fe" is missing and e.f, f.e both give ef
  t.morphisms = {{"e", 0, 0, nvec({1})},  {"f", 0, 0, nvec({1})},  {"ee", 0, 0, nvec({2})},
                 {"ef", 0, 0, nvec({2})}, {"ff", 0, 0, nvec({2})}};
  t.compositions = {{1, 1, 3}, {1, 2, 4}, {2, 1, 4}, {2, 2, 5}};
  return t;
}

DegreeWindow broken_tables_window() { return DegreeWindow::length(n_monoid(1), 2); }

}  // namespace hrg::corpus
