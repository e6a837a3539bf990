#pragma once

// Built-in examples used by the corpus files, the tests and the demos.

#include <cstddef>
#include <string>
#include <vector>

#include "hrg/action.hpp"
#include "hrg/groupoid.hpp"
#include "hrg/pgraph.hpp"
#include "hrg/qlo.hpp"

namespace hrg::corpus {

QloMonoid n_monoid(std::size_t rank);
QloMonoid sf_monoid(std::size_t rank);

// Binary words of length <= n; x.k drops the first k letters (defined iff |x| >= k).
PartialAction binary_shift(std::size_t n);
// Binary words of length exactly n; x.k rotates left by k.  Full action.
PartialAction cyclic_shift(std::size_t n);
// One point, N acting trivially, window |m| <= n.
PartialAction point_action(std::size_t n);
// P acting on X = P inside the window: x.m = m^-1 x, U(m) = {x >= m}.
PartialAction self_action(const DegreeWindow& w);
// Sample system over N: p -> q -> r (r has no successor), s fixed, t -> s.  Window |m| <= 3.
PartialAction sgds_sample();
// SF_2 on {x, y, z}: x.a = y, x.b = z.  Not directed.
PartialAction glued_free();
// N^2 on {0,1}^2 with e_1 killing the first coordinate and e_2 the second.
// Directed, but {e, e_1, e_2} is not action-directed.
PartialAction corner_collapse();
std::vector<GroupElement> corner_collapse_set();

// Z-ball group bundle: a unit with labels |k| <= r next to a unit that only
// carries its identity arrow.
Groupoid group_bundle(std::size_t r);

// One vertex, two edges per colour, squares e_i f_j = f_i e_j.
Skeleton two_graph_flip();
// k colours, one vertex, n edges per colour, commuting squares x_i y_j = y_j x_i.
Skeleton commuting_graph(std::size_t colors, std::size_t edges_per_color);
// Vertices i_j for 0 <= i, j <= side; h_i_j : (i+1,j) -> (i,j) of colour 0,
// v_i_j : (i,j+1) -> (i,j) of colour 1.
Skeleton grid_2graph(std::size_t side);

// Deliberately corrupted presentations.
Skeleton broken_square_missing();    // one square of the flip graph deleted
Skeleton broken_square_duplicate();  // one (colour 1, colour 0) path used twice
Skeleton broken_square_ends();       // grid square whose right side is not a path
Skeleton broken_cube();              // 3 colours: flip, commute, flip
// Explicit N-graph tables where a length-2 path has two factorizations.
PGraph::Tables broken_tables();
DegreeWindow broken_tables_window();

}  // namespace hrg::corpus
