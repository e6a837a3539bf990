#pragma once

// Exhaustive sets, extendability and the boundary path space.
//
// Truncation convention: an extension mu of lambda whose degree would leave
// the window counts as realised inside a frontier-open filter.  Every report
// flags elements that were extendable only because of this convention.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hrg/action.hpp"
#include "hrg/error.hpp"
#include "hrg/paths.hpp"
#include "hrg/pgraph.hpp"

namespace hrg {

// (a, b) has a common upper bound of degree d(a) v d(b).  A lub degree
// outside the window is taken to be realised.
bool has_cub(const PGraph& g, MorphismId a, MorphismId b);

bool is_exhaustive(const PGraph& g, std::span<const MorphismId> e);

enum class ExhaustiveFamily {
  generators_and_lubs,  // degrees of generators and their pairwise lubs
  window,               // every non-vertex morphism at s(lambda)
};

struct Extendability {
  bool extendable = true;
  bool by_convention = false;
  std::vector<MorphismId> blocking;  // exhaustive E with no lambda mu in A
};

// Throws LambdaNotInFilter.
Extendability is_extendable(const PGraph& g, const Filter& a, MorphismId lambda,
                            ExhaustiveFamily family = ExhaustiveFamily::generators_and_lubs);

struct FilterExtendability {
  std::size_t filter = 0;
  bool boundary = true;
  bool by_convention = false;
  std::optional<MorphismId> failing;
  std::vector<MorphismId> blocking;
};

struct BoundaryReport {
  std::vector<FilterExtendability> rows;  // one per filter of the path space
  std::vector<std::size_t> boundary;      // indices into ps.filters
};

BoundaryReport boundary_report(const PGraph& g, const PathSpace& ps,
                               ExhaustiveFamily family = ExhaustiveFamily::generators_and_lubs);
std::vector<std::size_t> boundary_paths(const PGraph& g, const PathSpace& ps,
                                        ExhaustiveFamily family = ExhaustiveFamily::generators_and_lubs);

// Closed under nonempty shifts and under prepending.  A shift of a
// frontier-open filter is compared on the window where it is still known.
Verdict check_boundary_invariance(const PGraph& g, const PathSpace& ps, std::span<const std::size_t> bd);

struct DirectedIso {
  Verdict verdict;
  PGraph graph;
  PathSpace space;
  std::vector<std::size_t> boundary;
  std::vector<std::size_t> image;  // image[x] = index of J(x) in space.filters
};

// x -> J(x) = x Lambda on the graph of the action.
DirectedIso directed_action_iso(const PartialAction& a);

}  // namespace hrg
