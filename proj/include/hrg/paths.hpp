#pragma once

// Filters (hereditary, directed subsets) of a truncated P-graph.
//
// A finite directed set has a largest element, so every filter of a
// truncated graph is principal; enumeration is therefore one filter per
// morphism.  Truncation is tracked by `frontier_open`: the filter's top can
// still be extended, but only past the window.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrg/error.hpp"
#include "hrg/pgraph.hpp"

namespace hrg {

struct Filter {
  std::vector<MorphismId> elements;  // sorted
  bool frontier_open = false;

  friend bool operator==(const Filter&, const Filter&) = default;
  friend auto operator<=>(const Filter&, const Filter&) = default;
};

// Nonempty, common range, hereditary, directed, d injective.
Verdict check_filter(const PGraph& g, std::span<const MorphismId> elements);

Filter principal_filter(const PGraph& g, MorphismId lambda);
// Largest element; throws domain_mismatch on a non-principal set.
MorphismId filter_top(const PGraph& g, const Filter& a);
std::string filter_name(const PGraph& g, const Filter& a);

struct PathSpace {
  DegreeWindow depth;
  std::vector<Filter> filters;  // ordered by top morphism
  std::map<std::vector<MorphismId>, std::size_t> index;

  std::optional<std::size_t> index_of(const std::vector<MorphismId>& elements) const;
};

inline constexpr std::size_t default_filter_budget = 1u << 16;

// Throws BudgetExceeded when the graph has more than `budget` morphisms.
PathSpace enumerate_filters(const PGraph& g, std::size_t budget = default_filter_budget);

// {nu : mu nu in A for some mu of degree n}; nullopt when empty.  The result
// inherits A's frontier flag.
std::optional<Filter> shift_filter(const PGraph& g, const Filter& a, const GroupElement& n);

// mu B cut down to the window; the frontier flag is recomputed from the new
// top.  Throws RangeMismatch unless s(mu) = r(B), and
// DegreeOverflow when the cut is not a filter (several maximal elements).
Filter prepend(const PGraph& g, MorphismId mu, const Filter& b);

// Elements of `a` whose degree lies in w.
std::vector<MorphismId> restrict_to(const PGraph& g, const Filter& a, const DegreeWindow& w);

// A filter together with the window on which it is exactly known.  Shifting a
// frontier-open filter by n shrinks that window to {k : nk in window}.
struct PathState {
  Filter filter;
  DegreeWindow known;
};

// Filters of ps (same order, full window) followed by the tails reached by
// shifting frontier-open filters.
std::vector<PathState> path_states(const PGraph& g, const PathSpace& ps);

struct NicaSpace {
  PGraph graph;
  PathSpace space;
  Verdict segments;  // every filter is a segment [e,m] or frontier-open
};

NicaSpace nica_omega(const QloMonoid& p, const DegreeWindow& depth);

}  // namespace hrg
