#pragma once

// Partial right actions of a positive cone P on a finite set X, stored as a
// full table over a degree window: one partial map X -> X per degree.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrg/error.hpp"
#include "hrg/pgraph.hpp"
#include "hrg/qlo.hpp"

namespace hrg {

using StateId = std::size_t;
using PartialMap = std::vector<std::optional<StateId>>;

struct PathSpace;

class PartialAction {
 public:
  // maps[i] is T_m for m = window.elements()[i].
  PartialAction(std::vector<std::string> states, DegreeWindow window, std::vector<PartialMap> maps);

  static PartialAction from_function(std::vector<std::string> states, DegreeWindow window,
                                     const std::function<std::optional<StateId>(StateId, const GroupElement&)>& f);
  // Composite maps are derived by applying generators in canonical order:
  // e_1 first for N^k, letter by letter for SF_n, factor by factor for products.
  static PartialAction from_generators(std::vector<std::string> states, DegreeWindow window,
                                       const std::map<GroupElement, PartialMap>& generators);

  const QloMonoid& monoid() const noexcept { return window_.monoid(); }
  const DegreeWindow& window() const noexcept { return window_; }
  std::span<const GroupElement> degrees() const noexcept { return window_.elements(); }

  std::size_t size() const noexcept { return states_.size(); }
  const std::string& name(StateId x) const { return states_.at(x); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  std::optional<StateId> find(const std::string& name) const;

  // Throws DegreeOverflow if m is outside the window.
  std::optional<StateId> act(StateId x, const GroupElement& m) const;
  bool in_domain(StateId x, const GroupElement& m) const { return act(x, m).has_value(); }
  const PartialMap& map(const GroupElement& m) const;
  std::vector<StateId> domain(const GroupElement& m) const;  // U(m)
  std::vector<StateId> image(const GroupElement& m) const;   // V(m)

 private:
  std::size_t slot(const GroupElement& m) const;

  std::vector<std::string> states_;
  DegreeWindow window_;
  std::vector<PartialMap> maps_;
  std::map<GroupElement, std::size_t> slot_;
  std::map<std::string, StateId> by_name_;
};

// Unit axiom, composition axiom and monotonicity of domains on the window.
Verdict validate(const PartialAction& a);

enum class DirectedMode { inclusion, equality };

// A certifying r >= m, n with U(m) & U(n) included in (or equal to) U(r),
// searched among `candidates` (default: the action's window).
std::optional<GroupElement> directedness_certificate(const PartialAction& a, const GroupElement& m,
                                                     const GroupElement& n, DirectedMode mode,
                                                     std::span<const GroupElement> candidates = {});

// Ok, Violation{m, n}, or Inconclusive (SearchWindowExhausted) when the only
// possible certificates lie outside the searched window.
Verdict is_directed(const PartialAction& a, DirectedMode mode = DirectedMode::inclusion);

// x ~ y iff x.m = y.n for some m, n in the window.  Throws NotDirected.
std::vector<std::pair<StateId, StateId>> orbit_relation(const PartialAction& a);

// T(lambda, m) = lambda \ m on the morphisms of g.
PartialAction shift_on_graph(const PGraph& g);

// Shift on filters.  The states are the filters of ps followed by the tails
// reached by shifting frontier-open filters; a tail remembers the smaller
// window on which it is still exactly known.  See paths.hpp.
PartialAction shift_on_paths(const PGraph& g, const PathSpace& ps);

}  // namespace hrg
