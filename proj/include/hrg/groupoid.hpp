#pragma once

// Discrete groupoids whose arrows are triples (x, q, y) with q in a group Q,
// composed by (x,s,y)(y,t,z) = (x,st,z).  Labels are bounded by a radius in Q;
// a composite whose label would exceed it is a frontier, not a defect.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hrg/action.hpp"
#include "hrg/error.hpp"
#include "hrg/paths.hpp"
#include "hrg/qlo.hpp"

namespace hrg {

using UnitId = std::size_t;
using ArrowId = std::size_t;
using Witness = std::optional<std::pair<GroupElement, GroupElement>>;

struct Arrow {
  UnitId target = 0;  // r
  GroupElement label;
  UnitId source = 0;  // s

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Groupoid {
 public:
  // Arrows are sorted by (target, source, label); duplicates keep the first
  // witness.  Throws BudgetExceeded for labels longer than label_radius.
  Groupoid(GroupSpec labels, std::vector<std::string> units, std::vector<Arrow> arrows,
           std::size_t label_radius, std::vector<Witness> witnesses = {});

  const GroupSpec& label_group() const noexcept { return labels_; }
  std::size_t label_radius() const noexcept { return radius_; }

  std::size_t unit_count() const noexcept { return units_.size(); }
  const std::string& unit_name(UnitId u) const { return units_.at(u); }
  const std::vector<std::string>& unit_names() const noexcept { return units_; }
  std::optional<UnitId> find_unit(const std::string& name) const;

  std::size_t size() const noexcept { return arrows_.size(); }
  const Arrow& arrow(ArrowId id) const { return arrows_.at(id); }
  const Witness& witness(ArrowId id) const { return witnesses_.at(id); }
  std::optional<ArrowId> find(UnitId x, const GroupElement& q, UnitId y) const;
  std::optional<ArrowId> unit_arrow(UnitId u) const { return find(u, labels_.identity(), u); }
  std::span<const ArrowId> with_target(UnitId u) const { return by_target_.at(u); }
  std::span<const ArrowId> with_source(UnitId u) const { return by_source_.at(u); }

 private:
  GroupSpec labels_;
  std::size_t radius_;
  std::vector<std::string> units_;
  std::vector<Arrow> arrows_;
  std::vector<Witness> witnesses_;
  std::vector<std::vector<ArrowId>> by_target_, by_source_;
  std::map<std::string, UnitId> unit_index_;
};

// Throws NotComposable, BudgetExceeded (label past the radius), MissingComposite.
ArrowId compose(const Groupoid& g, ArrowId gamma, ArrowId eta);
ArrowId inverse(const Groupoid& g, ArrowId gamma);

// Arrows (x, m n^-1, y) with x.m = y.n, m, n in the window, |m n^-1| <= radius,
// closed under composites whose label stays within the radius.  Throws NotDirected.
Groupoid semidirect_product(const PartialAction& a, std::size_t label_radius);

struct GroupoidCheck {
  Verdict verdict;
  std::size_t pairs = 0;     // composable pairs examined
  std::size_t triples = 0;   // composable triples checked for associativity
  std::size_t frontier = 0;  // pairs whose composite label exceeds the radius
};

// Units, inverses, closure within the radius, unit and inverse laws, and
// associativity on every composable triple.
GroupoidCheck verify_groupoid(const Groupoid& g);

// Arrows certified by (m, n) with endpoints in A x B.
std::vector<ArrowId> z_set(const Groupoid& g, const PartialAction& a, std::span<const StateId> A,
                           const GroupElement& m, const GroupElement& n, std::span<const StateId> B);
bool is_bisection(const Groupoid& g, std::span<const ArrowId> arrows);

class Cocycle {
 public:
  Cocycle(GroupSpec target, std::vector<GroupElement> values);
  static Cocycle canonical(const Groupoid& g);  // (x,q,y) -> q
  static Cocycle trivial(const Groupoid& g);    // everything -> e

  const GroupSpec& target() const noexcept { return target_; }
  const GroupElement& operator()(ArrowId id) const { return values_.at(id); }

 private:
  GroupSpec target_;
  std::vector<GroupElement> values_;
};

Verdict verify_cocycle(const Groupoid& g, const Cocycle& c);
// c^-1(e) as a groupoid on the same units.
Groupoid kernel(const Groupoid& g, const Cocycle& c);

using UnitLabel = std::pair<UnitId, GroupElement>;

struct SkewProduct {
  Groupoid groupoid;                 // units (u, a) named "u@a", arrow labels as in G
  std::vector<UnitLabel> unit_pairs;  // unit_pairs[k] = (u, a) of skew unit k
  std::vector<ArrowId> base;         // base[k] = underlying arrow of G
  std::size_t radius = 0;
  std::map<UnitLabel, UnitId> unit_index;
};

SkewProduct skew_product(const Groupoid& g, const Cocycle& c, std::size_t radius);
// q.(b, gamma, a) = (qb, gamma, qa); nullopt when the translate leaves the ball.
std::optional<ArrowId> translate(const SkewProduct& sp, const GroupElement& q, ArrowId id);
Verdict check_translation_automorphisms(const SkewProduct& sp);

// {(s(gamma), c(gamma))}, sorted.
std::vector<UnitLabel> compute_Y(const Groupoid& g, const Cocycle& c);
// Y is invariant in G(c) over ball(radius).  An arrow leaving Y is a frontier,
// not a violation, when every witness of its Y endpoint composes with it only
// past the label radius of G; the count is reported in the detail.
Verdict check_Y_invariance(const Groupoid& g, const Cocycle& c, const std::vector<UnitLabel>& y,
                           std::size_t radius);

struct CoverReport {
  Status status = Status::ok;  // ok: certificate found; inconclusive otherwise
  std::vector<GroupElement> translates;
  bool strongly_surjective = false;
  std::size_t search_radius = 0;
  std::size_t window_radius = 0;
  std::vector<UnitLabel> uncovered;
};

// Greedy search for q_1..q_k in ball(search_radius) whose translates of Y cover
// units x ball(window_radius).
CoverReport check_translate_cover(const Groupoid& g, const Cocycle& c, const std::vector<UnitLabel>& y,
                                  std::size_t search_radius, std::size_t window_radius);

// Arrows with both endpoints in S, without an invariance requirement.
Groupoid restrict_units(const Groupoid& g, std::span<const UnitId> s);
// As restrict_units; throws NotInvariant with an escaping arrow.
Groupoid reduce(const Groupoid& g, std::span<const UnitId> s);
std::vector<UnitId> orbit_closure(const Groupoid& g, std::span<const UnitId> s);

// Semidirect product of the shift on paths, restricted to the filters of ps.
// Tails of frontier-open filters are meeting points only, not units.
Groupoid toeplitz_groupoid(const PGraph& g, const PathSpace& ps, std::size_t label_radius);

}  // namespace hrg
