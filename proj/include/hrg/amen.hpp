#pragma once

// Amenability certificates for semidirect products of directed actions:
// the r_F construction, action-directed sets, the relations R_F, kernel
// exhaustion and an exact checker for approximate invariant densities.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hrg/action.hpp"
#include "hrg/error.hpp"
#include "hrg/groupoid.hpp"
#include "hrg/qlo.hpp"

namespace hrg {

using Rational = boost::rational<std::int64_t>;
using Subset = std::vector<GroupElement>;  // sorted, duplicate free

// U(n_1) & ... & U(n_k); every state for the empty set.
std::vector<StateId> common_domain(const PartialAction& a, std::span<const GroupElement> s);

// Lub closure of the universe (with e), restricted to the action's window.
std::vector<GroupElement> lub_closure(const PartialAction& a, std::span<const GroupElement> universe);

// r_F for F with nonempty common domain.  A value for |F| = k+1 is the least
// candidate dominating every r_S, |S| = k, whose domain equals the common domain.
class RFBuilder {
 public:
  // candidates empty: the whole window of the action.
  RFBuilder(const PartialAction& a, std::vector<GroupElement> candidates = {});

  // nullopt if no candidate qualifies; failure() then names the subset.
  // Throws DomainMismatch if the common domain of F is empty.
  std::optional<GroupElement> r(Subset f);

  const std::map<Subset, GroupElement>& values() const noexcept { return memo_; }
  const std::optional<Subset>& failure() const noexcept { return failure_; }
  const PartialAction& action() const noexcept { return *a_; }
  std::span<const GroupElement> candidates() const noexcept { return candidates_; }

 private:
  const PartialAction* a_;
  std::vector<GroupElement> candidates_;
  std::map<Subset, GroupElement> memo_;
  std::map<Subset, bool> failed_;
  std::optional<Subset> failure_;
};

struct RFResult {
  Status status = Status::ok;  // inconclusive: some subset had no candidate
  std::map<Subset, GroupElement> values;
  std::vector<GroupElement> search_window;
  json witness;
};

// r_F for every subset of the universe with nonempty common domain.
// Candidates default to lub_closure(universe).  Universe size capped at 16.
RFResult build_rF(const PartialAction& a, std::span<const GroupElement> universe,
                  std::span<const GroupElement> candidates = {});

// n <= r_F, U(r_F) = common domain, and monotonicity, on every pair of keys.
Verdict check_rF(const PartialAction& a, const std::map<Subset, GroupElement>& values);

struct ActionDirectedSet {
  std::vector<GroupElement> elements;  // sorted
  std::map<Subset, GroupElement> rF;  // r_{S'} for the subsets S' used
};

// F = {r_S' : S' subset of S with nonempty common domain}.  |S| <= 20.
// Throws BudgetExceeded, or SearchWindowExhausted when a needed r_S' has no candidate.
ActionDirectedSet extend_to_action_directed(RFBuilder& rf, std::span<const GroupElement> s);

Verdict is_action_directed(const PartialAction& a, std::span<const GroupElement> f);

struct EquivRelation {
  std::size_t base = 0;                           // states 0..base-1
  std::vector<std::pair<StateId, StateId>> pairs;  // sorted
  bool contains(StateId x, StateId y) const;
};

// Transitivity failure (x ~ y, y ~ z, not x ~ z), if any.
std::optional<std::array<StateId, 3>> transitivity_failure(const EquivRelation& r);

// {(x, y) : x.m = y.m for some m in F}, without a closure pass.
// Throws NotActionDirected with a triple when the result is not transitive.
EquivRelation relation_RF(const PartialAction& a, std::span<const GroupElement> f);

// The union over m in F of the fibres T_m^-1(x.m).
std::vector<StateId> fibre_union(const PartialAction& a, std::span<const GroupElement> f, StateId x);

struct KernelPair {
  StateId x = 0, y = 0;
  std::size_t first = 0;  // least i with (x, y) in R_{F_i}, counted from 1
};

struct ExhaustionReport {
  Status status = Status::ok;
  std::vector<std::vector<GroupElement>> chain;  // F_1, F_2, ...
  std::vector<KernelPair> covered;
  std::vector<std::pair<StateId, StateId>> uncovered;
  bool monotone = true;
  std::vector<std::string> states;  // names for reporting
  json witness;  // failure details when status != ok
};

// F_1 from {e}, F_{i+1} from F_i and p_{i+1}, for the universe in canonical
// order (e first); then the kernel pairs of G under c are matched against R_{F_i}.
ExhaustionReport exhaust_kernel(const Groupoid& g, const Cocycle& c, const PartialAction& a,
                                std::span<const GroupElement> universe);

// gs[n-1][arrow] = g_n(arrow).  Missing arrows are outside the support.
struct DensityRow {
  std::size_t n = 0;
  Rational min_mass, max_mass;
  Rational max_displacement;
  std::size_t frontier_terms = 0;  // nonzero terms whose arrow lies past the radius
};

struct DensityReport {
  Verdict verdict;
  std::vector<DensityRow> rows;
};

// Mass sum_{r(g)=u} g_n(g) per unit, and displacement
// sum_{r(g')=r(g)} |g_n(g^-1 g') - g_n(g')| per probe g.  Passes iff every
// mass is <= 1, masses at the horizon are >= 1 - eps and the displacements at
// the horizon are <= eps.  probes empty: every arrow.  Throws DomainMismatch.
DensityReport verify_approx_inv_density(const Groupoid& g, const std::vector<std::vector<Rational>>& gs,
                                        Rational eps, std::span<const ArrowId> probes = {});

struct CertificateBundle {
  Status status = Status::ok;
  std::string verdict;
  std::size_t radius = 0;
  std::string depth;
  Verdict directedness;
  bool q_amenable = false;
  ExhaustionReport kernel;
  Verdict y_invariance;
  CoverReport cover;
};

CertificateBundle amenability_certificate(const PartialAction& a, std::size_t radius);

json to_json(const ExhaustionReport& r);
json to_json(const CertificateBundle& b);

}  // namespace hrg
