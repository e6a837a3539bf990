#pragma once

// Degree-truncated P-graphs.  Morphisms are interned ids; r, s, d and names
// live in side tables and composition is a lookup table, so any factorisation
// rule can be expressed.  Vertices are the first vertex_count() ids.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrg/error.hpp"
#include "hrg/qlo.hpp"

namespace hrg {

using MorphismId = std::size_t;
using VertexId = std::size_t;

class PartialAction;

struct MorphismInfo {
  std::string name;
  VertexId range = 0;
  VertexId source = 0;
  GroupElement degree;
};

class PGraph {
 public:
  struct Tables {
    std::vector<std::string> vertices;
    // Non-vertex morphisms; their ids are vertices.size() + index.
    std::vector<MorphismInfo> morphisms;
    // (mu, nu, mu nu).  Compositions with a vertex are added automatically.
    std::vector<std::array<MorphismId, 3>> compositions;
    // Per vertex v: generator degrees g such that some morphism of degree g
    // has range v in the untruncated graph.  Empty => derived from the tables.
    std::vector<std::vector<GroupElement>> extensions;
    // Fibres (r,d)^-1(v, n) declared infinite.
    std::vector<std::pair<VertexId, GroupElement>> infinite_fibers;
  };

  PGraph(DegreeWindow window, Tables tables);

  const QloMonoid& monoid() const noexcept { return window_.monoid(); }
  const DegreeWindow& window() const noexcept { return window_; }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t size() const noexcept { return info_.size(); }
  const MorphismInfo& info(MorphismId id) const { return info_.at(id); }
  const std::string& name(MorphismId id) const { return info_.at(id).name; }
  VertexId range(MorphismId id) const { return info_.at(id).range; }
  VertexId source(MorphismId id) const { return info_.at(id).source; }
  const GroupElement& degree(MorphismId id) const { return info_.at(id).degree; }
  bool is_vertex(MorphismId id) const noexcept { return id < vertex_count_; }

  std::optional<MorphismId> find(const std::string& name) const;
  std::span<const MorphismId> with_degree(const GroupElement& m) const;
  // Raw table lookup; nullopt if the pair was not stored.
  std::optional<MorphismId> lookup(MorphismId mu, MorphismId nu) const;
  // All stored (mu, nu) with mu nu = lambda, sorted by (d(mu), mu).
  std::span<const std::pair<MorphismId, MorphismId>> factorizations(MorphismId lambda) const;
  const std::vector<std::array<MorphismId, 3>>& composition_table() const noexcept { return table_; }

  std::span<const GroupElement> extensions(VertexId v) const { return extensions_.at(v); }
  // lambda has an extension by a generator whose degree leaves the window.
  bool extends_past_window(MorphismId lambda) const;
  const std::vector<std::pair<VertexId, GroupElement>>& infinite_fibers() const noexcept {
    return infinite_fibers_;
  }

 private:
  DegreeWindow window_;
  std::size_t vertex_count_ = 0;
  std::vector<MorphismInfo> info_;
  std::map<std::string, MorphismId> by_name_;
  std::map<GroupElement, std::vector<MorphismId>> by_degree_;
  std::unordered_map<std::uint64_t, MorphismId> compose_;
  std::vector<std::array<MorphismId, 3>> table_;
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> factors_;
  std::vector<std::vector<GroupElement>> extensions_;
  std::vector<std::pair<VertexId, GroupElement>> infinite_fibers_;
};

// Throws NotComposable, DegreeOverflow, or MissingComposite (table hole).
MorphismId compose(const PGraph& g, MorphismId mu, MorphismId nu);
// Throws DegreeNotDominated unless m <= d(lambda).
std::pair<MorphismId, MorphismId> factorize(const PGraph& g, MorphismId lambda, const GroupElement& m);
// lambda \ m, the second factor.
inline MorphismId tail(const PGraph& g, MorphismId lambda, const GroupElement& m) {
  return factorize(g, lambda, m).second;
}
// mu <= lambda in the path order: lambda = mu nu for some nu.
bool precedes(const PGraph& g, MorphismId mu, MorphismId lambda);

Verdict verify_ufp(const PGraph& g);
Verdict check_rd_proper(const PGraph& g);
std::vector<MorphismId> lub_set(const PGraph& g, std::span<const MorphismId> a, std::span<const MorphismId> b);

// k-graph presentation by coloured edges and commuting squares.
struct Skeleton {
  struct Edge {
    std::string name;
    std::size_t color = 0;
    std::string range;
    std::string source;
  };
  // first.second == third.fourth, with first/fourth of colour i and
  // second/third of colour j, i < j.
  struct Square {
    std::string first, second, third, fourth;
  };
  std::size_t colors = 1;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Square> squares;
};

PGraph from_skeleton(const Skeleton& sk, const DegreeWindow& depth);
// The one-vertex graph with Lambda = P inside the window.
PGraph from_monoid(const QloMonoid& p, const DegreeWindow& depth);
// Lambda = X * P, (x,m)(x.m,n) = (x,mn).  Defaults to the action's window.
PGraph from_action(const PartialAction& a, std::optional<DegreeWindow> depth = std::nullopt);

}  // namespace hrg
