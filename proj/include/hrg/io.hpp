#pragma once

// JSON documents and exporters.
//
// Every document carries "version" (1) and "kind" in {monoid, pgraph, action,
// groupoid}.  Monoids are {"family": "N"|"SF"|"product", "rank": k,
// "factors": [...]}; label groups use "Z"|"F"|"product".  Elements are int
// arrays for Z^d (a bare int when d = 1), strings over a, b, ... with upper
// case for inverses and "e" for the identity in F_n, arrays for products.
// A depth is an int (length bound) or an element (box ceiling).

#include <optional>
#include <string>
#include <variant>

#include "hrg/action.hpp"
#include "hrg/boundary.hpp"
#include "hrg/error.hpp"
#include "hrg/groupoid.hpp"
#include "hrg/paths.hpp"
#include "hrg/pgraph.hpp"
#include "hrg/qlo.hpp"

namespace hrg::io {

inline constexpr int schema_version = 1;

// Monoid families name the enveloping group; group families are accepted too.
GroupSpec parse_group(const json& j, const std::string& path = "$");
GroupElement parse_element(const GroupSpec& q, const json& j, const std::string& path = "$");
DegreeWindow parse_depth(const QloMonoid& p, const json& j, const std::string& path = "$");

json group_json(const GroupSpec& q, bool as_monoid);
json element_json(const GroupElement& m);
json depth_json(const DegreeWindow& w);

struct MonoidDoc {
  QloMonoid monoid;
  DegreeWindow depth;
};

// Graph document; `action` is set for the "action" construction.
struct GraphDoc {
  PGraph graph;
  std::optional<PartialAction> action;
};

using Document = std::variant<MonoidDoc, GraphDoc, PartialAction, Groupoid>;

// Reads and validates the envelope, then builds the object.  `depth`
// overrides the document's depth.  Throws Error(schema) with a "field"
// witness; construction errors (SquareMismatch, ...) propagate unchanged.
Document parse_document(const json& j, const std::optional<json>& depth = std::nullopt);
Document load_document(const std::string& file, const std::optional<json>& depth = std::nullopt);

// Documents that round-trip through parse_document.
json monoid_document(const QloMonoid& p, const DegreeWindow& depth);
json skeleton_document(const Skeleton& sk, const DegreeWindow& depth);
json action_document(const PartialAction& a);
json groupoid_document(const Groupoid& g);
json tables_document(const DegreeWindow& depth, const PGraph::Tables& t);

json graph_json(const PGraph& g);
json path_space_json(const PGraph& g, const PathSpace& ps, const BoundaryReport* boundary = nullptr);
json groupoid_json(const Groupoid& g);
json unit_label_json(const Groupoid& g, const UnitLabel& u);
json error_json(const Error& e);

// Units are doublecircle nodes; unit arrows are omitted; edges run from the
// source to the range and carry the label.
std::string groupoid_dot(const Groupoid& g);

}  // namespace hrg::io
