#include "hrg/error.hpp"

namespace hrg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::group_mismatch: return "GroupMismatch";
    case ErrorKind::not_in_cone: return "NotInCone";
    case ErrorKind::unsupported_monoid: return "UnsupportedMonoid";
    case ErrorKind::not_composable: return "NotComposable";
    case ErrorKind::degree_overflow: return "DegreeOverflow";
    case ErrorKind::degree_not_dominated: return "DegreeNotDominated";
    case ErrorKind::square_mismatch: return "SquareMismatch";
    case ErrorKind::cube_inconsistency: return "CubeInconsistency";
    case ErrorKind::not_directed: return "NotDirected";
    case ErrorKind::range_mismatch: return "RangeMismatch";
    case ErrorKind::lambda_not_in_filter: return "LambdaNotInFilter";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::not_invariant: return "NotInvariant";
    case ErrorKind::not_action_directed: return "NotActionDirected";
    case ErrorKind::missing_composite: return "MissingComposite";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::search_window_exhausted: return "SearchWindowExhausted";
    case ErrorKind::schema: return "SchemaError";
  }
  return "Unknown";
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

json to_json(const Verdict& v) {
  json j;
  j["check"] = v.check;
  j["status"] = std::string(to_string(v.status));
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (!v.witness.is_null()) j["witness"] = v.witness;
  return j;
}

}  // namespace hrg
