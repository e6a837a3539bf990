#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace hrg {

using json = nlohmann::json;

enum class ErrorKind {
  group_mismatch,
  not_in_cone,
  unsupported_monoid,
  not_composable,
  degree_overflow,
  degree_not_dominated,
  square_mismatch,
  cube_inconsistency,
  not_directed,
  range_mismatch,
  lambda_not_in_filter,
  budget_exceeded,
  not_invariant,
  not_action_directed,
  missing_composite,
  domain_mismatch,
  search_window_exhausted,
  schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Thrown for contract violations on inputs. Violations of mathematical
// properties being *checked* are returned as Verdict values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, json witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const json& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  json witness_;
};

enum class Status { ok, violation, inconclusive };

std::string_view to_string(Status s) noexcept;

struct Verdict {
  Status status = Status::ok;
  std::string check;
  std::string detail;
  json witness;

  static Verdict pass(std::string check) { return {Status::ok, std::move(check), {}, {}}; }
  static Verdict fail(std::string check, std::string detail, json witness = {}) {
    return {Status::violation, std::move(check), std::move(detail), std::move(witness)};
  }
  static Verdict unknown(std::string check, std::string detail, json witness = {}) {
    return {Status::inconclusive, std::move(check), std::move(detail), std::move(witness)};
  }

  bool ok() const noexcept { return status == Status::ok; }
  explicit operator bool() const noexcept { return ok(); }
};

json to_json(const Verdict& v);

}  // namespace hrg
