#pragma once

// Groups Z^d, F_n and finite products of them, with their positive cones
// N^d, SF_n.  Elements are values; the group they live in is described by a
// separate GroupSpec so that elements stay cheap to copy and compare.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrg/error.hpp"

namespace hrg {

class GroupElement {
 public:
  enum class Kind : std::uint8_t { vector, word, tuple };

  GroupElement() = default;  // the identity of Z^0

  static GroupElement vector(std::vector<std::int64_t> coords);
  // Letters are signed and 1-based: +i is the i-th generator, -i its inverse.
  // The word is freely reduced on construction.
  static GroupElement word(std::vector<std::int64_t> letters);
  static GroupElement tuple(std::vector<GroupElement> parts);

  Kind kind() const noexcept { return kind_; }
  std::span<const std::int64_t> coords() const noexcept { return data_; }
  std::span<const std::int64_t> letters() const noexcept { return data_; }
  std::span<const GroupElement> parts() const noexcept { return parts_; }

  // l1 norm, word length, or sum over parts.
  std::size_t length() const noexcept;
  bool is_identity() const noexcept;
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Graded lexicographic: length first, then lexicographic on the normal form.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  Kind kind_ = Kind::vector;
  std::vector<std::int64_t> data_;
  std::vector<GroupElement> parts_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

class GroupSpec {
 public:
  enum class Family { zd, free, product };

  static GroupSpec zd(std::size_t rank);
  static GroupSpec free(std::size_t rank);
  static GroupSpec product(std::vector<GroupSpec> factors);

  Family family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }
  std::span<const GroupSpec> factors() const noexcept { return factors_; }

  GroupElement identity() const;
  // True if g has the shape of an element of this group.
  bool owns(const GroupElement& g) const;
  void require(const GroupElement& g) const;  // throws group_mismatch
  std::string to_string() const;
  // Z^d and F_1 are amenable, F_n for n >= 2 is not; products are amenable iff
  // every factor is.
  bool amenable() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_ = Family::zd;
  std::size_t rank_ = 0;
  std::vector<GroupSpec> factors_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

// Every element of the group of length <= r, sorted.
std::vector<GroupElement> ball(const GroupSpec& q, std::size_t r);

// The positive cone P inside its group, with the order m <= n iff m^-1 n in P.
class QloMonoid {
 public:
  explicit QloMonoid(GroupSpec group) : group_(std::move(group)) {}

  const GroupSpec& group() const noexcept { return group_; }
  GroupElement identity() const { return group_.identity(); }

  bool contains(const GroupElement& m) const;
  void require(const GroupElement& m) const;  // throws not_in_cone
  bool leq(const GroupElement& m, const GroupElement& n) const;
  std::optional<GroupElement> lub(const GroupElement& m, const GroupElement& n) const;
  bool is_ore() const;

  // Minimal nontrivial elements, sorted.
  std::vector<GroupElement> generators() const;
  // {k in P : k <= m}, sorted.
  std::vector<GroupElement> down_set(const GroupElement& m) const;
  // {k in P : |k| <= n}, sorted.
  std::vector<GroupElement> cone_ball(std::size_t n) const;

  std::string to_string() const { return group_.to_string(); }
  friend bool operator==(const QloMonoid&, const QloMonoid&) = default;

 private:
  GroupSpec group_;
};

// A hereditary truncation of P: either {m : m <= ceiling} or {m : |m| <= n}.
// Both shapes are closed under the lub of their members.
class DegreeWindow {
 public:
  static DegreeWindow box(QloMonoid p, GroupElement ceiling);
  static DegreeWindow length(QloMonoid p, std::size_t n);

  const QloMonoid& monoid() const noexcept { return p_; }
  bool is_box() const noexcept { return ceiling_.has_value(); }
  const std::optional<GroupElement>& ceiling() const noexcept { return ceiling_; }
  std::size_t length_bound() const noexcept { return bound_; }

  bool contains(const GroupElement& m) const;
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  // Largest length of an element of the window.
  std::size_t max_length() const;
  // {k : n k in window}; requires n in the window.
  DegreeWindow shifted(const GroupElement& n) const;
  std::string to_string() const;

  friend bool operator==(const DegreeWindow& a, const DegreeWindow& b) {
    return a.p_ == b.p_ && a.ceiling_ == b.ceiling_ && a.bound_ == b.bound_;
  }

 private:
  DegreeWindow(QloMonoid p, std::optional<GroupElement> ceiling, std::size_t bound);

  QloMonoid p_;
  std::optional<GroupElement> ceiling_;
  std::size_t bound_ = 0;
  std::vector<GroupElement> elements_;
};

}  // namespace hrg
