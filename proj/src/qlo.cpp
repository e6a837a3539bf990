#include "hrg/qlo.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hrg {

namespace {

// a < A < b < B < ...
std::int64_t letter_key(std::int64_t l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

std::vector<std::int64_t> reduce_word(const std::vector<std::int64_t>& in) {
  std::vector<std::int64_t> out;
  out.reserve(in.size());
  for (auto l : in) {
    if (l == 0) throw Error(ErrorKind::group_mismatch, "letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void require_same_shape(const GroupElement& a, const GroupElement& b) {
  bool same = a.kind() == b.kind();
  if (same && a.kind() == GroupElement::Kind::vector) same = a.coords().size() == b.coords().size();
  if (same && a.kind() == GroupElement::Kind::tuple) same = a.parts().size() == b.parts().size();
  if (!same)
    throw Error(ErrorKind::group_mismatch, "elements live in different groups",
                json{{"left", a.to_string()}, {"right", b.to_string()}});
}

struct Sized {
  GroupElement g;
  std::size_t len;
};

// All tuples (g_1, ..., g_k) with g_i from lists[i] and total length <= budget.
std::vector<GroupElement> combine(const std::vector<std::vector<Sized>>& lists, std::size_t budget) {
  std::vector<GroupElement> out;
  std::vector<GroupElement> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == lists.size()) {
      out.push_back(GroupElement::tuple(cur));
      return;
    }
    for (const auto& s : lists[i]) {
      if (s.len > left) continue;
      cur.push_back(s.g);
      rec(i + 1, left - s.len);
      cur.pop_back();
    }
  };
  rec(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sized> sized(const std::vector<GroupElement>& v) {
  std::vector<Sized> out;
  out.reserve(v.size());
  for (const auto& g : v) out.push_back({g, g.length()});
  return out;
}

void vectors_upto(std::size_t dim, std::int64_t budget, bool signed_coords,
                  std::vector<std::int64_t>& cur, std::vector<GroupElement>& out) {
  if (cur.size() == dim) {
    out.push_back(GroupElement::vector(cur));
    return;
  }
  std::int64_t lo = signed_coords ? -budget : 0;
  for (std::int64_t c = lo; c <= budget; ++c) {
    cur.push_back(c);
    vectors_upto(dim, budget - std::abs(c), signed_coords, cur, out);
    cur.pop_back();
  }
}

std::vector<GroupElement> words_upto(std::size_t rank, std::size_t n, bool positive) {
  std::vector<GroupElement> out{GroupElement::word({})};
  std::vector<std::vector<std::int64_t>> layer{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : layer) {
      for (std::int64_t i = 1; i <= static_cast<std::int64_t>(rank); ++i) {
        for (std::int64_t l : {i, -i}) {
          if (positive && l < 0) continue;
          if (!w.empty() && w.back() == -l) continue;
          auto v = w;
          v.push_back(l);
          next.push_back(std::move(v));
        }
      }
    }
    for (const auto& w : next) out.push_back(GroupElement::word(w));
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::vector(std::vector<std::int64_t> coords) {
  GroupElement g;
  g.kind_ = Kind::vector;
  g.data_ = std::move(coords);
  return g;
}

GroupElement GroupElement::word(std::vector<std::int64_t> letters) {
  GroupElement g;
  g.kind_ = Kind::word;
  g.data_ = reduce_word(letters);
  return g;
}

GroupElement GroupElement::tuple(std::vector<GroupElement> parts) {
  GroupElement g;
  g.kind_ = Kind::tuple;
  g.parts_ = std::move(parts);
  return g;
}

std::size_t GroupElement::length() const noexcept {
  switch (kind_) {
    case Kind::vector: {
      std::size_t s = 0;
      for (auto c : data_) s += static_cast<std::size_t>(std::abs(c));
      return s;
    }
    case Kind::word: return data_.size();
    case Kind::tuple: {
      std::size_t s = 0;
      for (const auto& p : parts_) s += p.length();
      return s;
    }
  }
  return 0;
}

bool GroupElement::is_identity() const noexcept {
  switch (kind_) {
    case Kind::vector: return std::all_of(data_.begin(), data_.end(), [](auto c) { return c == 0; });
    case Kind::word: return data_.empty();
    case Kind::tuple:
      return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.is_identity(); });
  }
  return false;
}

std::string GroupElement::to_string() const {
  std::string s;
  switch (kind_) {
    case Kind::vector:
      s = "(";
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(data_[i]);
      }
      s += ')';
      return s;
    case Kind::word:
      if (data_.empty()) return "e";
      for (auto l : data_) {
        char base = l > 0 ? 'a' : 'A';
        s += static_cast<char>(base + (std::abs(l) - 1));
      }
      return s;
    case Kind::tuple:
      s = "<";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ';';
        s += parts_[i].to_string();
      }
      s += '>';
      return s;
  }
  return s;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ == GroupElement::Kind::word) {
    return std::lexicographical_compare_three_way(
        a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end(),
        [](auto x, auto y) { return letter_key(x) <=> letter_key(y); });
  }
  if (auto c = a.data_ <=> b.data_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.kind()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto c : g.coords()) mix(std::hash<std::int64_t>{}(c));
  for (const auto& p : g.parts()) mix((*this)(p));
  mix(g.parts().size());
  return h;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_shape(a, b);
  switch (a.kind()) {
    case GroupElement::Kind::vector: {
      std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
      return GroupElement::vector(std::move(c));
    }
    case GroupElement::Kind::word: {
      std::vector<std::int64_t> w(a.letters().begin(), a.letters().end());
      w.insert(w.end(), b.letters().begin(), b.letters().end());
      return GroupElement::word(std::move(w));
    }
    case GroupElement::Kind::tuple: {
      std::vector<GroupElement> parts;
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        parts.push_back(multiply(a.parts()[i], b.parts()[i]));
      return GroupElement::tuple(std::move(parts));
    }
  }
  return a;
}

GroupElement inverse(const GroupElement& a) {
  switch (a.kind()) {
    case GroupElement::Kind::vector: {
      std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
      for (auto& x : c) x = -x;
      return GroupElement::vector(std::move(c));
    }
    case GroupElement::Kind::word: {
      std::vector<std::int64_t> w(a.letters().rbegin(), a.letters().rend());
      for (auto& l : w) l = -l;
      return GroupElement::word(std::move(w));
    }
    case GroupElement::Kind::tuple: {
      std::vector<GroupElement> parts;
      for (const auto& p : a.parts()) parts.push_back(inverse(p));
      return GroupElement::tuple(std::move(parts));
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::zd(std::size_t rank) {
  GroupSpec g;
  g.family_ = Family::zd;
  g.rank_ = rank;
  return g;
}

GroupSpec GroupSpec::free(std::size_t rank) {
  if (rank == 0) throw Error(ErrorKind::unsupported_monoid, "free group of rank 0");
  GroupSpec g;
  g.family_ = Family::free;
  g.rank_ = rank;
  return g;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw Error(ErrorKind::unsupported_monoid, "empty product");
  GroupSpec g;
  g.family_ = Family::product;
  g.rank_ = factors.size();
  g.factors_ = std::move(factors);
  return g;
}

GroupElement GroupSpec::identity() const {
  switch (family_) {
    case Family::zd: return GroupElement::vector(std::vector<std::int64_t>(rank_, 0));
    case Family::free: return GroupElement::word({});
    case Family::product: {
      std::vector<GroupElement> parts;
      for (const auto& f : factors_) parts.push_back(f.identity());
      return GroupElement::tuple(std::move(parts));
    }
  }
  return {};
}

bool GroupSpec::owns(const GroupElement& g) const {
  switch (family_) {
    case Family::zd:
      return g.kind() == GroupElement::Kind::vector && g.coords().size() == rank_;
    case Family::free:
      return g.kind() == GroupElement::Kind::word &&
             std::all_of(g.letters().begin(), g.letters().end(), [this](auto l) {
               return static_cast<std::size_t>(std::abs(l)) <= rank_;
             });
    case Family::product:
      if (g.kind() != GroupElement::Kind::tuple || g.parts().size() != factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].owns(g.parts()[i])) return false;
      return true;
  }
  return false;
}

void GroupSpec::require(const GroupElement& g) const {
  if (!owns(g))
    throw Error(ErrorKind::group_mismatch, g.to_string() + " is not an element of " + to_string(),
                json{{"element", g.to_string()}, {"group", to_string()}});
}

std::string GroupSpec::to_string() const {
  switch (family_) {
    case Family::zd: return "Z^" + std::to_string(rank_);
    case Family::free: return "F_" + std::to_string(rank_);
    case Family::product: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i].to_string();
      }
      return s;
    }
  }
  return {};
}

bool GroupSpec::amenable() const {
  switch (family_) {
    case Family::zd: return true;
    case Family::free: return rank_ <= 1;
    case Family::product:
      return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.amenable(); });
  }
  return false;
}

std::vector<GroupElement> ball(const GroupSpec& q, std::size_t r) {
  switch (q.family()) {
    case GroupSpec::Family::zd: {
      std::vector<GroupElement> out;
      std::vector<std::int64_t> cur;
      vectors_upto(q.rank(), static_cast<std::int64_t>(r), true, cur, out);
      std::sort(out.begin(), out.end());
      return out;
    }
    case GroupSpec::Family::free: return words_upto(q.rank(), r, false);
    case GroupSpec::Family::product: {
      std::vector<std::vector<Sized>> lists;
      for (const auto& f : q.factors()) lists.push_back(sized(ball(f, r)));
      return combine(lists, r);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// QloMonoid

bool QloMonoid::contains(const GroupElement& m) const {
  if (!group_.owns(m)) return false;
  switch (m.kind()) {
    case GroupElement::Kind::vector:
      return std::all_of(m.coords().begin(), m.coords().end(), [](auto c) { return c >= 0; });
    case GroupElement::Kind::word:
      return std::all_of(m.letters().begin(), m.letters().end(), [](auto l) { return l > 0; });
    case GroupElement::Kind::tuple:
      for (std::size_t i = 0; i < m.parts().size(); ++i)
        if (!QloMonoid(group_.factors()[i]).contains(m.parts()[i])) return false;
      return true;
  }
  return false;
}

void QloMonoid::require(const GroupElement& m) const {
  group_.require(m);
  if (!contains(m))
    throw Error(ErrorKind::not_in_cone, m.to_string() + " is not in the positive cone",
                json{{"element", m.to_string()}, {"monoid", to_string()}});
}

bool QloMonoid::leq(const GroupElement& m, const GroupElement& n) const {
  require(m);
  require(n);
  return contains(multiply(inverse(m), n));
}

std::optional<GroupElement> QloMonoid::lub(const GroupElement& m, const GroupElement& n) const {
  require(m);
  require(n);
  switch (group_.family()) {
    case GroupSpec::Family::zd: {
      std::vector<std::int64_t> c(m.coords().size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(m.coords()[i], n.coords()[i]);
      return GroupElement::vector(std::move(c));
    }
    case GroupSpec::Family::free: {
      const auto& shorter = m.length() <= n.length() ? m : n;
      const auto& longer = m.length() <= n.length() ? n : m;
      if (std::equal(shorter.letters().begin(), shorter.letters().end(), longer.letters().begin()))
        return longer;
      return std::nullopt;
    }
    case GroupSpec::Family::product: {
      std::vector<GroupElement> parts;
      for (std::size_t i = 0; i < m.parts().size(); ++i) {
        auto l = QloMonoid(group_.factors()[i]).lub(m.parts()[i], n.parts()[i]);
        if (!l) return std::nullopt;
        parts.push_back(std::move(*l));
      }
      return GroupElement::tuple(std::move(parts));
    }
  }
  return std::nullopt;
}

bool QloMonoid::is_ore() const {
  switch (group_.family()) {
    case GroupSpec::Family::zd: return true;
    case GroupSpec::Family::free: return group_.rank() <= 1;
    case GroupSpec::Family::product:
      return std::all_of(group_.factors().begin(), group_.factors().end(),
                         [](const auto& f) { return QloMonoid(f).is_ore(); });
  }
  return false;
}

std::vector<GroupElement> QloMonoid::generators() const {
  std::vector<GroupElement> out;
  switch (group_.family()) {
    case GroupSpec::Family::zd:
      for (std::size_t i = 0; i < group_.rank(); ++i) {
        std::vector<std::int64_t> c(group_.rank(), 0);
        c[i] = 1;
        out.push_back(GroupElement::vector(std::move(c)));
      }
      break;
    case GroupSpec::Family::free:
      for (std::size_t i = 1; i <= group_.rank(); ++i)
        out.push_back(GroupElement::word({static_cast<std::int64_t>(i)}));
      break;
    case GroupSpec::Family::product: {
      auto id = identity();
      for (std::size_t i = 0; i < group_.factors().size(); ++i) {
        for (auto& g : QloMonoid(group_.factors()[i]).generators()) {
          std::vector<GroupElement> parts(id.parts().begin(), id.parts().end());
          parts[i] = g;
          out.push_back(GroupElement::tuple(std::move(parts)));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> QloMonoid::down_set(const GroupElement& m) const {
  require(m);
  std::vector<GroupElement> out;
  switch (group_.family()) {
    case GroupSpec::Family::zd: {
      std::vector<std::int64_t> cur;
      std::function<void()> rec = [&] {
        if (cur.size() == m.coords().size()) {
          out.push_back(GroupElement::vector(cur));
          return;
        }
        for (std::int64_t c = 0; c <= m.coords()[cur.size()]; ++c) {
          cur.push_back(c);
          rec();
          cur.pop_back();
        }
      };
      rec();
      break;
    }
    case GroupSpec::Family::free:
      for (std::size_t k = 0; k <= m.letters().size(); ++k)
        out.push_back(GroupElement::word({m.letters().begin(), m.letters().begin() + k}));
      break;
    case GroupSpec::Family::product: {
      std::vector<std::vector<Sized>> lists;
      std::size_t total = 0;
      for (std::size_t i = 0; i < m.parts().size(); ++i) {
        lists.push_back(sized(QloMonoid(group_.factors()[i]).down_set(m.parts()[i])));
        total += m.parts()[i].length();
      }
      return combine(lists, total);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> QloMonoid::cone_ball(std::size_t n) const {
  switch (group_.family()) {
    case GroupSpec::Family::zd: {
      std::vector<GroupElement> out;
      std::vector<std::int64_t> cur;
      vectors_upto(group_.rank(), static_cast<std::int64_t>(n), false, cur, out);
      std::sort(out.begin(), out.end());
      return out;
    }
    case GroupSpec::Family::free: return words_upto(group_.rank(), n, true);
    case GroupSpec::Family::product: {
      std::vector<std::vector<Sized>> lists;
      for (const auto& f : group_.factors()) lists.push_back(sized(QloMonoid(f).cone_ball(n)));
      return combine(lists, n);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// DegreeWindow

DegreeWindow::DegreeWindow(QloMonoid p, std::optional<GroupElement> ceiling, std::size_t bound)
    : p_(std::move(p)), ceiling_(std::move(ceiling)), bound_(bound) {
  elements_ = ceiling_ ? p_.down_set(*ceiling_) : p_.cone_ball(bound_);
}

DegreeWindow DegreeWindow::box(QloMonoid p, GroupElement ceiling) {
  p.require(ceiling);
  return DegreeWindow(std::move(p), std::move(ceiling), 0);
}

DegreeWindow DegreeWindow::length(QloMonoid p, std::size_t n) {
  return DegreeWindow(std::move(p), std::nullopt, n);
}

bool DegreeWindow::contains(const GroupElement& m) const {
  if (!p_.contains(m)) return false;
  return ceiling_ ? p_.leq(m, *ceiling_) : m.length() <= bound_;
}

std::size_t DegreeWindow::max_length() const {
  return ceiling_ ? ceiling_->length() : bound_;
}

DegreeWindow DegreeWindow::shifted(const GroupElement& n) const {
  if (!contains(n))
    throw Error(ErrorKind::degree_overflow, n.to_string() + " lies outside " + to_string());
  if (ceiling_) return box(p_, multiply(inverse(n), *ceiling_));
  return length(p_, bound_ - n.length());
}

std::string DegreeWindow::to_string() const {
  if (ceiling_) return "<=" + ceiling_->to_string();
  return "|m|<=" + std::to_string(bound_);
}

}  // namespace hrg
