#pragma once

#include <string>
#include <vector>

#include "hrg/qlo.hpp"

namespace th {

inline hrg::GroupElement v(std::vector<std::int64_t> c) { return hrg::GroupElement::vector(std::move(c)); }
inline hrg::GroupElement w(const std::string& s) {
  std::vector<std::int64_t> l;
  for (char c : s) {
    if (c == 'e') continue;
    l.push_back(c >= 'a' ? c - 'a' + 1 : -(c - 'A' + 1));
  }
  return hrg::GroupElement::word(l);
}

}  // namespace th
