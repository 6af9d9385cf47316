#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lspace/f2sympl.hpp"

namespace testing_helpers {

// Packs e- and f-index lists (1-based) into one vector of grade n.
inline std::uint64_t vec(int n, std::initializer_list<int> e, std::initializer_list<int> f = {}) {
  std::uint64_t v = 0;
  for (int i : e) v ^= std::uint64_t{1} << (i - 1);
  for (int i : f) v ^= std::uint64_t{1} << (n + i - 1);
  return v;
}

inline lspace::Lagrangian lag(int n, std::initializer_list<std::uint64_t> rows) {
  std::vector<std::uint64_t> r(rows);
  return lspace::Lagrangian::from_rows(n, r);
}

}  // namespace testing_helpers
