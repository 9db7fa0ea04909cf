#ifndef L2A_SRC_REPORT_UTIL_HPP
#define L2A_SRC_REPORT_UTIL_HPP

#include <utility>
#include <vector>

#include "l2a/algebra.hpp"

namespace l2a::detail {

// Keeps the first (lexicographically earliest) failure only.
inline void record(EquationResult& eq, std::vector<std::size_t> tuple, Vec discrepancy) {
  if (eq.passed && !is_zero(discrepancy)) {
    eq.passed = false;
    eq.tuple = std::move(tuple);
    eq.discrepancy = std::move(discrepancy);
  }
}

inline Vec minus(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace l2a::detail

#endif  // L2A_SRC_REPORT_UTIL_HPP
