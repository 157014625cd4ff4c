#pragma once

#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"

namespace testing_helpers {

// Cobasis elements first, then the basis, each in index order.
inline matroidlab::StandardOrdering standard_for(const matroidlab::Matroid& m, matroidlab::ElementSet b) {
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (!b.contains(e)) order.push_back(e);
  b.for_each([&](std::size_t e) { order.push_back(e); });
  return matroidlab::StandardOrdering::make(m, matroidlab::Ordering(order));
}

inline std::vector<std::string> labels_of(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

}  // namespace testing_helpers

namespace testing_helpers {

inline bool same_entries(const matroidlab::Matrix& a, const matroidlab::Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

}  // namespace testing_helpers
