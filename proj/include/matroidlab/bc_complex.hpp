#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"

namespace matroidlab {

/// C minus its least element under the ordering, duplicates collapsed,
/// sorted by bitmask.
std::vector<ElementSet> broken_circuits(const Matroid& m, const Ordering& ord);

/// All faces of the broken circuit complex (sets containing no broken
/// circuit), the empty face included. Empty when the matroid has a loop.
std::vector<ElementSet> bc_faces(const Matroid& m, const Ordering& ord);

struct FhVectors {
  std::vector<std::uint64_t> f;  // f[i] = number of faces with i elements, i = 0..r
  std::vector<std::int64_t> h;   // h_0..h_r
  std::uint64_t facets = 0;

  std::int64_t h_sum() const;
  friend bool operator==(const FhVectors&, const FhVectors&) = default;
};

FhVectors f_h_vectors(const Matroid& m, const Ordering& ord);

/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, with f indexed by face size.
std::vector<std::int64_t> h_from_f(const std::vector<std::uint64_t>& f);

struct HRecursionReport {
  std::vector<std::int64_t> h, h_deletion, h_contraction;
  bool holds = false;
};

/// Checks h_i(M) = h_i(M\e) + h_{i-1}(M/e) using induced orderings.
/// Throws Errc::DegenerateElement if e is a loop or coloop.
HRecursionReport h_recursion_check(const Matroid& m, std::size_t e, const Ordering& ord);

struct JoinReport {
  std::vector<ElementSet> components;
  std::vector<std::uint64_t> f, f_join;
  bool holds = false;
};

/// Compares the f-vector of the complex with the join of the complexes of
/// the connected components.
JoinReport join_decomposition_check(const Matroid& m, const Ordering& ord);

}  // namespace matroidlab
