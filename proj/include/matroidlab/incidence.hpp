#pragma once

#include <cstddef>
#include <vector>

#include "matroidlab/field.hpp"
#include "matroidlab/matrix.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"

namespace matroidlab {

enum class IncidenceKind { Circuit, Cocircuit };

/// Signed (co)circuit incidence matrix. Columns follow the ordering, so
/// column k belongs to element ordering.element_at(k).
struct SignedIncidenceMatrix {
  IncidenceKind kind = IncidenceKind::Circuit;
  bool fundamental = true;
  ElementSet basis;
  Ordering ordering;
  std::vector<ElementSet> supports;  // row i is supported on supports[i]
  Matrix matrix;
};

struct IncidencePair {
  SignedIncidenceMatrix circuits;    // n-r rows, row i is ci(B, e_{i+1})
  SignedIncidenceMatrix cocircuits;  // r rows, row i is coc(B, e_{n-r+i+1})
};

/// Over characteristic 2 the unsigned matrices; otherwise the cocircuit rows
/// are the standard form of a totally unimodular representation and the
/// circuit rows are [E | -A1^T]. Throws Errc::NotRegular when no such
/// representation is available.
IncidencePair fundamental_matrices(const Matroid& m, const StandardOrdering& so, FieldTag field);

/// Every (co)circuit, fundamental rows first. Each row is the vector of the
/// fundamental row space (resp. its orthogonal complement) with that
/// support, scaled so its first nonzero entry is 1.
SignedIncidenceMatrix full_cocircuit_matrix(const Matroid& m, const StandardOrdering& so, FieldTag field);
SignedIncidenceMatrix full_circuit_matrix(const Matroid& m, const StandardOrdering& so, FieldTag field);

struct RankReport {
  std::size_t n = 0, r = 0;
  std::size_t fundamental_circuit = 0, full_circuit = 0;
  std::size_t fundamental_cocircuit = 0, full_cocircuit = 0;
  bool orthogonal = false;   // every full circuit row against every full cocircuit row
  bool even_overlaps = true;  // support intersections have even size
  bool supports_match = true;
  bool pass = false;
};

RankReport check_rank_identities(const Matroid& m, const StandardOrdering& so, FieldTag field);

/// Whether the columns of `s` in an r-row selection of full rank are
/// nonsingular. Throws Errc::BadSize if |s| != r.
bool check_basis_nonsingular(const Matroid& m, const SignedIncidenceMatrix& coc, ElementSet s);

}  // namespace matroidlab
