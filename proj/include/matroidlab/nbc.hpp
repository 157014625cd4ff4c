#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/bc_complex.hpp"
#include "matroidlab/groebner.hpp"
#include "matroidlab/incidence.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"
#include "matroidlab/polynomial.hpp"

namespace matroidlab {

/// Linear forms theta_{e_j}, one per basis position j = n-r+1..n, in the
/// variables x1..xn indexed by position.
struct ThetaSystem {
  StandardOrdering so;
  FieldTag field;
  Matrix coefficients;  // signed fundamental cocircuit matrix, r x n
  std::vector<Polynomial> forms;
};

ThetaSystem lsop(const Matroid& m, const StandardOrdering& so, FieldTag field);

struct LsopValidation {
  std::size_t facets_checked = 0;
  bool facets_full_rank = false;    // every NBC facet gives a nonsingular r x r block
  bool represents_matroid = false;  // the coefficient matrix has the same bases as m
};

LsopValidation validate_lsop(const Matroid& m, const ThetaSystem& theta);

/// Squarefree generators, one per broken circuit; x_k belongs to position k.
Ideal stanley_reisner_ideal(const Matroid& m, const Ordering& ord);

/// Replaces each basis variable by its solved linear form in x1..x_{n-r}.
/// Throws Errc::UnsolvableTheta if a diagonal coefficient vanishes.
Ideal substitute_basis_variables(const Ideal& ideal, const ThetaSystem& theta);

struct CircuitMonomial {
  ElementSet circuit;
  ElementSet broken;
  bool fundamental = false;
  Monomial m;
};

struct MonomialData {
  std::vector<std::size_t> d;  // d[j-1] = d_j, 1-based positions
  std::vector<CircuitMonomial> circuits;  // fundamental circuits C_1..C_{n-r} first
};

MonomialData dj_and_mc(const Matroid& m, const StandardOrdering& so);

/// p_C for every circuit, in the order of dj_and_mc, over x1..x_{n-r}.
std::vector<Polynomial> circuit_polynomials(const Matroid& m, const ThetaSystem& theta, const MonomialData& data);

/// Whether m_C occurs in p_C with nonzero coefficient, for every circuit.
bool leading_terms_present(const MonomialData& data, const std::vector<Polynomial>& p);

struct OrderIdeals {
  std::size_t nvars = 0;
  std::vector<Monomial> upper_generators;  // minimal generators of U(M)
  std::vector<Monomial> lower;             // L(M), increasing grlex
};

/// Throws Errc::InfiniteLowerIdeal if some variable has no pure power in U.
OrderIdeals order_ideals(const Matroid& m, const StandardOrdering& so);
OrderIdeals order_ideals(const MonomialData& data, std::size_t nvars);

bool is_lower_ideal(const std::vector<Monomial>& s);

struct NbcOptions {
  BasisPath path = BasisPath::Groebner;
  bool keep_lower = true;
};

struct NbcReport {
  std::vector<std::string> ordering;
  std::string field;
  std::vector<std::int64_t> h;
  std::int64_t h_sum = 0;
  std::size_t lower_size = 0;
  std::size_t quotient_dim = 0;
  bool cardinality_ok = false;  // |L| = sum of h
  bool independent = false;     // L independent in the quotient
  bool basis = false;
  BasisVerdictKind verdict = BasisVerdictKind::Basis;
  bool infinite_lower = false;
  std::optional<Monomial> witness;
  std::size_t components = 1;
  std::vector<Monomial> lower;
  double millis = 0;
};

/// Disconnected inputs are split into connected components and the
/// per-component results multiplied together.
NbcReport nbc_check(const Matroid& m, const StandardOrdering& so, FieldTag field, const NbcOptions& opt = {});

struct DecompositionReport {
  bool split_holds = false;        // L(M) = L(M\e_n) disjoint-union x_{n-r} L(M/e_n)
  bool deletion_cocircuits = false;     // coc(B1,e_j) = coc(B,e_j) \ e_{n-r}
  bool contraction_cocircuits = false;  // coc(B2,e_j) = coc(B,e_j)
  bool monomial_relations = false;      // type I / II relations for m_C
  std::optional<bool> polynomial_relations;  // same for p_C, characteristic 2 only
  std::size_t lower = 0, lower_deletion = 0, lower_contraction = 0;
  bool holds() const {
    return split_holds && deletion_cocircuits && contraction_cocircuits && monomial_relations &&
           polynomial_relations.value_or(true);
  }
};

/// Needs {e_n, e_{n-r}} to be a cocircuit (Errc::NoCocircuitPair).
DecompositionReport decomposition_check(const Matroid& m, const StandardOrdering& so, FieldTag field);

bool has_cocircuit_pair(const Matroid& m, const StandardOrdering& so);

}  // namespace matroidlab
