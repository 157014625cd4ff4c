#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matroidlab/polynomial.hpp"

namespace matroidlab {

/// Reduced Groebner basis under grlex (x1 > x2 > ...), monic, sorted by
/// increasing leading monomial. Buchberger with the sugar strategy and both
/// Buchberger criteria.
std::vector<Polynomial> groebner_basis(const Ideal& ideal);

/// Fully reduced remainder of f modulo g.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g);

/// Monomials outside the initial ideal, increasing grlex. Throws
/// Errc::NotArtinian if some variable has no pure power among the leading
/// monomials.
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb, std::size_t nvars);

struct QuotientDimension {
  std::size_t total = 0;
  std::vector<std::size_t> by_degree;
};

QuotientDimension quotient_dimension(const Ideal& ideal);

enum class BasisVerdictKind { Basis, NotSpanning, NotIndependent, WrongCardinality };
const char* verdict_name(BasisVerdictKind k);

struct BasisVerdict {
  BasisVerdictKind kind = BasisVerdictKind::Basis;
  std::optional<Monomial> witness;  // dependent element or monomial outside the span
  std::size_t dimension = 0;

  friend bool operator==(const BasisVerdict&, const BasisVerdict&) = default;
};

enum class BasisPath { Groebner, Macaulay };

/// Whether the images of s form a basis of the quotient. Checks, in order:
/// |s| > dim gives WrongCardinality; the first element of s lying in the
/// span of the earlier ones gives NotIndependent; otherwise |s| < dim gives
/// NotSpanning with the least monomial outside the span. The Macaulay path
/// needs homogeneous generators (Errc::NotHomogeneous).
BasisVerdict monomial_set_is_basis(const Ideal& ideal, const std::vector<Monomial>& s,
                                   BasisPath path = BasisPath::Groebner);

}  // namespace matroidlab
