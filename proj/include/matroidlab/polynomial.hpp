#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/field.hpp"

namespace matroidlab {

/// Exponent vector over a fixed number of variables x1..xn. Ordered by
/// graded lexicographic order with x1 > x2 > ... > xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  /// x_{i+1}^power (variables are 0-based internally).
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);
  /// "1", "x1^2 x3", "x1*x2" (factors separated by spaces or '*').
  static Monomial parse(std::size_t nvars, std::string_view text);

  std::size_t nvars() const { return exp_.size(); }
  unsigned degree() const;
  unsigned exponent(std::size_t i) const { return exp_[i]; }
  void set_exponent(std::size_t i, unsigned e) { exp_[i] = static_cast<std::uint16_t>(e); }
  const std::vector<std::uint16_t>& exponents() const { return exp_; }
  bool is_one() const;

  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint16_t> exp_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Polynomial with exact coefficients, terms sorted by decreasing grlex.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(FieldTag field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(FieldTag field, std::size_t nvars, const Scalar& c);
  static Polynomial monomial(FieldTag field, const Monomial& m, const Scalar& c = Scalar(1));
  static Polynomial variable(FieldTag field, std::size_t nvars, std::size_t i);
  /// Terms "c x1^a x2^b" joined by '+' or '-'.
  static Polynomial parse(FieldTag field, std::size_t nvars, std::string_view text);

  const FieldTag& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coefficient() const { return terms_.front().coef; }
  unsigned degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m, zero if absent.
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize();

  FieldTag field_ = FieldTag::gf2();
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

struct Ideal {
  FieldTag field = FieldTag::gf2();
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
};

}  // namespace matroidlab
