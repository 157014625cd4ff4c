#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace matroidlab {

/// Exact scalar used at every public boundary. Over GF(p) the value is the
/// canonical representative in [0, p).
using Scalar = mpq_class;

enum class FieldKind { GF2, GFp, Rational };

/// The coefficient field of a matrix, matroid representation or polynomial.
struct FieldTag {
  FieldKind kind = FieldKind::GF2;
  std::uint32_t p = 2;  // 0 for the rationals

  static FieldTag gf2() { return {FieldKind::GF2, 2}; }
  /// Throws Errc::BadParams unless p is a prime below 2^31. gfp(2) is gf2().
  static FieldTag gfp(std::uint32_t p);
  static FieldTag rationals() { return {FieldKind::Rational, 0}; }

  /// Accepts "gf2", "gf<p>", "q", "Q", "rational".
  static FieldTag parse(std::string_view text);
  std::string name() const;

  std::uint32_t characteristic() const { return kind == FieldKind::Rational ? 0 : p; }
  bool is_rational() const { return kind == FieldKind::Rational; }

  Scalar normalize(const Scalar& a) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Parses "3", "-1", "2/3". Over GF(p) fractions are mapped through the
  /// inverse of the denominator.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

std::string format_scalar(const Scalar& a);

/// Native element operations used by the elimination kernels. Each ops type
/// exposes value_type plus zero/one/add/sub/mul/neg/inv/is_zero and
/// conversions from and to Scalar.
struct Gf2Ops {
  using value_type = std::uint8_t;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) { return a ^ b; }
  static value_type sub(value_type a, value_type b) { return a ^ b; }
  static value_type mul(value_type a, value_type b) { return a & b; }
  static value_type neg(value_type a) { return a; }
  static value_type inv(value_type a) { return a; }
  static bool is_zero(value_type a) { return a == 0; }
  static value_type from(const Scalar& s);
  static Scalar to(value_type a) { return Scalar(a); }
};

struct ModOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  value_type from(const Scalar& s) const;
  Scalar to(value_type a) const { return Scalar(a); }
};

struct RationalOps {
  using value_type = mpq_class;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type inv(const value_type& a) { return 1 / a; }
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type from(const Scalar& s) { return s; }
  static Scalar to(const value_type& a) { return a; }
};

/// Calls fn with the ops object matching the field.
template <class Fn>
decltype(auto) with_field_ops(const FieldTag& field, Fn&& fn) {
  switch (field.kind) {
    case FieldKind::GF2:
      return fn(Gf2Ops{});
    case FieldKind::GFp:
      return fn(ModOps{field.p});
    case FieldKind::Rational:
      break;
  }
  return fn(RationalOps{});
}

}  // namespace matroidlab
