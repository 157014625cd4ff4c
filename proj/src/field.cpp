#include "matroidlab/field.hpp"

#include <cctype>
#include <stdexcept>

#include "matroidlab/error.hpp"

namespace matroidlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::Overbudget: return "Overbudget";
    case Errc::DuplicateLabels: return "DuplicateLabels";
    case Errc::BadRank: return "BadRank";
    case Errc::NotCobasisElement: return "NotCobasisElement";
    case Errc::NotBasisElement: return "NotBasisElement";
    case Errc::BadOverlap: return "BadOverlap";
    case Errc::NotRegular: return "NotRegular";
    case Errc::BadSize: return "BadSize";
    case Errc::DegenerateElement: return "DegenerateElement";
    case Errc::UnsolvableTheta: return "UnsolvableTheta";
    case Errc::NotArtinian: return "NotArtinian";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::InfiniteLowerIdeal: return "InfiniteLowerIdeal";
    case Errc::NoCocircuitPair: return "NoCocircuitPair";
    case Errc::BadParams: return "BadParams";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotStandard: return "NotStandard";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t scalar_mod(const Scalar& s, std::uint32_t p) {
  std::uint32_t num = mod_of(s.get_num(), p);
  std::uint32_t den = mod_of(s.get_den(), p);
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  return static_cast<std::uint32_t>(std::uint64_t{num} * pow_mod(den, p - 2, p) % p);
}

}  // namespace

FieldTag FieldTag::gfp(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(Errc::BadParams, "GF(p) needs a prime p below 2^31, got " + std::to_string(p));
  }
  if (p == 2) return gf2();
  return {FieldKind::GFp, p};
}

FieldTag FieldTag::parse(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q" || s == "rational" || s == "rationals" || s == "qq") return rationals();
  if (s.size() > 2 && s.rfind("gf", 0) == 0) {
    std::uint32_t p = 0;
    for (char c : s.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(Errc::Parse, "bad field name '" + std::string(text) + "'");
      }
      p = p * 10 + static_cast<std::uint32_t>(c - '0');
      if (p >= (1u << 31)) throw Error(Errc::BadParams, "field characteristic too large");
    }
    return gfp(p);
  }
  throw Error(Errc::Parse, "bad field name '" + std::string(text) + "'");
}

std::string FieldTag::name() const {
  if (kind == FieldKind::Rational) return "q";
  return "gf" + std::to_string(p);
}

Scalar FieldTag::normalize(const Scalar& a) const {
  if (kind == FieldKind::Rational) return a;
  return Scalar(scalar_mod(a, p));
}

Scalar FieldTag::inv(const Scalar& a) const {
  Scalar n = normalize(a);
  if (sgn(n) == 0) throw std::domain_error("inverse of zero");
  if (kind == FieldKind::Rational) return 1 / n;
  return Scalar(pow_mod(static_cast<std::uint32_t>(n.get_num().get_ui()), p - 2, p));
}

Scalar FieldTag::parse_scalar(std::string_view text) const {
  Scalar v;
  std::string s(text);
  if (s.empty()) throw Error(Errc::Parse, "empty scalar");
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      throw Error(Errc::Parse, "bad scalar '" + std::string(text) + "'");
    }
  }
  if (v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw Error(Errc::Parse, "bad scalar '" + std::string(text) + "'");
  }
  v.canonicalize();
  return normalize(v);
}

std::string format_scalar(const Scalar& a) { return a.get_str(); }

Gf2Ops::value_type Gf2Ops::from(const Scalar& s) {
  return static_cast<value_type>(scalar_mod(s, 2));
}

ModOps::value_type ModOps::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow_mod(a, p - 2, p);
}

ModOps::value_type ModOps::from(const Scalar& s) const { return scalar_mod(s, p); }

}  // namespace matroidlab
