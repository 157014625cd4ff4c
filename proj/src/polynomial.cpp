#include "matroidlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "matroidlab/error.hpp"

namespace matroidlab {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exp_(std::move(exps)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  if (i >= nvars) throw Error(Errc::BadParams, "variable index out of range");
  Monomial m(nvars);
  m.exp_[i] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] = std::max(exp_[i], o.exp_[i]);
  return out;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial out(o);
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] = static_cast<std::uint16_t>(o.exp_[i] - exp_[i]);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < a.exp_.size(); ++i) out.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.exp_.size() && i < b.exp_.size(); ++i)
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
  return a.exp_.size() <=> b.exp_.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(i + 1);
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(std::size_t nvars, std::string_view text) {
  Monomial m(nvars);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  auto number = [&]() -> unsigned long {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(Errc::Parse, "expected a number in monomial '" + std::string(text) + "'");
    return std::stoul(std::string(text.substr(start, i - start)));
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw Error(Errc::Parse, "bad monomial '" + std::string(text) + "'");
    return m;
  }
  while (i < text.size()) {
    if (text[i] != 'x') throw Error(Errc::Parse, "bad monomial '" + std::string(text) + "'");
    ++i;
    unsigned long var = number();
    if (var == 0 || var > nvars) throw Error(Errc::Parse, "variable x" + std::to_string(var) + " out of range");
    unsigned long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = number();
    }
    m.exp_[var - 1] = static_cast<std::uint16_t>(m.exp_[var - 1] + power);
    skip();
  }
  return m;
}

Polynomial Polynomial::constant(FieldTag field, std::size_t nvars, const Scalar& c) {
  return monomial(field, Monomial(nvars), c);
}

Polynomial Polynomial::monomial(FieldTag field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, m.nvars());
  Scalar v = field.normalize(c);
  if (sgn(v) != 0) p.terms_.push_back({m, v});
  return p;
}

Polynomial Polynomial::variable(FieldTag field, std::size_t nvars, std::size_t i) {
  return monomial(field, Monomial::variable(nvars, i));
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field_.add(out.back().coef, t.coef);
    } else {
      out.push_back(std::move(t));
    }
    if (sgn(out.back().coef) == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == degree(); });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Scalar(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out(field_, nvars_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = field_.add(terms_[i].coef, o.terms_[j].coef);
      if (sgn(c) != 0) out.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coef = field_.neg(t.coef);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(field_, nvars_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.terms_.push_back({a.mono * b.mono, field_.mul(a.coef, b.coef)});
  out.canonicalize();
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(field_, nvars_);
  Scalar v = field_.normalize(c);
  if (sgn(v) == 0) return out;
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.mul(t.coef, v)});
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial out(field_, nvars_);
  Scalar v = field_.normalize(c);
  if (sgn(v) == 0) return out;
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, field_.mul(t.coef, v)});
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(leading_coefficient()));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = false;
    if (field_.is_rational()) {
      negative = sgn(c) < 0;
    } else if (field_.p > 2 && c > Scalar(field_.p / 2)) {
      negative = true;
      c = Scalar(field_.p) - c;
    }
    if (negative && field_.is_rational()) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit = c == 1;
    if (!unit || t.mono.is_one()) out += format_scalar(c);
    if (!t.mono.is_one()) {
      if (!unit) out += " ";
      out += t.mono.to_string();
    }
  }
  return out;
}

Polynomial Polynomial::parse(FieldTag field, std::size_t nvars, std::string_view text) {
  Polynomial out(field, nvars);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "0") return out;
  while (i < text.size()) {
    bool negative = false;
    skip_ws();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term(text.substr(start, i - start));
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw Error(Errc::Parse, "empty term in '" + std::string(text) + "'");
    std::size_t k = 0;
    while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
    Scalar c(1);
    std::string mono = term;
    if (k > 0) {
      c = field.parse_scalar(term.substr(0, k));
      mono = term.substr(k);
    }
    bool has_var = mono.find('x') != std::string::npos;
    Monomial m = has_var ? Monomial::parse(nvars, mono) : Monomial(nvars);
    if (!has_var && mono.find_first_not_of(" *") != std::string::npos) {
      throw Error(Errc::Parse, "bad term '" + term + "'");
    }
    if (negative) c = -c;
    out.terms_.push_back({m, field.normalize(c)});
  }
  out.canonicalize();
  return out;
}

}  // namespace matroidlab
