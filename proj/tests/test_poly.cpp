#include <doctest.h>

#include <algorithm>
#include <random>

#include "matroidlab/error.hpp"
#include "matroidlab/groebner.hpp"
#include "matroidlab/polynomial.hpp"

using namespace matroidlab;

namespace {

Polynomial P(FieldTag f, std::size_t nv, const char* s) { return Polynomial::parse(f, nv, s); }
Monomial M(std::size_t nv, const char* s) { return Monomial::parse(nv, s); }

Ideal ideal(FieldTag f, std::size_t nv, std::vector<const char*> gens) {
  Ideal I{f, nv, {}};
  for (const char* g : gens) I.generators.push_back(P(f, nv, g));
  return I;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::BadParams;
}

// random homogeneous Artinian ideal: pure powers of every variable plus some
// mixed forms of the same degree
Ideal random_ideal(std::mt19937_64& rng, FieldTag f) {
  std::size_t nv = 2 + rng() % 2;
  unsigned d = 2 + rng() % 2;
  Ideal I{f, nv, {}};
  for (std::size_t v = 0; v < nv; ++v) I.generators.push_back(Polynomial::monomial(f, Monomial::variable(nv, v, d)));
  std::size_t extra = rng() % 3;
  for (std::size_t k = 0; k < extra; ++k) {
    Polynomial g(f, nv);
    for (std::size_t t = 0; t < 3; ++t) {
      Monomial m(nv);
      unsigned left = d;
      for (std::size_t v = 0; v + 1 < nv; ++v) {
        unsigned e = rng() % (left + 1);
        m.set_exponent(v, e);
        left -= e;
      }
      m.set_exponent(nv - 1, left);
      g = g + Polynomial::monomial(f, m, f.from_int(static_cast<long>(rng() % 5) - 2));
    }
    if (!g.is_zero()) I.generators.push_back(g);
  }
  return I;
}

std::vector<Monomial> all_monomials_up_to(std::size_t nv, unsigned deg) {
  std::vector<Monomial> out{Monomial(nv)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].degree() == deg) continue;
    for (std::size_t v = 0; v < nv; ++v) out.push_back(out[i] * Monomial::variable(nv, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("monomials") {
  Monomial m = M(3, "x1^2 x3");
  CHECK(m.exponents() == std::vector<std::uint16_t>{2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.to_string() == "x1^2 x3");
  CHECK(M(3, "x1*x2") == M(3, "x2 x1"));
  CHECK(Monomial(3).to_string() == "1");
  CHECK(M(3, "x1").divides(m));
  CHECK_FALSE(M(3, "x2").divides(m));
  CHECK(M(3, "x1").quotient_of(m) == M(3, "x1 x3"));
  CHECK(M(3, "x1^2").lcm(M(3, "x1 x2")) == M(3, "x1^2 x2"));
  CHECK(M(3, "x1").coprime(M(3, "x2 x3")));
  CHECK_THROWS_AS(Monomial::parse(2, "x3"), Error);
  CHECK_THROWS_AS(Monomial::parse(2, "y1"), Error);
}

TEST_CASE("grlex with x1 > x2 > x3") {
  std::vector<Monomial> v{M(3, "1"), M(3, "x3"), M(3, "x2"), M(3, "x1"), M(3, "x3^2"), M(3, "x2 x3"),
                          M(3, "x2^2"), M(3, "x1 x3"), M(3, "x1 x2"), M(3, "x1^2")};
  CHECK(std::is_sorted(v.begin(), v.end()));
  CHECK(M(3, "x3^2") > M(3, "x1"));
}

TEST_CASE("polynomial arithmetic") {
  FieldTag q = FieldTag::rationals();
  CHECK((P(q, 2, "x1 + x2") * P(q, 2, "x1 - x2")) == P(q, 2, "x1^2 - x2^2"));
  CHECK(P(q, 2, "x1 + x2") - P(q, 2, "x1 + x2") == Polynomial(q, 2));
  CHECK(P(q, 2, "2 x1 + 1/2 x2").monic() == P(q, 2, "x1 + 1/4 x2"));
  CHECK(P(q, 2, "x2 + x1^2").leading_monomial() == M(2, "x1^2"));
  CHECK_FALSE(P(q, 2, "x2 + x1^2").is_homogeneous());
  CHECK(P(q, 2, "x2 + x1^2").degree() == 2);
  CHECK(P(q, 2, "3 x1 x2 - x2").coefficient(M(2, "x1 x2")) == 3);
  FieldTag g2 = FieldTag::gf2();
  Polynomial s = P(g2, 2, "x1 + x2");
  CHECK(s * s == P(g2, 2, "x1^2 + x2^2"));
  CHECK(-s == s);
  FieldTag g3 = FieldTag::gfp(3);
  CHECK(P(g3, 1, "3 x1").is_zero());
  CHECK(P(g3, 1, "2 x1").scaled(Scalar(2)) == P(g3, 1, "x1"));
  CHECK(P(g3, 1, "-x1") == P(g3, 1, "2 x1"));
  CHECK_THROWS_AS(Polynomial::parse(q, 2, "x1 + + x2"), Error);
}

TEST_CASE("groebner basis of <x1 + x2, x2^2> over GF(2)") {
  Ideal I = ideal(FieldTag::gf2(), 2, {"x1 + x2", "x2^2"});
  auto gb = groebner_basis(I);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P(FieldTag::gf2(), 2, "x1 + x2"));
  CHECK(gb[1] == P(FieldTag::gf2(), 2, "x2^2"));
  auto sm = standard_monomials(gb, 2);
  CHECK(sm == std::vector<Monomial>{M(2, "1"), M(2, "x2")});
  auto qd = quotient_dimension(I);
  CHECK(qd.total == 2);
  CHECK(qd.by_degree == std::vector<std::size_t>{1, 1});
}

TEST_CASE("groebner basis over Q") {
  FieldTag q = FieldTag::rationals();
  // x2 x3 -> -x1^2 after substituting into U(2,3); the quotient is 1, x1
  Ideal I = ideal(q, 1, {"-x1^2"});
  CHECK(groebner_basis(I) == std::vector<Polynomial>{P(q, 1, "x1^2")});
  Ideal J = ideal(q, 2, {"x1^2 - x2^2", "x1 x2"});
  auto gb = groebner_basis(J);
  for (const auto& g : gb) CHECK(g.leading_coefficient() == 1);
  CHECK(quotient_dimension(J).total == 4);
  CHECK(standard_monomials(gb, 2) == std::vector<Monomial>{M(2, "1"), M(2, "x2"), M(2, "x1"), M(2, "x2^2")});
  CHECK(groebner_basis(ideal(q, 2, {"x1", "1"})) == std::vector<Polynomial>{P(q, 2, "1")});
}

TEST_CASE("normal forms") {
  FieldTag q = FieldTag::rationals();
  Ideal I = ideal(q, 3, {"x1^2 - x2 x3", "x2^2 - x1 x3", "x3^2"});
  auto gb = groebner_basis(I);
  for (const auto& g : I.generators) CHECK(normal_form(g, gb).is_zero());
  Polynomial f = P(q, 3, "x1^3 + 2 x1 x2 + x3 + 5");
  Polynomial nf = normal_form(f, gb);
  CHECK(normal_form(nf, gb) == nf);
  for (const auto& t : nf.terms())
    for (const auto& g : gb) CHECK_FALSE(g.leading_monomial().divides(t.mono));
  CHECK(normal_form(f * I.generators[1] + P(q, 3, "x3"), gb) == normal_form(P(q, 3, "x3"), gb));
  // reduced: no leading monomial divides a term of another element
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = 0; j < gb.size(); ++j)
      if (i != j)
        for (const auto& t : gb[j].terms()) CHECK_FALSE(gb[i].leading_monomial().divides(t.mono));
}

TEST_CASE("basis verdicts") {
  FieldTag q = FieldTag::rationals();
  Ideal I = ideal(q, 1, {"x1^2"});
  auto v = monomial_set_is_basis(I, {M(1, "1"), M(1, "x1^2")});
  CHECK(v.kind == BasisVerdictKind::NotIndependent);
  CHECK(v.witness == M(1, "x1^2"));
  CHECK(v.dimension == 2);
  v = monomial_set_is_basis(I, {M(1, "1")});
  CHECK(v.kind == BasisVerdictKind::NotSpanning);
  CHECK(v.witness == M(1, "x1"));
  v = monomial_set_is_basis(I, {M(1, "1"), M(1, "x1"), M(1, "x1^2")});
  CHECK(v.kind == BasisVerdictKind::WrongCardinality);
  v = monomial_set_is_basis(I, {M(1, "x1"), M(1, "1")}, BasisPath::Macaulay);
  CHECK(v.kind == BasisVerdictKind::Basis);
  CHECK(std::string(verdict_name(BasisVerdictKind::NotSpanning)) == "NotSpanning");
  // a non-monomial basis of the quotient
  Ideal J = ideal(q, 2, {"x1 + x2", "x2^2"});
  CHECK(monomial_set_is_basis(J, {M(2, "1"), M(2, "x1")}).kind == BasisVerdictKind::Basis);
  CHECK(monomial_set_is_basis(J, {M(2, "x1"), M(2, "x2")}).kind == BasisVerdictKind::NotIndependent);
}

TEST_CASE("errors") {
  FieldTag q = FieldTag::rationals();
  CHECK(code_of([&] { monomial_set_is_basis(ideal(q, 1, {"x1^2 + x1"}), {M(1, "1")}, BasisPath::Macaulay); }) ==
        Errc::NotHomogeneous);
  CHECK(code_of([&] { standard_monomials(groebner_basis(ideal(q, 2, {"x1"})), 2); }) == Errc::NotArtinian);
  CHECK(code_of([&] { monomial_set_is_basis(ideal(q, 2, {"x1^2"}), {M(2, "1")}, BasisPath::Macaulay); }) ==
        Errc::NotArtinian);
  CHECK(code_of([&] { FieldTag::gfp(4); }) == Errc::BadParams);
}

TEST_CASE("groebner and macaulay agree on random ideals") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 60; ++k) {
    FieldTag f = k % 3 == 0 ? FieldTag::gf2() : (k % 3 == 1 ? FieldTag::gfp(5) : FieldTag::rationals());
    Ideal I = random_ideal(rng, f);
    auto gb = groebner_basis(I);
    auto sm = standard_monomials(gb, I.nvars);
    auto qd = quotient_dimension(I);
    CHECK(qd.total == sm.size());
    CHECK(monomial_set_is_basis(I, sm).kind == BasisVerdictKind::Basis);
    CHECK(monomial_set_is_basis(I, sm, BasisPath::Macaulay).kind == BasisVerdictKind::Basis);
    auto pool = all_monomials_up_to(I.nvars, 4);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Monomial> s(pool.begin(), pool.begin() + std::min<std::size_t>(pool.size(), qd.total - (t % 2)));
      CHECK(monomial_set_is_basis(I, s) == monomial_set_is_basis(I, s, BasisPath::Macaulay));
    }
  }
}
