#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "matroidlab/bc_complex.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/search.hpp"

using namespace matroidlab;
using testing_helpers::labels_of;

namespace {

Monomial M(std::size_t nv, const char* s) { return Monomial::parse(nv, s); }

std::vector<StandardOrdering> some_orderings(const Matroid& m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t total = standard_ordering_count(m);
  std::vector<StandardOrdering> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(standard_ordering_at(m, rng() % total));
  return out;
}

}  // namespace

TEST_CASE("U(2,3) step by step") {
  Matroid u = Matroid::uniform(2, 3);
  auto so = StandardOrdering::make(u, Ordering::natural(3));
  FieldTag q = FieldTag::rationals();
  ThetaSystem theta = lsop(u, so, q);
  REQUIRE(theta.forms.size() == 2);
  CHECK(theta.forms[0] == Polynomial::parse(q, 3, "-x1 + x2"));
  CHECK(theta.forms[1] == Polynomial::parse(q, 3, "x1 + x3"));
  LsopValidation lv = validate_lsop(u, theta);
  CHECK(lv.facets_full_rank);
  CHECK(lv.represents_matroid);
  CHECK(lv.facets_checked == 2);

  Ideal sr = stanley_reisner_ideal(u, so.ordering);
  REQUIRE(sr.generators.size() == 1);
  CHECK(sr.generators[0] == Polynomial::parse(q, 3, "x2 x3"));
  Ideal sub = substitute_basis_variables(sr, theta);
  CHECK(sub.nvars == 1);
  REQUIRE(sub.generators.size() == 1);
  CHECK(sub.generators[0] == Polynomial::parse(q, 1, "-x1^2"));

  MonomialData data = dj_and_mc(u, so);
  CHECK(data.d[1] == 1);
  CHECK(data.d[2] == 1);
  REQUIRE(data.circuits.size() == 1);
  CHECK(data.circuits[0].fundamental);
  CHECK(data.circuits[0].m == M(1, "x1^2"));
  auto p = circuit_polynomials(u, theta, data);
  CHECK(leading_terms_present(data, p));

  OrderIdeals oi = order_ideals(u, so);
  CHECK(oi.upper_generators == std::vector<Monomial>{M(1, "x1^2")});
  CHECK(oi.lower == std::vector<Monomial>{M(1, "1"), M(1, "x1")});

  NbcReport r = nbc_check(u, so, q);
  CHECK(r.basis);
  CHECK(r.h == std::vector<std::int64_t>{1, 1, 0});
  CHECK(r.h_sum == 2);
  CHECK(r.quotient_dim == 2);
  CHECK(r.lower_size == 2);
}

TEST_CASE("corank one uniform matroids") {
  for (std::size_t n = 2; n <= 7; ++n) {
    Matroid u = corank_one_uniform(labels_of(n));
    auto so = StandardOrdering::make(u, Ordering::natural(n));
    MonomialData data = dj_and_mc(u, so);
    REQUIRE(data.circuits.size() == 1);
    Monomial want = Monomial::variable(1, 0, static_cast<unsigned>(n - 1));
    CHECK(data.circuits[0].m == want);
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
      NbcReport r = nbc_check(u, so, f);
      CHECK(r.basis);
      CHECK(r.lower_size == n - 1);
    }
  }
}

TEST_CASE("leading terms and lsop validation on fixtures") {
  for (const char* name : {"K4", "DualK33", "R10", "K33"}) {
    Matroid m = named_matroid(name).matroid;
    for (const auto& so : some_orderings(m, 4, 51)) {
      for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
        ThetaSystem theta = lsop(m, so, f);
        LsopValidation lv = validate_lsop(m, theta);
        CHECK(lv.facets_full_rank);
        CHECK(lv.represents_matroid);
        MonomialData data = dj_and_mc(m, so);
        CHECK(data.circuits.size() == m.circuits().size());
        for (std::size_t i = 0; i < m.size() - m.rank(); ++i) CHECK(data.circuits[i].fundamental);
        CHECK(leading_terms_present(data, circuit_polynomials(m, theta, data)));
      }
    }
  }
}

TEST_CASE("lower sets are order ideals") {
  CHECK(is_lower_ideal({M(2, "1"), M(2, "x1"), M(2, "x2"), M(2, "x1 x2")}));
  CHECK_FALSE(is_lower_ideal({M(2, "1"), M(2, "x1 x2")}));
  CHECK_FALSE(is_lower_ideal({M(2, "x1")}));
  for (const char* name : {"K4", "DualK33", "R10"}) {
    Matroid m = named_matroid(name).matroid;
    for (const auto& so : some_orderings(m, 5, 52)) {
      OrderIdeals oi = order_ideals(m, so);
      CHECK(is_lower_ideal(oi.lower));
      for (const auto& l : oi.lower)
        for (const auto& u : oi.upper_generators) CHECK_FALSE(u.divides(l));
    }
  }
}

TEST_CASE("an order ideal with no pure power is infinite") {
  MonomialData data;
  data.circuits.push_back({ElementSet{}, ElementSet{}, true, M(2, "x1 x2")});
  data.circuits.push_back({ElementSet{}, ElementSet{}, true, M(2, "x1^3")});
  try {
    order_ideals(data, 2);
    FAIL("expected InfiniteLowerIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteLowerIdeal);
  }
}

TEST_CASE("report consistency") {
  for (const char* name : {"K4", "DualK33", "R10", "K33"}) {
    Matroid m = named_matroid(name).matroid;
    FhVectors fh = f_h_vectors(m, Ordering::natural(m.size()));
    for (const auto& so : some_orderings(m, 6, 53)) {
      NbcReport g = nbc_check(m, so, FieldTag::gf2());
      NbcReport q = nbc_check(m, so, FieldTag::rationals(), {BasisPath::Macaulay, true});
      for (const NbcReport* r : {&g, &q}) {
        CHECK(r->h == fh.h);
        CHECK(r->quotient_dim == static_cast<std::size_t>(r->h_sum));
        CHECK(r->basis == (r->cardinality_ok && r->independent));
        CHECK(r->lower.size() == r->lower_size);
        CHECK(r->basis == (r->verdict == BasisVerdictKind::Basis));
      }
      CHECK(g.lower == q.lower);
      NbcReport gm = nbc_check(m, so, FieldTag::gf2(), {BasisPath::Macaulay, true});
      CHECK(gm.verdict == g.verdict);
      CHECK(gm.witness == g.witness);
    }
  }
}

TEST_CASE("known outcomes") {
  Matroid k4 = named_matroid("K4").matroid;
  for (const auto& so : some_orderings(k4, 20, 54)) CHECK(nbc_check(k4, so, FieldTag::gf2()).basis);
  NamedMatroid d = named_matroid("DualK33");
  auto so = StandardOrdering::make(d.matroid, *d.ordering);
  NbcReport r = nbc_check(d.matroid, so, FieldTag::gf2());
  CHECK(r.basis);
  CHECK(r.lower_size == 20);
  Matroid r10 = named_matroid("R10").matroid;
  for (const auto& s : some_orderings(r10, 10, 55)) CHECK_FALSE(nbc_check(r10, s, FieldTag::gf2()).basis);
}

TEST_CASE("direct sums multiply") {
  Matroid t1 = Matroid::from_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}}, {"x1", "x2", "x3"});
  Matroid t2 = corank_one_uniform({"y1", "y2", "y3", "y4"});
  Matroid s = direct_sum(t1, t2);
  auto so = StandardOrdering::make(s, Ordering({0, 3, 1, 4, 5, 2, 6}));
  NbcReport r = nbc_check(s, so, FieldTag::gf2());
  CHECK(r.components == 2);
  CHECK(r.lower_size == 2 * 3);
  CHECK(r.h_sum == 6);
  CHECK(r.basis);
  Matroid c = direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1, {"c"}));
  auto so2 = StandardOrdering::make(c, Ordering::natural(4));
  NbcReport rc = nbc_check(c, so2, FieldTag::rationals());
  CHECK(rc.basis);
  CHECK(rc.lower_size == 2);
  Matroid free = Matroid::uniform(3, 3);
  NbcReport rf = nbc_check(free, StandardOrdering::make(free, Ordering::natural(3)), FieldTag::gf2());
  CHECK(rf.basis);
  CHECK(rf.lower_size == 1);
}

TEST_CASE("decomposition") {
  Matroid u = Matroid::uniform(2, 3);
  auto so = StandardOrdering::make(u, Ordering::natural(3));
  CHECK(has_cocircuit_pair(u, so));
  DecompositionReport d = decomposition_check(u, so, FieldTag::gf2());
  CHECK(d.holds());
  CHECK(d.lower == 2);
  CHECK(d.lower_deletion + d.lower_contraction == 2);
  auto t = theta_matroid({3, 4});
  auto tso = t.ordering;
  REQUIRE(has_cocircuit_pair(t.matroid, tso));
  CHECK(decomposition_check(t.matroid, tso, FieldTag::gf2()).holds());
  CHECK(decomposition_check(t.matroid, tso, FieldTag::rationals()).holds());
  Matroid r10 = named_matroid("R10").matroid;
  auto rso = standard_ordering_at(r10, 0);
  CHECK_FALSE(has_cocircuit_pair(r10, rso));
  try {
    decomposition_check(r10, rso, FieldTag::gf2());
    FAIL("expected NoCocircuitPair");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoCocircuitPair);
  }
}

TEST_CASE("bad fields") {
  Matroid fano = named_matroid("Fano").matroid;
  auto so = standard_ordering_at(fano, 0);
  CHECK_THROWS_AS(nbc_check(fano, so, FieldTag::rationals()), Error);
  CHECK_NOTHROW(nbc_check(fano, so, FieldTag::gf2()));
}
