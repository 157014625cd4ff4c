#include <doctest.h>

#include "helpers.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/incidence.hpp"

using namespace matroidlab;
using testing_helpers::standard_for;

TEST_CASE("U(2,3) over Q") {
  Matroid u = Matroid::uniform(2, 3);
  auto so = StandardOrdering::make(u, Ordering::natural(3));
  IncidencePair p = fundamental_matrices(u, so, FieldTag::rationals());
  CHECK(testing_helpers::same_entries(p.cocircuits.matrix, Matrix::from_rows({{-1, 1, 0}, {1, 0, 1}}, FieldTag::rationals())));
  CHECK(p.circuits.matrix.rows() == 1);
  // circuit row is orthogonal to both cocircuit rows
  CHECK(p.cocircuits.matrix.multiply(p.circuits.matrix.transpose()).is_zero());
  CHECK(p.circuits.supports[0] == u.ground_set());
}

TEST_CASE("rank identities on every basis of K4") {
  Matroid k4 = named_matroid("K4").matroid;
  for (ElementSet b : k4.bases()) {
    auto so = standard_for(k4, b);
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals(), FieldTag::gfp(3)}) {
      RankReport r = check_rank_identities(k4, so, f);
      CHECK(r.pass);
      CHECK(r.fundamental_cocircuit == 3);
      CHECK(r.full_cocircuit == 3);
      CHECK(r.fundamental_circuit == 3);
      CHECK(r.full_circuit == 3);
      CHECK(r.orthogonal);
      CHECK(r.supports_match);
    }
  }
}

TEST_CASE("rank identities on the larger fixtures") {
  for (const char* name : {"R10", "DualK33", "K33"}) {
    Matroid m = named_matroid(name).matroid;
    auto so = standard_for(m, m.bases().front());
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
      RankReport r = check_rank_identities(m, so, f);
      CHECK(r.pass);
      CHECK(r.full_cocircuit == m.rank());
      CHECK(r.full_circuit == m.size() - m.rank());
    }
  }
}

TEST_CASE("full matrices list every (co)circuit with fundamental rows first") {
  Matroid m = named_matroid("K4").matroid;
  auto so = standard_for(m, m.bases()[3]);
  auto coc = full_cocircuit_matrix(m, so, FieldTag::rationals());
  auto cir = full_circuit_matrix(m, so, FieldTag::rationals());
  CHECK(coc.supports.size() == m.cocircuits().size());
  CHECK(cir.supports.size() == m.circuits().size());
  CHECK(coc.matrix.multiply(cir.matrix.transpose()).is_zero());
  auto fund = fundamental_matrices(m, so, FieldTag::rationals());
  for (std::size_t i = 0; i < fund.cocircuits.supports.size(); ++i) CHECK(coc.supports[i] == fund.cocircuits.supports[i]);
  for (std::size_t i = 0; i < coc.matrix.rows(); ++i)
    for (std::size_t j = 0; j < coc.matrix.cols(); ++j) {
      const Scalar& a = coc.matrix.at(i, j);
      CHECK((a == 0 || a == 1 || a == -1));
      CHECK((a != 0) == coc.supports[i].contains(so.ordering.element_at(j)));
    }
}

TEST_CASE("supports of the fundamental rows") {
  Matroid m = named_matroid("R10").matroid;
  auto so = standard_for(m, m.bases()[17]);
  auto p = fundamental_matrices(m, so, FieldTag::gf2());
  const std::size_t n = m.size(), r = m.rank();
  for (std::size_t i = 0; i < n - r; ++i)
    CHECK(p.circuits.supports[i] == m.fundamental_circuit(so.basis, so.ordering.element_at(i)));
  for (std::size_t i = 0; i < r; ++i)
    CHECK(p.cocircuits.supports[i] == m.fundamental_cocircuit(so.basis, so.ordering.element_at(n - r + i)));
}

TEST_CASE("r-subsets are bases exactly when the cocircuit columns are nonsingular") {
  for (const char* name : {"K4", "DualK33"}) {
    Matroid m = named_matroid(name).matroid;
    auto so = standard_for(m, m.bases().back());
    auto coc = fundamental_matrices(m, so, FieldTag::rationals()).cocircuits;
    for_each_k_subset(m.size(), m.rank(), [&](ElementSet s) {
      CHECK(check_basis_nonsingular(m, coc, s) == m.is_basis(s));
      return true;
    });
    CHECK_THROWS_AS(check_basis_nonsingular(m, coc, ElementSet::single(0)), Error);
  }
}

TEST_CASE("non-regular matroids") {
  Matroid fano = named_matroid("Fano").matroid;
  auto so = standard_for(fano, fano.bases().front());
  CHECK_NOTHROW(fundamental_matrices(fano, so, FieldTag::gf2()));
  CHECK(check_rank_identities(fano, so, FieldTag::gf2()).pass);
  CHECK_THROWS_AS(fundamental_matrices(fano, so, FieldTag::rationals()), Error);
  Matroid u24 = Matroid::uniform(2, 4);
  auto so2 = standard_for(u24, u24.bases().front());
  CHECK_THROWS_AS(fundamental_matrices(u24, so2, FieldTag::gf2()), Error);
  try {
    fundamental_matrices(u24, so2, FieldTag::gf2());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRegular);
  }
}

TEST_CASE("degenerate inputs") {
  Matroid free = Matroid::uniform(3, 3);
  auto so = StandardOrdering::make(free, Ordering::natural(3));
  auto p = fundamental_matrices(free, so, FieldTag::rationals());
  CHECK(p.circuits.matrix.rows() == 0);
  CHECK(testing_helpers::same_entries(p.cocircuits.matrix, Matrix::identity(3, FieldTag::rationals())));
  CHECK(check_rank_identities(free, so, FieldTag::gf2()).pass);
  Matroid loop = Matroid::from_matrix(Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}, FieldTag::gf2()));
  CHECK_THROWS_AS(StandardOrdering::make(loop, Ordering::natural(3)), Error);
  CHECK_NOTHROW(StandardOrdering::make(loop, Ordering({2, 0, 1})));
}
