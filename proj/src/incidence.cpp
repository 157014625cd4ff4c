#include "matroidlab/incidence.hpp"

#include <algorithm>

#include "matroidlab/echelon.hpp"
#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

std::vector<std::string> row_labels(const Matroid& m, const std::vector<ElementSet>& supports, const char* tag) {
  std::vector<std::string> out;
  for (ElementSet s : supports) out.push_back(tag + m.format(s));
  return out;
}

std::vector<std::size_t> columns_of(const Ordering& ord, ElementSet s) {
  std::vector<std::size_t> cols;
  s.for_each([&](std::size_t e) { cols.push_back(ord.position_of(e)); });
  std::sort(cols.begin(), cols.end());
  return cols;
}

// Scales v so that its first nonzero entry is 1.
void normalize_row(std::vector<Scalar>& v, const FieldTag& f) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      Scalar inv = f.inv(x);
      for (auto& y : v) y = f.mul(y, inv);
      return;
    }
  }
}

ElementSet support_of(const Matrix& a, std::size_t row, const Ordering& ord) {
  ElementSet s;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (sgn(a.at(row, c)) != 0) s = s.with(ord.element_at(c));
  return s;
}

Matrix cocircuit_block(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  const std::size_t n = m.size(), r = m.rank();
  const Ordering& ord = so.ordering;
  Matrix out(r, n, field);
  if (field.characteristic() == 2) {
    if (!m.is_binary()) throw Error(Errc::NotRegular, "not binary, so there is no GF(2) representation");
    for (std::size_t i = 0; i < r; ++i) {
      ElementSet coc = m.fundamental_cocircuit(so.basis, ord.element_at(n - r + i));
      coc.for_each([&](std::size_t e) { out.set(i, ord.position_of(e), Scalar(1)); });
    }
    return out;
  }
  auto rep = m.signed_representation();
  if (!rep) throw Error(Errc::NotRegular, "no totally unimodular representation; signing needs a regular matroid");
  Matrix reordered = rep->select_columns(ord.order());
  std::vector<std::size_t> basis_cols;
  for (std::size_t k = n - r; k < n; ++k) basis_cols.push_back(k);
  Matrix sf = standard_form(reordered, basis_cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) out.set(i, c, sf.at(i, c));
  return out;
}

}  // namespace

IncidencePair fundamental_matrices(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  const std::size_t n = m.size(), r = m.rank();
  const Ordering& ord = so.ordering;
  IncidencePair out;
  auto& coc = out.cocircuits;
  coc.kind = IncidenceKind::Cocircuit;
  coc.basis = so.basis;
  coc.ordering = ord;
  coc.matrix = cocircuit_block(m, so, field);
  for (std::size_t i = 0; i < r; ++i) {
    ElementSet expected = m.fundamental_cocircuit(so.basis, ord.element_at(n - r + i));
    if (support_of(coc.matrix, i, ord) != expected) {
      throw Error(Errc::NotRegular, "signed cocircuit row does not match " + m.format(expected));
    }
    coc.supports.push_back(expected);
  }
  coc.matrix.set_row_labels(row_labels(m, coc.supports, "C*:"));
  coc.matrix.set_col_labels(ord.labels(m));

  auto& cir = out.circuits;
  cir.kind = IncidenceKind::Circuit;
  cir.basis = so.basis;
  cir.ordering = ord;
  cir.matrix = Matrix(n - r, n, field);
  for (std::size_t i = 0; i < n - r; ++i) {
    cir.matrix.set(i, i, Scalar(1));
    for (std::size_t k = 0; k < r; ++k) cir.matrix.set(i, n - r + k, field.neg(coc.matrix.at(k, i)));
    cir.supports.push_back(m.fundamental_circuit(so.basis, ord.element_at(i)));
  }
  cir.matrix.set_row_labels(row_labels(m, cir.supports, "C:"));
  cir.matrix.set_col_labels(ord.labels(m));
  return out;
}

SignedIncidenceMatrix full_cocircuit_matrix(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  const std::size_t n = m.size();
  IncidencePair fund = fundamental_matrices(m, so, field);
  const Matrix& f = fund.cocircuits.matrix;
  SignedIncidenceMatrix out;
  out.kind = IncidenceKind::Cocircuit;
  out.fundamental = false;
  out.basis = so.basis;
  out.ordering = so.ordering;
  out.supports = fund.cocircuits.supports;
  for (ElementSet c : m.cocircuits())
    if (std::find(out.supports.begin(), out.supports.end(), c) == out.supports.end()) out.supports.push_back(c);
  out.matrix = Matrix(out.supports.size(), n, field);
  for (std::size_t i = 0; i < out.supports.size(); ++i) {
    std::vector<std::size_t> outside = columns_of(so.ordering, m.ground_set() - out.supports[i]);
    // x with (x F)_c = 0 off the support
    Matrix sys = f.select_columns(outside).transpose();
    Matrix ker = null_space_basis(sys);
    if (ker.rows() != 1) throw Error(Errc::NotRegular, "cocircuit " + m.format(out.supports[i]) + " has no unique vector");
    std::vector<Scalar> v(n, Scalar(0));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < f.rows(); ++k) v[c] = field.add(v[c], field.mul(ker.at(0, k), f.at(k, c)));
    normalize_row(v, field);
    for (std::size_t c = 0; c < n; ++c) out.matrix.set(i, c, v[c]);
  }
  out.matrix.set_row_labels(row_labels(m, out.supports, "C*:"));
  out.matrix.set_col_labels(so.ordering.labels(m));
  return out;
}

SignedIncidenceMatrix full_circuit_matrix(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  const std::size_t n = m.size();
  IncidencePair fund = fundamental_matrices(m, so, field);
  const Matrix& f = fund.cocircuits.matrix;
  SignedIncidenceMatrix out;
  out.kind = IncidenceKind::Circuit;
  out.fundamental = false;
  out.basis = so.basis;
  out.ordering = so.ordering;
  out.supports = fund.circuits.supports;
  for (ElementSet c : m.circuits())
    if (std::find(out.supports.begin(), out.supports.end(), c) == out.supports.end()) out.supports.push_back(c);
  out.matrix = Matrix(out.supports.size(), n, field);
  for (std::size_t i = 0; i < out.supports.size(); ++i) {
    std::vector<std::size_t> cols = columns_of(so.ordering, out.supports[i]);
    Matrix ker = null_space_basis(f.select_columns(cols));
    if (ker.rows() != 1) throw Error(Errc::NotRegular, "circuit " + m.format(out.supports[i]) + " has no unique vector");
    std::vector<Scalar> v(n, Scalar(0));
    for (std::size_t k = 0; k < cols.size(); ++k) v[cols[k]] = ker.at(0, k);
    normalize_row(v, field);
    for (std::size_t c = 0; c < n; ++c) out.matrix.set(i, c, v[c]);
  }
  out.matrix.set_row_labels(row_labels(m, out.supports, "C:"));
  out.matrix.set_col_labels(so.ordering.labels(m));
  return out;
}

RankReport check_rank_identities(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  RankReport rep;
  rep.n = m.size();
  rep.r = m.rank();
  IncidencePair fund = fundamental_matrices(m, so, field);
  SignedIncidenceMatrix cir = full_circuit_matrix(m, so, field);
  SignedIncidenceMatrix coc = full_cocircuit_matrix(m, so, field);
  rep.fundamental_circuit = rank(fund.circuits.matrix);
  rep.fundamental_cocircuit = rank(fund.cocircuits.matrix);
  rep.full_circuit = rank(cir.matrix);
  rep.full_cocircuit = rank(coc.matrix);
  for (std::size_t i = 0; i < cir.supports.size(); ++i)
    rep.supports_match = rep.supports_match && support_of(cir.matrix, i, so.ordering) == cir.supports[i];
  for (std::size_t i = 0; i < coc.supports.size(); ++i)
    rep.supports_match = rep.supports_match && support_of(coc.matrix, i, so.ordering) == coc.supports[i];
  rep.orthogonal = true;
  for (std::size_t i = 0; i < cir.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < coc.matrix.rows(); ++j) {
      Scalar dot(0);
      for (std::size_t c = 0; c < rep.n; ++c) dot = field.add(dot, field.mul(cir.matrix.at(i, c), coc.matrix.at(j, c)));
      if (sgn(dot) != 0) rep.orthogonal = false;
      if ((cir.supports[i] & coc.supports[j]).size() % 2 != 0) rep.even_overlaps = false;
    }
  }
  const std::size_t nr = rep.n - rep.r;
  rep.pass = rep.fundamental_circuit == nr && rep.full_circuit == nr && rep.fundamental_cocircuit == rep.r &&
             rep.full_cocircuit == rep.r && rep.orthogonal && rep.even_overlaps && rep.supports_match;
  return rep;
}

bool check_basis_nonsingular(const Matroid& m, const SignedIncidenceMatrix& coc, ElementSet s) {
  const std::size_t r = m.rank();
  if (s.size() != r) throw Error(Errc::BadSize, "need " + std::to_string(r) + " elements, got " + std::to_string(s.size()));
  const Matrix& a = coc.matrix;
  // pick r independent rows
  std::vector<std::size_t> rows = with_field_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Echelon<Ops> ech(ops, a.cols());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < a.rows() && keep.size() < r; ++i) {
      typename Echelon<Ops>::Row v;
      for (std::size_t c = 0; c < a.cols(); ++c) v.push_back(ops.from(a.at(i, c)));
      if (ech.insert(std::move(v))) keep.push_back(i);
    }
    return keep;
  });
  if (rows.size() != r) throw Error(Errc::BadParams, "cocircuit matrix does not have full rank");
  Matrix sub = a.select_rows(rows).select_columns(columns_of(coc.ordering, s));
  return rank(sub) == r;
}

}  // namespace matroidlab
