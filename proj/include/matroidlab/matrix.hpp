#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/field.hpp"

namespace matroidlab {

/// Dense matrix over a FieldTag with optional row and column labels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldTag field);

  static Matrix from_rows(const std::vector<std::vector<long>>& rows, FieldTag field,
                          std::size_t cols_if_empty = 0);
  static Matrix identity(std::size_t n, FieldTag field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldTag& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.normalize(v); }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  /// Throws Errc::DuplicateLabels for repeated column labels, Errc::BadSize on
  /// a length mismatch. An empty vector clears the labels.
  void set_col_labels(std::vector<std::string> labels);
  void set_row_labels(std::vector<std::string> labels);

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  /// Rows of *this followed by rows of `below`; column counts must agree.
  Matrix stack(const Matrix& below) const;
  Matrix multiply(const Matrix& rhs) const;
  /// Same integer/rational entries read in another field.
  Matrix over(FieldTag field) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldTag field_ = FieldTag::gf2();
  std::vector<Scalar> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

std::size_t rank(const Matrix& m);

/// Row-equivalent matrix (zero rows dropped) whose restriction to the basis
/// columns, taken in ascending order, is the identity. Throws
/// Errc::SingularBasis if the columns are dependent and Errc::BadSize if
/// their count differs from the rank.
Matrix standard_form(const Matrix& m, std::span<const std::size_t> basis_cols);

/// Rows span {v : m v^T = 0}; one row per non-pivot column of the RREF.
Matrix null_space_basis(const Matrix& m);

struct TuOptions {
  std::optional<std::size_t> max_order;  // defaults to min(rows, cols)
  std::uint64_t submatrix_cap = 20'000'000;
};

/// Brute-force determinant check of every square submatrix up to max_order.
/// Entries are read as integers, with p-1 read as -1 over GF(p). Throws
/// Errc::Overbudget past the submatrix cap, Errc::BadParams for entries
/// outside {-1, 0, 1}.
bool is_totally_unimodular(const Matrix& m, const TuOptions& options = {});

/// Integer view of a matrix entry: GF(p) values above p/2 become negative.
long signed_entry(const Matrix& m, std::size_t r, std::size_t c);

/// Text format: "rows cols field", an optional "cols: l1 l2 ..." line, then
/// one row per line, optionally led by a non-numeric row label.
std::string to_text(const Matrix& m);
Matrix parse_matrix(std::string_view text);

}  // namespace matroidlab
