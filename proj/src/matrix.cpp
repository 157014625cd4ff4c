#include "matroidlab/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "matroidlab/echelon.hpp"
#include "matroidlab/error.hpp"

namespace matroidlab {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows, FieldTag field,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::BadSize, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(rows[r][c]));
  }
  return m;
}

Matrix Matrix::identity(std::size_t n, FieldTag field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

void Matrix::set_col_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != cols_) throw Error(Errc::BadSize, "column label count");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(Errc::DuplicateLabels, "column labels repeat");
  col_labels_ = std::move(labels);
}

void Matrix::set_row_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != rows_) throw Error(Errc::BadSize, "row label count");
  row_labels_ = std::move(labels);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.data_[r * cols.size() + j] = at(r, cols[j]);
  if (!col_labels_.empty()) {
    for (std::size_t c : cols) out.col_labels_.push_back(col_labels_[c]);
  }
  out.row_labels_ = row_labels_;
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[i * cols_ + c] = at(rows[i], c);
  out.col_labels_ = col_labels_;
  if (!row_labels_.empty()) {
    for (std::size_t r : rows) out.row_labels_.push_back(row_labels_[r]);
  }
  return out;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (below.cols_ != cols_) throw Error(Errc::BadSize, "stacking matrices of different widths");
  Matrix out(rows_ + below.rows_, cols_, field_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  for (std::size_t i = 0; i < below.data_.size(); ++i) {
    out.data_[data_.size() + i] = field_.normalize(below.data_[i]);
  }
  out.col_labels_ = col_labels_;
  return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::BadSize, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

Matrix Matrix::over(FieldTag field) const {
  Matrix out(rows_, cols_, field);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    Scalar v = data_[i];
    if (!field_.is_rational() && field_.p != 2 && 2 * v > field_.p) v -= field_.p;
    out.data_[i] = field.normalize(v);
  }
  out.row_labels_ = row_labels_;
  out.col_labels_ = col_labels_;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& v) { return sgn(v) == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_ &&
         a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_;
}

namespace {

template <class Ops>
std::vector<std::vector<typename Ops::value_type>> native_rows(const Matrix& m, const Ops& ops) {
  std::vector<std::vector<typename Ops::value_type>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out[r].reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(ops.from(m.at(r, c)));
  }
  return out;
}

// Gauss-Jordan on the given pivot columns in order; returns the pivot rows
// used, or nullopt if some column has no pivot left.
template <class Ops>
std::optional<std::vector<std::size_t>> eliminate_on(
    std::vector<std::vector<typename Ops::value_type>>& rows, const Ops& ops,
    std::span<const std::size_t> pivot_cols) {
  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> pivot_rows;
  for (std::size_t col : pivot_cols) {
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && !ops.is_zero(rows[r][col])) {
        pr = r;
        break;
      }
    }
    if (pr == rows.size()) return std::nullopt;
    used[pr] = true;
    pivot_rows.push_back(pr);
    auto scale = ops.inv(rows[pr][col]);
    for (auto& v : rows[pr]) v = ops.mul(v, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || ops.is_zero(rows[r][col])) continue;
      auto factor = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (!ops.is_zero(rows[pr][c])) rows[r][c] = ops.sub(rows[r][c], ops.mul(factor, rows[pr][c]));
      }
    }
  }
  return pivot_rows;
}

// Reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref(std::vector<std::vector<typename Ops::value_type>>& rows,
                              std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pr = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (!ops.is_zero(rows[r][col])) {
        pr = r;
        break;
      }
    }
    if (pr == rows.size()) continue;
    std::swap(rows[next], rows[pr]);
    auto scale = ops.inv(rows[next][col]);
    for (auto& v : rows[next]) v = ops.mul(v, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || ops.is_zero(rows[r][col])) continue;
      auto factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!ops.is_zero(rows[next][c])) rows[r][c] = ops.sub(rows[r][c], ops.mul(factor, rows[next][c]));
      }
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

long bareiss_det(std::vector<long> a, std::size_t n) {
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a[r * n + k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls fn on every k-subset of [0, n), given as a bitmask.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  if (k == 0) return fn(std::uint64_t{0});
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    if (!fn(s)) return false;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0 || (limit && r >= limit)) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit && s >= limit) break;
  }
  return true;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Echelon<Ops> ech(ops, m.cols());
    for (auto& row : native_rows(m, ops)) ech.insert(std::move(row));
    return ech.rank();
  });
}

Matrix standard_form(const Matrix& m, std::span<const std::size_t> basis_cols) {
  std::vector<std::size_t> cols(basis_cols.begin(), basis_cols.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw Error(Errc::SingularBasis, "repeated basis column");
  }
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw Error(Errc::BadSize, "basis column out of range");
  }
  return with_field_ops(m.field(), [&](const auto& ops) {
    auto rows = native_rows(m, ops);
    auto pivot_rows = eliminate_on(rows, ops, cols);
    if (!pivot_rows) throw Error(Errc::SingularBasis, "selected columns are dependent");
    Matrix out(cols.size(), m.cols(), m.field());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t c = 0; c < m.cols(); ++c) out.set(i, c, ops.to(rows[(*pivot_rows)[i]][c]));
    }
    std::vector<bool> used(rows.size(), false);
    for (std::size_t r : *pivot_rows) used[r] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      for (const auto& v : rows[r]) {
        if (!ops.is_zero(v)) throw Error(Errc::BadSize, "basis columns do not span the row space");
      }
    }
    out.set_col_labels(m.col_labels());
    return out;
  });
}

Matrix null_space_basis(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    auto rows = native_rows(m, ops);
    auto pivots = rref(rows, m.cols(), ops);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix out(free_cols.size(), m.cols(), m.field());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      std::size_t f = free_cols[i];
      out.set(i, f, Scalar(1));
      for (std::size_t k = 0; k < pivots.size(); ++k) out.set(i, pivots[k], ops.to(ops.neg(rows[k][f])));
    }
    out.set_col_labels(m.col_labels());
    return out;
  });
}

long signed_entry(const Matrix& m, std::size_t r, std::size_t c) {
  const Scalar& v = m.at(r, c);
  if (v.get_den() != 1) throw Error(Errc::BadParams, "non-integer entry");
  long x = v.get_num().get_si();
  if (!m.field().is_rational() && m.field().p != 2 && 2 * x > static_cast<long>(m.field().p)) {
    x -= static_cast<long>(m.field().p);
  }
  return x;
}

bool is_totally_unimodular(const Matrix& m, const TuOptions& options) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows > 64 || cols > 64) throw Error(Errc::Overbudget, "TU check limited to 64x64");
  std::vector<long> entries(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      long v = signed_entry(m, r, c);
      if (v < -1 || v > 1) return false;
      entries[r * cols + c] = v;
    }
  }
  std::size_t max_order = std::min(rows, cols);
  if (options.max_order) max_order = std::min(max_order, *options.max_order);
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= max_order; ++k) {
    total += binomial(rows, k) * binomial(cols, k);
    if (total > options.submatrix_cap) {
      throw Error(Errc::Overbudget, "too many square submatrices for the TU check");
    }
  }
  for (std::size_t k = 2; k <= max_order; ++k) {
    std::vector<std::size_t> ri, ci;
    std::vector<long> sub(k * k);
    bool ok = for_each_subset(rows, k, [&](std::uint64_t rmask) {
      ri.clear();
      for (std::size_t r = 0; r < rows; ++r)
        if ((rmask >> r) & 1u) ri.push_back(r);
      return for_each_subset(cols, k, [&](std::uint64_t cmask) {
        ci.clear();
        for (std::size_t c = 0; c < cols; ++c)
          if ((cmask >> c) & 1u) ci.push_back(c);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = entries[ri[i] * cols + ci[j]];
        long d = bareiss_det(sub, k);
        return d >= -1 && d <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::string to_text(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().name() << '\n';
  if (!m.col_labels().empty()) {
    out << "cols:";
    for (const auto& l : m.col_labels()) out << ' ' << l;
    out << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool first = true;
    if (!m.row_labels().empty()) {
      out << m.row_labels()[r];
      first = false;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!first) out << ' ';
      out << format_scalar(m.at(r, c));
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

bool looks_numeric(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    char c = tok[i];
    if (!(c >= '0' && c <= '9') && c != '/') return false;
  }
  return true;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t rows = 0, cols = 0;
  std::string field_name;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream header(line);
    if (!(header >> rows >> cols >> field_name)) throw Error(Errc::Parse, "bad matrix header: " + line);
    break;
  }
  if (field_name.empty()) throw Error(Errc::Parse, "missing matrix header");
  FieldTag field = FieldTag::parse(field_name);
  Matrix m(rows, cols, field);
  std::vector<std::string> row_labels;
  std::size_t r = 0;
  while (r < rows && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "cols:") {
      m.set_col_labels({toks.begin() + 1, toks.end()});
      continue;
    }
    std::size_t start = 0;
    if (!looks_numeric(toks[0])) {
      row_labels.push_back(toks[0]);
      start = 1;
    }
    if (toks.size() - start != cols) throw Error(Errc::Parse, "row " + std::to_string(r) + " has wrong width");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.parse_scalar(toks[start + c]));
    ++r;
  }
  if (r != rows) throw Error(Errc::Parse, "matrix has fewer rows than its header says");
  if (!row_labels.empty()) {
    if (row_labels.size() != rows) throw Error(Errc::Parse, "row labels on some rows only");
    m.set_row_labels(std::move(row_labels));
  }
  return m;
}

}  // namespace matroidlab
