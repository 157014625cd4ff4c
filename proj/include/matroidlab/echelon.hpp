#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "matroidlab/field.hpp"

namespace matroidlab {

/// Incrementally built row echelon basis of a subspace of k^cols.
///
/// Stored rows have a leading 1 at their pivot and vanish at the pivots of
/// every earlier row, so a vector is reduced by a single pass in insertion
/// order.
template <class Ops>
class Echelon {
 public:
  using value_type = typename Ops::value_type;
  using Row = std::vector<value_type>;

  Echelon(Ops ops, std::size_t cols) : ops_(std::move(ops)), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const Ops& ops() const { return ops_; }

  /// Reduces `row` in place; returns the pivot column or cols() if it vanished.
  std::size_t reduce(Row& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const value_type& c = row[pivots_[i]];
      if (ops_.is_zero(c)) continue;
      value_type factor = c;
      const Row& basis = rows_[i];
      for (std::size_t j = pivots_[i]; j < cols_; ++j) {
        if (!ops_.is_zero(basis[j])) row[j] = ops_.sub(row[j], ops_.mul(factor, basis[j]));
      }
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!ops_.is_zero(row[j])) return j;
    }
    return cols_;
  }

  /// Adds the row if it is independent of the stored ones.
  bool insert(Row row) {
    std::size_t pivot = reduce(row);
    if (pivot == cols_) return false;
    value_type scale = ops_.inv(row[pivot]);
    for (std::size_t j = pivot; j < cols_; ++j) {
      if (!ops_.is_zero(row[j])) row[j] = ops_.mul(row[j], scale);
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  /// Inserts the unit vector e_col.
  bool insert_unit(std::size_t col) {
    Row row(cols_, ops_.zero());
    row[col] = ops_.one();
    return insert(std::move(row));
  }

  bool contains(Row row) const { return reduce(row) == cols_; }

  template <class Fn>
  void for_each_nonzero(std::size_t i, Fn&& fn) const {
    const Row& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j) {
      if (!ops_.is_zero(row[j])) fn(j, row[j]);
    }
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

 private:
  Ops ops_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// GF(2) rows are packed 64 columns per word.
template <>
class Echelon<Gf2Ops> {
 public:
  using value_type = Gf2Ops::value_type;
  using Row = std::vector<value_type>;
  using Bits = std::vector<std::uint64_t>;

  Echelon(Gf2Ops, std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  Gf2Ops ops() const { return {}; }

  Bits pack(const Row& row) const {
    Bits bits(words_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] & 1u) bits[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    return bits;
  }

  std::size_t reduce_bits(Bits& bits) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t p = pivots_[i];
      if ((bits[p >> 6] >> (p & 63)) & 1u) {
        const Bits& basis = rows_[i];
        for (std::size_t w = p >> 6; w < words_; ++w) bits[w] ^= basis[w];
      }
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
    }
    return cols_;
  }

  bool insert_bits(Bits bits) {
    std::size_t pivot = reduce_bits(bits);
    if (pivot == cols_) return false;
    rows_.push_back(std::move(bits));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t reduce(Row& row) const {
    Bits bits = pack(row);
    std::size_t pivot = reduce_bits(bits);
    for (std::size_t j = 0; j < cols_; ++j) row[j] = (bits[j >> 6] >> (j & 63)) & 1u;
    return pivot;
  }

  bool insert(const Row& row) { return insert_bits(pack(row)); }

  bool insert_unit(std::size_t col) {
    Bits bits(words_, 0);
    bits[col >> 6] |= std::uint64_t{1} << (col & 63);
    return insert_bits(std::move(bits));
  }

  bool contains(const Row& row) const {
    Bits bits = pack(row);
    return reduce_bits(bits) == cols_;
  }

  template <class Fn>
  void for_each_nonzero(std::size_t i, Fn&& fn) const {
    const Bits& bits = rows_[i];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        fn(j, value_type{1});
        word &= word - 1;
      }
    }
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::size_t words_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace matroidlab
