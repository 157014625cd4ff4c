#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// Linear order on a ground set. Position k (0-based) holds element
/// order()[k]; that element is called e_{k+1}.
class Ordering {
 public:
  Ordering() = default;
  /// Throws Errc::BadParams unless `order` is a permutation of 0..n-1.
  explicit Ordering(std::vector<std::size_t> order);

  static Ordering natural(std::size_t n);
  /// Comma or whitespace separated labels. Throws Errc::UnknownName or
  /// Errc::BadParams.
  static Ordering parse(const Matroid& m, const std::string& text);
  static Ordering from_labels(const Matroid& m, const std::vector<std::string>& labels);

  std::size_t size() const { return order_.size(); }
  std::size_t element_at(std::size_t pos) const { return order_[pos]; }
  std::size_t position_of(std::size_t e) const { return position_[e]; }
  const std::vector<std::size_t>& order() const { return order_; }

  /// Elements in positions [from, to).
  ElementSet positions(std::size_t from, std::size_t to) const;
  /// Element of `s` with the smallest position; `s` must be nonempty.
  std::size_t least(ElementSet s) const;

  /// Ordering of the ground set with `e` removed, relative order kept and
  /// element indices shifted as in Matroid::delete_element.
  Ordering without(std::size_t e) const;
  /// Ordering restricted to `keep`, renumbered like Matroid::restrict_to.
  Ordering restricted(ElementSet keep) const;

  std::vector<std::string> labels(const Matroid& m) const;
  std::string format(const Matroid& m) const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
};

/// An ordering whose last r elements form a basis.
struct StandardOrdering {
  Ordering ordering;
  ElementSet basis;

  /// Throws Errc::NotStandard if the last rank(m) elements are dependent.
  static StandardOrdering make(const Matroid& m, Ordering ordering);
  /// Elements in positions 0..n-r-1.
  ElementSet cobasis() const { return ordering.positions(0, ordering.size() - basis.size()); }
};

bool is_standard(const Matroid& m, const Ordering& ordering);

}  // namespace matroidlab
