#include "matroidlab/ordering.hpp"

#include <algorithm>
#include <sstream>

#include "matroidlab/error.hpp"

namespace matroidlab {

Ordering::Ordering(std::vector<std::size_t> order) : order_(std::move(order)), position_(order_.size()) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t k = 0; k < order_.size(); ++k) {
    std::size_t e = order_[k];
    if (e >= order_.size() || seen[e]) throw Error(Errc::BadParams, "ordering is not a permutation");
    seen[e] = true;
    position_[e] = k;
  }
}

Ordering Ordering::natural(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return Ordering(std::move(order));
}

Ordering Ordering::from_labels(const Matroid& m, const std::vector<std::string>& labels) {
  if (labels.size() != m.size()) {
    throw Error(Errc::BadParams, "ordering lists " + std::to_string(labels.size()) + " elements, ground set has " +
                                     std::to_string(m.size()));
  }
  std::vector<std::size_t> order;
  order.reserve(labels.size());
  for (const auto& l : labels) order.push_back(m.index_of(l));
  return Ordering(std::move(order));
}

Ordering Ordering::parse(const Matroid& m, const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::string> labels;
  for (std::string tok; in >> tok;) labels.push_back(tok);
  return from_labels(m, labels);
}

ElementSet Ordering::positions(std::size_t from, std::size_t to) const {
  ElementSet s;
  for (std::size_t k = from; k < to && k < order_.size(); ++k) s = s.with(order_[k]);
  return s;
}

std::size_t Ordering::least(ElementSet s) const {
  std::size_t best = order_.size();
  std::size_t elem = 0;
  s.for_each([&](std::size_t e) {
    if (position_[e] < best) {
      best = position_[e];
      elem = e;
    }
  });
  return elem;
}

Ordering Ordering::without(std::size_t e) const {
  std::vector<std::size_t> order;
  for (std::size_t x : order_) {
    if (x == e) continue;
    order.push_back(x > e ? x - 1 : x);
  }
  return Ordering(std::move(order));
}

Ordering Ordering::restricted(ElementSet keep) const {
  std::vector<std::size_t> rank_in_keep(order_.size(), 0);
  std::size_t k = 0;
  keep.for_each([&](std::size_t e) { rank_in_keep[e] = k++; });
  std::vector<std::size_t> order;
  for (std::size_t x : order_)
    if (keep.contains(x)) order.push_back(rank_in_keep[x]);
  return Ordering(std::move(order));
}

std::vector<std::string> Ordering::labels(const Matroid& m) const {
  std::vector<std::string> out;
  for (std::size_t e : order_) out.push_back(m.label(e));
  return out;
}

std::string Ordering::format(const Matroid& m) const {
  std::string out;
  for (std::size_t e : order_) {
    if (!out.empty()) out += ",";
    out += m.label(e);
  }
  return out;
}

bool is_standard(const Matroid& m, const Ordering& ordering) {
  if (ordering.size() != m.size()) return false;
  return m.is_basis(ordering.positions(m.size() - m.rank(), m.size()));
}

StandardOrdering StandardOrdering::make(const Matroid& m, Ordering ordering) {
  if (ordering.size() != m.size()) throw Error(Errc::BadParams, "ordering size differs from ground set");
  ElementSet tail = ordering.positions(m.size() - m.rank(), m.size());
  if (!m.is_basis(tail)) {
    throw Error(Errc::NotStandard, "last " + std::to_string(m.rank()) + " elements " + m.format(tail) +
                                       " are not a basis");
  }
  return {std::move(ordering), tail};
}

}  // namespace matroidlab
