#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace matroidlab {

/// Subset of a ground set of at most 64 elements, indexed 0..n-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(std::size_t e) { return ElementSet(std::uint64_t{1} << e); }
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet of(const std::vector<std::size_t>& elements) {
    ElementSet s;
    for (std::size_t e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t e) const { return (bits_ >> e) & 1u; }
  constexpr ElementSet with(std::size_t e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(std::size_t e) const { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
  /// Lowest index; undefined on the empty set.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) fn(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(ElementSet) for every k-subset of the first n elements in
/// increasing bit order; stops early when fn returns false.
template <class Fn>
bool for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  if (k == 0) return fn(ElementSet{});
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!fn(ElementSet(s))) return false;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit && s >= limit) break;
  }
  return true;
}

}  // namespace matroidlab
