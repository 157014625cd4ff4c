#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "matroidlab/echelon.hpp"
#include "matroidlab/polynomial.hpp"

namespace matroidlab {

/// Monomials of each degree in increasing grlex order, with index lookup and
/// multiplication-by-variable tables. Degrees are built on demand.
class GradedMonomials {
 public:
  explicit GradedMonomials(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& of_degree(std::size_t d) {
    ensure(d);
    return levels_[d].monos;
  }
  std::size_t index(const Monomial& m) {
    ensure(m.degree());
    return levels_[m.degree()].index.at(m);
  }
  /// Index in degree d+1 of x_{var+1} times monomial idx of degree d.
  std::uint32_t times_variable(std::size_t d, std::size_t idx, std::size_t var) {
    ensure(d + 1);
    return levels_[d].up[idx * nvars_ + var];
  }

 private:
  struct Level {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<std::uint32_t> up;
  };

  void ensure(std::size_t d) {
    while (levels_.size() <= d) {
      Level lv;
      if (levels_.empty()) {
        lv.monos.push_back(Monomial(nvars_));
      } else {
        const Level& prev = levels_.back();
        for (const auto& m : prev.monos)
          for (std::size_t v = 0; v < nvars_; ++v) lv.monos.push_back(m * Monomial::variable(nvars_, v));
        std::sort(lv.monos.begin(), lv.monos.end());
        lv.monos.erase(std::unique(lv.monos.begin(), lv.monos.end()), lv.monos.end());
      }
      for (std::size_t i = 0; i < lv.monos.size(); ++i) lv.index.emplace(lv.monos[i], i);
      if (!levels_.empty()) {
        Level& prev = levels_.back();
        prev.up.resize(prev.monos.size() * nvars_);
        for (std::size_t i = 0; i < prev.monos.size(); ++i)
          for (std::size_t v = 0; v < nvars_; ++v)
            prev.up[i * nvars_ + v] =
                static_cast<std::uint32_t>(lv.index.at(prev.monos[i] * Monomial::variable(nvars_, v)));
      }
      levels_.push_back(std::move(lv));
    }
  }

  std::size_t nvars_;
  std::vector<Level> levels_;
};

/// Degree-by-degree span of a homogeneous ideal: the degree d part is the
/// span of x_i times the degree d-1 part plus the generators of degree d.
template <class Ops>
class GradedMacaulay {
 public:
  using value_type = typename Ops::value_type;
  using Row = typename Echelon<Ops>::Row;

  GradedMacaulay(Ops ops, GradedMonomials& mons) : ops_(std::move(ops)), mons_(mons) {}

  void add_generator(std::size_t degree, Row dense) {
    if (gens_.size() <= degree) gens_.resize(degree + 1);
    gens_[degree].push_back(std::move(dense));
  }

  /// Echelon basis of the ideal in degree d. Levels are built in order.
  const Echelon<Ops>& level(std::size_t d) {
    while (levels_.size() <= d) build(levels_.size());
    return levels_[d];
  }

  std::size_t quotient_dim(std::size_t d) { return mons_.of_degree(d).size() - level(d).rank(); }

  GradedMonomials& monomials() { return mons_; }
  const Ops& ops() const { return ops_; }

 private:
  void build(std::size_t d) {
    const std::size_t width = mons_.of_degree(d).size();
    Echelon<Ops> ech(ops_, width);
    if (d > 0 && levels_[d - 1].rank() > 0) {
      const std::size_t nv = mons_.nvars();
      const Echelon<Ops>& prev = levels_[d - 1];
      for (std::size_t v = 0; v < nv && ech.rank() < width; ++v) {
        for (std::size_t i = 0; i < prev.rank() && ech.rank() < width; ++i) {
          Row row(width, ops_.zero());
          prev.for_each_nonzero(i, [&](std::size_t j, const value_type& c) {
            row[mons_.times_variable(d - 1, j, v)] = c;
          });
          ech.insert(std::move(row));
        }
      }
    }
    if (d < gens_.size()) {
      for (const Row& g : gens_[d]) {
        if (ech.rank() == width) break;
        ech.insert(g);
      }
    }
    levels_.push_back(std::move(ech));
  }

  Ops ops_;
  GradedMonomials& mons_;
  std::vector<std::vector<Row>> gens_;
  std::vector<Echelon<Ops>> levels_;
};

}  // namespace matroidlab
