#include "matroidlab/bc_complex.hpp"

#include <algorithm>

#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Depth-first over sets in increasing element order; a set is visited once
// and pruned as soon as it contains a broken circuit.
template <class Fn>
void walk_faces(std::size_t n, const std::vector<ElementSet>& broken, Fn&& fn) {
  for (ElementSet b : broken)
    if (b.empty()) return;  // a loop: no faces at all
  std::vector<std::vector<ElementSet>> by_max(n);
  for (ElementSet b : broken) by_max[63 - std::countl_zero(b.bits())].push_back(b);
  auto rec = [&](auto&& self, ElementSet face, std::size_t next) -> void {
    fn(face);
    for (std::size_t e = next; e < n; ++e) {
      ElementSet cand = face.with(e);
      // only broken circuits whose largest element is e can newly appear
      bool ok = std::none_of(by_max[e].begin(), by_max[e].end(), [&](ElementSet b) { return b.subset_of(cand); });
      if (ok) self(self, cand, e + 1);
    }
  };
  rec(rec, ElementSet{}, 0);
}

std::vector<std::uint64_t> f_vector(const Matroid& m, const Ordering& ord) {
  std::vector<std::uint64_t> f(m.rank() + 1, 0);
  walk_faces(m.size(), broken_circuits(m, ord), [&](ElementSet s) { ++f[s.size()]; });
  return f;
}

}  // namespace

std::vector<ElementSet> broken_circuits(const Matroid& m, const Ordering& ord) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) out.push_back(c.without(ord.least(c)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementSet> bc_faces(const Matroid& m, const Ordering& ord) {
  std::vector<ElementSet> out;
  walk_faces(m.size(), broken_circuits(m, ord), [&](ElementSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::int64_t FhVectors::h_sum() const {
  std::int64_t s = 0;
  for (auto x : h) s += x;
  return s;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::uint64_t>& f) {
  const std::int64_t d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (std::int64_t k = 0; k <= d; ++k) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      std::int64_t term = binomial(d - i, k - i) * static_cast<std::int64_t>(f[static_cast<std::size_t>(i)]);
      sum += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = sum;
  }
  return h;
}

FhVectors f_h_vectors(const Matroid& m, const Ordering& ord) {
  FhVectors out;
  out.f = f_vector(m, ord);
  out.h = h_from_f(out.f);
  out.facets = out.f.back();
  return out;
}

HRecursionReport h_recursion_check(const Matroid& m, std::size_t e, const Ordering& ord) {
  if (m.is_loop(e) || m.is_coloop(e)) {
    throw Error(Errc::DegenerateElement, m.label(e) + " is a loop or a coloop");
  }
  HRecursionReport rep;
  rep.h = f_h_vectors(m, ord).h;
  Ordering minor_ord = ord.without(e);
  rep.h_deletion = f_h_vectors(m.delete_element(e), minor_ord).h;
  rep.h_contraction = f_h_vectors(m.contract(e), minor_ord).h;
  rep.holds = rep.h.size() == rep.h_deletion.size() && rep.h_contraction.size() + 1 == rep.h.size();
  for (std::size_t i = 0; rep.holds && i < rep.h.size(); ++i) {
    std::int64_t rhs = rep.h_deletion[i] + (i > 0 ? rep.h_contraction[i - 1] : 0);
    if (rep.h[i] != rhs) rep.holds = false;
  }
  return rep;
}

JoinReport join_decomposition_check(const Matroid& m, const Ordering& ord) {
  JoinReport rep;
  rep.components = m.connected_components();
  rep.f = f_vector(m, ord);
  // f-polynomials multiply under joins
  std::vector<std::uint64_t> prod{1};
  for (ElementSet comp : rep.components) {
    std::vector<std::uint64_t> fc = f_vector(m.restrict_to(comp), ord.restricted(comp));
    std::vector<std::uint64_t> next(prod.size() + fc.size() - 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < fc.size(); ++j) next[i + j] += prod[i] * fc[j];
    prod = std::move(next);
  }
  rep.f_join = prod;
  rep.holds = rep.f == rep.f_join;
  return rep;
}

}  // namespace matroidlab
