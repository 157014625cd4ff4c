#include "matroidlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matroidlab/echelon.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/macaulay.hpp"

namespace matroidlab {

namespace {

struct Entry {
  Polynomial poly;
  unsigned sugar = 0;
  bool live = true;
};

struct Pair {
  std::size_t i, j;
  unsigned sugar;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  const FieldTag& fld = f.field();
  Polynomial a = f.times(f.leading_monomial().quotient_of(lcm), fld.inv(f.leading_coefficient()));
  Polynomial b = g.times(g.leading_monomial().quotient_of(lcm), fld.inv(g.leading_coefficient()));
  return a - b;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
  const FieldTag& fld = f.field();
  Polynomial rem(fld, f.nvars());
  Polynomial p = f;
  while (!p.is_zero()) {
    const auto& lt = p.terms().front();
    bool reduced = false;
    for (const auto& h : g) {
      if (h.is_zero() || !h.leading_monomial().divides(lt.mono)) continue;
      Scalar factor = fld.div(lt.coef, h.leading_coefficient());
      p = p - h.times(h.leading_monomial().quotient_of(lt.mono), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + Polynomial::monomial(fld, lt.mono, lt.coef);
      p = p - Polynomial::monomial(fld, lt.mono, lt.coef);
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal) {
  std::vector<Entry> basis;
  std::vector<Pair> pairs;

  auto add = [&](Polynomial p, unsigned sugar) {
    p = p.monic();
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!basis[i].live) continue;
      const Polynomial& q = basis[i].poly;
      Monomial l = q.leading_monomial().lcm(p.leading_monomial());
      unsigned s = std::max(basis[i].sugar + l.degree() - q.leading_monomial().degree(),
                            sugar + l.degree() - p.leading_monomial().degree());
      pairs.push_back({i, k, s, l});
    }
    basis.push_back({std::move(p), sugar, true});
  };

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    std::vector<Polynomial> current;
    for (const auto& e : basis) current.push_back(e.poly);
    Polynomial r = normal_form(g, current);
    if (!r.is_zero()) add(std::move(r), g.degree());
  }

  std::set<std::pair<std::size_t, std::size_t>> done;
  auto processed = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return done.count({a, b}) > 0;
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return a.lcm < b.lcm;
    });
    Pair pr = *best;
    pairs.erase(best);
    done.insert({std::min(pr.i, pr.j), std::max(pr.i, pr.j)});
    const Polynomial& f = basis[pr.i].poly;
    const Polynomial& g = basis[pr.j].poly;
    // first criterion: coprime leading monomials reduce to zero
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // chain criterion
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].poly.leading_monomial().divides(pr.lcm)) continue;
      if (processed(pr.i, k) && processed(pr.j, k)) chain = true;
    }
    if (chain) continue;
    Polynomial s = s_polynomial(f, g, pr.lcm);
    std::vector<Polynomial> current;
    for (const auto& e : basis) current.push_back(e.poly);
    Polynomial r = normal_form(s, current);
    if (!r.is_zero()) add(std::move(r), pr.sugar);
  }

  // minimal, then reduced
  std::vector<Polynomial> g;
  for (const auto& e : basis) g.push_back(e.poly);
  std::sort(g.begin(), g.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].leading_monomial().divides(g[i].leading_monomial())) continue;
      // equal leading monomials: keep the earliest
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& lt = minimal[i].terms().front();
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].field(), lt.mono, lt.coef);
    reduced.push_back((Polynomial::monomial(minimal[i].field(), lt.mono, lt.coef) + normal_form(tail, others)).monic());
  }
  return reduced;
}

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading_monomial());
  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : leads) {
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != v && m.exponent(w)) pure = false;
      if (pure && m.exponent(v) > 0 && (bound[v] == 0 || m.exponent(v) < bound[v])) bound[v] = m.exponent(v);
    }
    bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
    if (bound[v] == 0 && !unit) {
      throw Error(Errc::NotArtinian, "no power of x" + std::to_string(v + 1) + " lies in the initial ideal");
    }
  }
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto in_initial = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      if (!in_initial(cur)) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      cur.set_exponent(v, e);
      // the initial ideal is an upper set: once inside, larger exponents stay inside
      Monomial probe = cur;
      for (std::size_t w = v + 1; w < nvars; ++w) probe.set_exponent(w, 0);
      if (in_initial(probe)) break;
      self(self, v + 1);
    }
    cur.set_exponent(v, 0);
  };
  if (nvars == 0) {
    if (!in_initial(cur)) out.push_back(cur);
  } else {
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientDimension quotient_dimension(const Ideal& ideal) {
  auto gb = groebner_basis(ideal);
  auto std_monos = standard_monomials(gb, ideal.nvars);
  QuotientDimension out;
  out.total = std_monos.size();
  for (const auto& m : std_monos) {
    if (out.by_degree.size() <= m.degree()) out.by_degree.resize(m.degree() + 1, 0);
    ++out.by_degree[m.degree()];
  }
  return out;
}

const char* verdict_name(BasisVerdictKind k) {
  switch (k) {
    case BasisVerdictKind::Basis:
      return "Basis";
    case BasisVerdictKind::NotSpanning:
      return "NotSpanning";
    case BasisVerdictKind::NotIndependent:
      return "NotIndependent";
    case BasisVerdictKind::WrongCardinality:
      return "WrongCardinality";
  }
  return "?";
}

namespace {

BasisVerdict basis_by_groebner(const Ideal& ideal, const std::vector<Monomial>& s) {
  auto gb = groebner_basis(ideal);
  auto std_monos = standard_monomials(gb, ideal.nvars);
  BasisVerdict v;
  v.dimension = std_monos.size();
  if (s.size() > v.dimension) {
    v.kind = BasisVerdictKind::WrongCardinality;
    return v;
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t i = 0; i < std_monos.size(); ++i) col.emplace(std_monos[i], i);
  return with_field_ops(ideal.field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Echelon<Ops> ech(ops, std_monos.size());
    for (const auto& m : s) {
      Polynomial nf = normal_form(Polynomial::monomial(ideal.field, m), gb);
      typename Echelon<Ops>::Row row(std_monos.size(), ops.zero());
      for (const auto& t : nf.terms()) row[col.at(t.mono)] = ops.from(t.coef);
      if (!ech.insert(std::move(row))) {
        v.kind = BasisVerdictKind::NotIndependent;
        v.witness = m;
        return v;
      }
    }
    if (s.size() < v.dimension) {
      for (std::size_t i = 0; i < std_monos.size(); ++i) {
        typename Echelon<Ops>::Row row(std_monos.size(), ops.zero());
        row[i] = ops.one();
        if (!ech.contains(std::move(row))) {
          v.kind = BasisVerdictKind::NotSpanning;
          v.witness = std_monos[i];
          return v;
        }
      }
    }
    v.kind = BasisVerdictKind::Basis;
    return v;
  });
}

BasisVerdict basis_by_macaulay(const Ideal& ideal, const std::vector<Monomial>& s) {
  const std::size_t nv = ideal.nvars;
  unsigned maxdeg = 0;
  bool has_generator = false;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(Errc::NotHomogeneous, "Macaulay path needs homogeneous generators");
    maxdeg = std::max(maxdeg, g.degree());
    has_generator = true;
  }
  GradedMonomials mons(nv);
  return with_field_ops(ideal.field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    GradedMacaulay<Ops> mac(ops, mons);
    for (const auto& g : ideal.generators) {
      if (g.is_zero()) continue;
      typename Echelon<Ops>::Row row(mons.of_degree(g.degree()).size(), ops.zero());
      for (const auto& t : g.terms()) row[mons.index(t.mono)] = ops.from(t.coef);
      mac.add_generator(g.degree(), std::move(row));
    }
    // Artinian homogeneous ideals generated in degree <= D vanish past nv*(D-1)
    const std::size_t cap = nv == 0 ? 0 : (has_generator ? nv * (maxdeg > 0 ? maxdeg - 1 : 0) + 1 : 0);
    std::vector<std::size_t> dims;
    std::size_t top = 0;  // first degree where the quotient vanishes
    for (std::size_t d = 0;; ++d) {
      std::size_t q = mac.quotient_dim(d);
      if (q == 0) {
        top = d;
        break;
      }
      dims.push_back(q);
      if (d >= cap) {
        if (nv == 0) {
          top = d + 1;
          break;
        }
        throw Error(Errc::NotArtinian, "quotient does not vanish by degree " + std::to_string(cap));
      }
    }
    BasisVerdict v;
    for (auto q : dims) v.dimension += q;
    if (s.size() > v.dimension) {
      v.kind = BasisVerdictKind::WrongCardinality;
      return v;
    }
    std::vector<std::optional<Echelon<Ops>>> work(top);
    for (const auto& m : s) {
      std::size_t d = m.degree();
      if (d >= top) {
        v.kind = BasisVerdictKind::NotIndependent;
        v.witness = m;
        return v;
      }
      if (!work[d]) work[d].emplace(mac.level(d));
      typename Echelon<Ops>::Row row(mons.of_degree(d).size(), ops.zero());
      row[mons.index(m)] = ops.one();
      if (!work[d]->insert(std::move(row))) {
        v.kind = BasisVerdictKind::NotIndependent;
        v.witness = m;
        return v;
      }
    }
    if (s.size() < v.dimension) {
      for (std::size_t d = 0; d < top; ++d) {
        if (!work[d]) work[d].emplace(mac.level(d));
        const auto& monos = mons.of_degree(d);
        for (std::size_t i = 0; i < monos.size(); ++i) {
          typename Echelon<Ops>::Row row(monos.size(), ops.zero());
          row[i] = ops.one();
          if (!work[d]->contains(std::move(row))) {
            v.kind = BasisVerdictKind::NotSpanning;
            v.witness = monos[i];
            return v;
          }
        }
      }
    }
    v.kind = BasisVerdictKind::Basis;
    return v;
  });
}

}  // namespace

BasisVerdict monomial_set_is_basis(const Ideal& ideal, const std::vector<Monomial>& s, BasisPath path) {
  for (const auto& m : s)
    if (m.nvars() != ideal.nvars) throw Error(Errc::BadParams, "monomial variable count differs from the ideal");
  return path == BasisPath::Groebner ? basis_by_groebner(ideal, s) : basis_by_macaulay(ideal, s);
}

}  // namespace matroidlab
