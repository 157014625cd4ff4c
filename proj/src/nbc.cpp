#include "matroidlab/nbc.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

Polynomial linear_form(const FieldTag& field, std::size_t nvars, const std::vector<Scalar>& coefs) {
  Polynomial p(field, nvars);
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    if (sgn(coefs[i]) == 0) continue;
    p = p + Polynomial::monomial(field, Monomial::variable(nvars, i), coefs[i]);
  }
  return p;
}

// Solved forms: x_k for k < n-r, otherwise the basis variable expressed in
// x1..x_{n-r}.
std::vector<Polynomial> solved_forms(const ThetaSystem& theta) {
  const Matrix& a = theta.coefficients;
  const FieldTag& f = theta.field;
  const std::size_t n = a.cols(), r = a.rows(), v = n - r;
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < v; ++k) out.push_back(Polynomial::variable(f, v, k));
  for (std::size_t row = 0; row < r; ++row) {
    const std::size_t k = v + row;
    for (std::size_t j = v; j < n; ++j) {
      bool ok = j == k ? sgn(a.at(row, j)) != 0 : sgn(a.at(row, j)) == 0;
      if (!ok) throw Error(Errc::UnsolvableTheta, "theta form " + std::to_string(row + 1) + " cannot be solved");
    }
    Scalar scale = f.neg(f.inv(a.at(row, k)));
    std::vector<Scalar> coefs(v);
    for (std::size_t i = 0; i < v; ++i) coefs[i] = f.mul(scale, a.at(row, i));
    out.push_back(linear_form(f, v, coefs));
  }
  return out;
}

Polynomial substitute(const Polynomial& g, const std::vector<Polynomial>& forms, const FieldTag& f, std::size_t v) {
  Polynomial out(f, v);
  for (const auto& t : g.terms()) {
    Polynomial term = Polynomial::constant(f, v, t.coef);
    for (std::size_t k = 0; k < t.mono.nvars(); ++k)
      for (unsigned e = 0; e < t.mono.exponent(k); ++e) term = term * forms[k];
    out = out + term;
  }
  return out;
}

Monomial squarefree(std::size_t nvars, ElementSet s, const Ordering& ord) {
  Monomial m(nvars);
  s.for_each([&](std::size_t e) { m.set_exponent(ord.position_of(e), 1); });
  return m;
}

std::optional<std::size_t> missing_pure_power(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return std::nullopt;
  for (std::size_t i = 0; i < nvars; ++i) {
    bool found = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      if (g.exponent(i) == 0) return false;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != i && g.exponent(w)) return false;
      return true;
    });
    if (!found) return i;
  }
  return std::nullopt;
}

}  // namespace

ThetaSystem lsop(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  ThetaSystem t{so, field, fundamental_matrices(m, so, field).cocircuits.matrix, {}};
  const std::size_t n = m.size();
  for (std::size_t row = 0; row < t.coefficients.rows(); ++row) t.forms.push_back(linear_form(field, n, t.coefficients.row(row)));
  return t;
}

LsopValidation validate_lsop(const Matroid& m, const ThetaSystem& theta) {
  LsopValidation out;
  const Ordering& ord = theta.so.ordering;
  const std::size_t r = m.rank();
  auto block_rank = [&](ElementSet s) {
    std::vector<std::size_t> cols;
    s.for_each([&](std::size_t e) { cols.push_back(ord.position_of(e)); });
    std::sort(cols.begin(), cols.end());
    return rank(theta.coefficients.select_columns(cols));
  };
  out.facets_full_rank = true;
  for (ElementSet face : bc_faces(m, ord)) {
    if (face.size() != r) continue;
    ++out.facets_checked;
    if (block_rank(face) != r) out.facets_full_rank = false;
  }
  out.represents_matroid = rank(theta.coefficients) == r;
  for_each_k_subset(m.size(), r, [&](ElementSet s) {
    if ((block_rank(s) == r) != m.is_basis(s)) out.represents_matroid = false;
    return out.represents_matroid;
  });
  return out;
}

Ideal stanley_reisner_ideal(const Matroid& m, const Ordering& ord) {
  Ideal out{FieldTag::gf2(), m.size(), {}};
  for (ElementSet b : broken_circuits(m, ord))
    out.generators.push_back(Polynomial::monomial(out.field, squarefree(m.size(), b, ord)));
  return out;
}

Ideal substitute_basis_variables(const Ideal& ideal, const ThetaSystem& theta) {
  const std::size_t v = theta.coefficients.cols() - theta.coefficients.rows();
  auto forms = solved_forms(theta);
  Ideal out{theta.field, v, {}};
  for (const auto& g : ideal.generators) {
    Polynomial over(theta.field, g.nvars());
    for (const auto& t : g.terms()) over = over + Polynomial::monomial(theta.field, t.mono, t.coef);
    Polynomial p = substitute(over, forms, theta.field, v);
    if (!p.is_zero()) out.generators.push_back(std::move(p));
  }
  return out;
}

MonomialData dj_and_mc(const Matroid& m, const StandardOrdering& so) {
  const Ordering& ord = so.ordering;
  const std::size_t n = m.size(), r = m.rank(), v = n - r;
  MonomialData out;
  out.d.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j < v) {
      out.d[j] = j + 1;
      continue;
    }
    ElementSet coc = m.fundamental_cocircuit(so.basis, ord.element_at(j));
    out.d[j] = ord.position_of(ord.least(coc)) + 1;
  }
  auto broken = [&](ElementSet c) { return c.without(ord.least(c)); };
  std::set<ElementSet> fundamental;
  for (std::size_t i = 0; i < v; ++i) {
    ElementSet c = m.fundamental_circuit(so.basis, ord.element_at(i));
    fundamental.insert(c);
    CircuitMonomial cm{c, broken(c), true, Monomial::variable(v, i, static_cast<unsigned>(broken(c).size()))};
    out.circuits.push_back(std::move(cm));
  }
  for (ElementSet c : m.circuits()) {
    if (fundamental.count(c)) continue;
    CircuitMonomial cm{c, broken(c), false, Monomial(v)};
    cm.broken.for_each([&](std::size_t e) {
      std::size_t dj = out.d[ord.position_of(e)];
      if (dj > v) throw Error(Errc::BadParams, "d_j beyond the cobasis for " + m.label(e));
      cm.m.set_exponent(dj - 1, cm.m.exponent(dj - 1) + 1);
    });
    out.circuits.push_back(std::move(cm));
  }
  return out;
}

std::vector<Polynomial> circuit_polynomials(const Matroid& m, const ThetaSystem& theta, const MonomialData& data) {
  const std::size_t v = m.size() - m.rank();
  auto forms = solved_forms(theta);
  std::vector<Polynomial> out;
  for (const auto& c : data.circuits) {
    Polynomial p = Polynomial::constant(theta.field, v, Scalar(1));
    c.broken.for_each([&](std::size_t e) { p = p * forms[theta.so.ordering.position_of(e)]; });
    out.push_back(std::move(p));
  }
  return out;
}

bool leading_terms_present(const MonomialData& data, const std::vector<Polynomial>& p) {
  for (std::size_t i = 0; i < data.circuits.size(); ++i)
    if (sgn(p[i].coefficient(data.circuits[i].m)) == 0) return false;
  return true;
}

OrderIdeals order_ideals(const MonomialData& data, std::size_t nvars) {
  OrderIdeals out;
  out.nvars = nvars;
  std::vector<Monomial> gens;
  for (const auto& c : data.circuits) gens.push_back(c.m);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool minimal = std::none_of(out.upper_generators.begin(), out.upper_generators.end(),
                                [&](const Monomial& h) { return h.divides(g); });
    if (minimal) out.upper_generators.push_back(g);
  }
  if (auto miss = missing_pure_power(out.upper_generators, nvars)) {
    throw Error(Errc::InfiniteLowerIdeal, "no power of x" + std::to_string(*miss + 1) + " lies in U(M)");
  }
  const auto& u = out.upper_generators;
  auto in_upper = [&](const Monomial& m) {
    return std::any_of(u.begin(), u.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == nvars) {
      out.lower.push_back(cur);
      return;
    }
    for (unsigned e = 0;; ++e) {
      cur.set_exponent(i, e);
      Monomial probe = cur;
      for (std::size_t w = i + 1; w < nvars; ++w) probe.set_exponent(w, 0);
      if (in_upper(probe)) break;
      self(self, i + 1);
    }
    cur.set_exponent(i, 0);
  };
  if (!in_upper(cur)) rec(rec, 0);
  std::sort(out.lower.begin(), out.lower.end());
  return out;
}

OrderIdeals order_ideals(const Matroid& m, const StandardOrdering& so) {
  return order_ideals(dj_and_mc(m, so), m.size() - m.rank());
}

bool is_lower_ideal(const std::vector<Monomial>& s) {
  std::set<Monomial> all(s.begin(), s.end());
  for (const auto& m : s) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m.exponent(i) == 0) continue;
      Monomial d = m;
      d.set_exponent(i, m.exponent(i) - 1);
      if (!all.count(d)) return false;
    }
  }
  return true;
}

namespace {

struct PartResult {
  std::size_t nvars = 0;
  std::vector<Monomial> lower;
  bool infinite = false;
  std::size_t quotient_dim = 0;
  BasisVerdict verdict;
  bool independent = false;
};

PartResult check_connected(const Matroid& m, const StandardOrdering& so, FieldTag field, const NbcOptions& opt) {
  PartResult out;
  const std::size_t v = m.size() - m.rank();
  out.nvars = v;
  ThetaSystem theta = lsop(m, so, field);
  MonomialData data = dj_and_mc(m, so);
  std::vector<Polynomial> p = circuit_polynomials(m, theta, data);
  Ideal j{field, v, p};
  OrderIdeals oi;
  try {
    oi = order_ideals(data, v);
  } catch (const Error& e) {
    if (e.code() != Errc::InfiniteLowerIdeal) throw;
    std::vector<Monomial> gens;
    for (const auto& c : data.circuits) gens.push_back(c.m);
    out.infinite = true;
    out.verdict.kind = BasisVerdictKind::WrongCardinality;
    out.verdict.witness = Monomial::variable(v, *missing_pure_power(gens, v));
    out.quotient_dim = quotient_dimension(j).total;
    out.verdict.dimension = out.quotient_dim;
    return out;
  }
  out.lower = std::move(oi.lower);
  out.verdict = monomial_set_is_basis(j, out.lower, opt.path);
  out.quotient_dim = out.verdict.dimension;
  out.independent = out.verdict.kind == BasisVerdictKind::Basis || out.verdict.kind == BasisVerdictKind::NotSpanning;
  return out;
}

Monomial relabel(const Monomial& m, const std::vector<std::size_t>& var_map, std::size_t nvars) {
  Monomial out(nvars);
  for (std::size_t i = 0; i < m.nvars(); ++i) out.set_exponent(var_map[i], m.exponent(i));
  return out;
}

}  // namespace

NbcReport nbc_check(const Matroid& m, const StandardOrdering& so, FieldTag field, const NbcOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  NbcReport rep;
  rep.ordering = so.ordering.labels(m);
  rep.field = field.name();
  FhVectors fh = f_h_vectors(m, so.ordering);
  rep.h = fh.h;
  rep.h_sum = fh.h_sum();
  const std::size_t v = m.size() - m.rank();

  auto comps = m.connected_components();
  rep.components = comps.size();
  if (comps.size() <= 1) {
    PartResult part = check_connected(m, so, field, opt);
    rep.infinite_lower = part.infinite;
    rep.lower_size = part.lower.size();
    rep.quotient_dim = part.quotient_dim;
    rep.independent = part.independent;
    rep.verdict = part.verdict.kind;
    rep.witness = part.verdict.witness;
    rep.lower = std::move(part.lower);
  } else {
    std::vector<Monomial> lower{Monomial(v)};
    rep.quotient_dim = 1;
    rep.independent = true;
    rep.verdict = BasisVerdictKind::Basis;
    for (ElementSet comp : comps) {
      Matroid mc = m.restrict_to(comp);
      StandardOrdering soc = StandardOrdering::make(mc, so.ordering.restricted(comp));
      PartResult part = check_connected(mc, soc, field, opt);
      // local variable k is the k-th cobasis element of the component
      std::vector<std::size_t> var_map;
      std::vector<std::size_t> members = comp.elements();
      for (std::size_t k = 0; k < part.nvars; ++k) var_map.push_back(so.ordering.position_of(members[soc.ordering.element_at(k)]));
      rep.quotient_dim *= part.quotient_dim;
      rep.independent = rep.independent && part.independent;
      rep.infinite_lower = rep.infinite_lower || part.infinite;
      if (part.verdict.kind != BasisVerdictKind::Basis && rep.verdict == BasisVerdictKind::Basis) {
        rep.verdict = part.verdict.kind;
        if (part.verdict.witness) rep.witness = relabel(*part.verdict.witness, var_map, v);
      }
      std::vector<Monomial> next;
      for (const auto& a : lower)
        for (const auto& b : part.lower) next.push_back(a * relabel(b, var_map, v));
      lower = std::move(next);
    }
    std::sort(lower.begin(), lower.end());
    rep.lower_size = rep.infinite_lower ? 0 : lower.size();
    rep.lower = std::move(lower);
  }
  rep.cardinality_ok = !rep.infinite_lower && static_cast<std::int64_t>(rep.lower_size) == rep.h_sum;
  rep.basis = rep.verdict == BasisVerdictKind::Basis && !rep.infinite_lower;
  if (!opt.keep_lower) rep.lower.clear();
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool has_cocircuit_pair(const Matroid& m, const StandardOrdering& so) {
  const std::size_t n = m.size(), r = m.rank();
  if (r == 0 || r == n) return false;
  ElementSet pair = ElementSet::single(so.ordering.element_at(n - 1)).with(so.ordering.element_at(n - r - 1));
  const auto& cocs = m.cocircuits();
  return std::find(cocs.begin(), cocs.end(), pair) != cocs.end();
}

DecompositionReport decomposition_check(const Matroid& m, const StandardOrdering& so, FieldTag field) {
  if (!has_cocircuit_pair(m, so)) throw Error(Errc::NoCocircuitPair, "{e_n, e_(n-r)} is not a cocircuit");
  const std::size_t n = m.size(), r = m.rank(), v = n - r;
  const Ordering& ord = so.ordering;
  const std::size_t en = ord.element_at(n - 1);
  const std::size_t enr = ord.element_at(v - 1);

  Ordering minor_ord = ord.without(en);
  Matroid del = m.delete_element(en);
  Matroid con = m.contract(en);
  StandardOrdering so_del = StandardOrdering::make(del, minor_ord);
  StandardOrdering so_con = StandardOrdering::make(con, minor_ord);
  auto down = [&](ElementSet s) {  // M indices -> minor indices, en dropped
    ElementSet out;
    s.without(en).for_each([&](std::size_t e) { out = out.with(e > en ? e - 1 : e); });
    return out;
  };
  auto down_elem = [&](std::size_t e) { return e > en ? e - 1 : e; };

  DecompositionReport rep;
  OrderIdeals l_m = order_ideals(m, so);
  OrderIdeals l_del = order_ideals(del, so_del);
  OrderIdeals l_con = order_ideals(con, so_con);
  rep.lower = l_m.lower.size();
  rep.lower_deletion = l_del.lower.size();
  rep.lower_contraction = l_con.lower.size();
  std::vector<Monomial> joined;
  for (const auto& a : l_del.lower) {
    std::vector<std::uint16_t> e = a.exponents();
    e.push_back(0);
    joined.emplace_back(std::move(e));
  }
  for (const auto& a : l_con.lower) joined.push_back(a * Monomial::variable(v, v - 1));
  std::sort(joined.begin(), joined.end());
  bool disjoint = std::adjacent_find(joined.begin(), joined.end()) == joined.end();
  rep.split_holds = disjoint && joined == l_m.lower;

  rep.deletion_cocircuits = true;
  rep.contraction_cocircuits = true;
  so.basis.without(en).for_each([&](std::size_t e) {
    ElementSet coc = m.fundamental_cocircuit(so.basis, e);
    if (del.fundamental_cocircuit(so_del.basis, down_elem(e)) != down(coc.without(enr)))
      rep.deletion_cocircuits = false;
    if (con.fundamental_cocircuit(so_con.basis, down_elem(e)) != down(coc)) rep.contraction_cocircuits = false;
  });

  MonomialData d_m = dj_and_mc(m, so);
  MonomialData d_con = dj_and_mc(con, so_con);
  const Monomial xv = Monomial::variable(v, v - 1);
  auto find_con = [&](ElementSet c) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < d_con.circuits.size(); ++i)
      if (d_con.circuits[i].circuit == c) return i;
    return std::nullopt;
  };
  std::optional<std::vector<Polynomial>> p_m, p_con;
  if (field.characteristic() == 2) {
    p_m = circuit_polynomials(m, lsop(m, so, field), d_m);
    p_con = circuit_polynomials(con, lsop(con, so_con, field), d_con);
    rep.polynomial_relations = true;
  }
  rep.monomial_relations = true;
  for (std::size_t i = 0; i < d_m.circuits.size(); ++i) {
    const auto& c = d_m.circuits[i];
    bool type_one = c.circuit.contains(en);
    auto k = find_con(down(c.circuit));
    if (!k) {
      rep.monomial_relations = false;
      continue;
    }
    Monomial expected = type_one ? xv * d_con.circuits[*k].m : d_con.circuits[*k].m;
    if (c.m != expected) rep.monomial_relations = false;
    if (p_m) {
      const Polynomial& pc = (*p_con)[*k];
      Polynomial expected_p = type_one ? pc * Polynomial::monomial(field, xv) : pc;
      if (!((*p_m)[i] == expected_p)) rep.polynomial_relations = false;
    }
  }
  return rep;
}

}  // namespace matroidlab
