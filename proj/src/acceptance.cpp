#include "matroidlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "matroidlab/bc_complex.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/groebner.hpp"
#include "matroidlab/incidence.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/search.hpp"

namespace matroidlab {

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> out;
  auto uni = [&](std::size_t r, std::size_t n) {
    out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", Matroid::uniform(r, n), std::nullopt});
  };
  uni(1, 3);
  uni(2, 3);
  uni(3, 4);
  uni(4, 4);
  uni(4, 5);
  for (const char* name : {"K4", "K33", "DualK33", "R10"}) {
    NamedMatroid nm = named_matroid(name);
    out.push_back({name, nm.matroid, nm.ordering});
  }
  return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t max_total, std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_parts) return;
    for (std::size_t k = 2; k <= left; ++k) {
      cur.push_back(k);
      self(self, left - k);
      cur.pop_back();
    }
  };
  rec(rec, max_total);
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail;
  out.precision(2);
  out << std::fixed << "  (" << r.seconds << " s)";
  return out.str();
}

namespace {

std::string comp_name(const std::vector<std::size_t>& c) {
  std::string s;
  for (std::size_t k : c) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

StandardOrdering ordering_for_basis(const Matroid& m, std::size_t basis_idx) {
  std::uint64_t per = standard_ordering_count(m) / m.bases().size();
  return standard_ordering_at(m, basis_idx * per);
}

std::vector<std::size_t> spread(std::size_t total, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(total, k); ++i) out.push_back(i * total / std::min(total, k));
  return out;
}

const NbcOptions kFast{BasisPath::Macaulay, true};

// each returns (pass, detail)
using Outcome = std::pair<bool, std::string>;

Outcome criterion1() {
  for (std::size_t n = 1; n <= 8; ++n) {
    Matroid m = Matroid::uniform(n, n);
    StandardOrdering so = StandardOrdering::make(m, Ordering::natural(n));
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
      ThetaSystem th = lsop(m, so, f);
      for (std::size_t i = 0; i < n; ++i)
        if (!(th.forms[i] == Polynomial::variable(f, n, i)))
          return {false, "U(" + std::to_string(n) + "," + std::to_string(n) + ") theta is not the variables"};
      NbcReport rep = nbc_check(m, so, f, kFast);
      if (!rep.basis || rep.lower != std::vector<Monomial>{Monomial(0)})
        return {false, "U(n,n) failed at n=" + std::to_string(n)};
    }
  }
  return {true, "U(n,n), n=1..8: theta = variables, L = {1}, Basis"};
}

Outcome criterion2() {
  for (std::size_t n = 3; n <= 8; ++n) {
    Matroid m = Matroid::uniform(n - 1, n);
    StandardOrdering so = StandardOrdering::make(m, Ordering::natural(n));
    std::vector<std::int64_t> h(n, 1);
    h.back() = 0;
    std::vector<Monomial> lower;
    for (unsigned k = 0; k + 1 < n; ++k) lower.push_back(Monomial::variable(1, 0, k));
    std::sort(lower.begin(), lower.end());
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
      NbcReport rep = nbc_check(m, so, f, kFast);
      if (rep.h != h || rep.lower != lower || !rep.basis)
        return {false, "U(" + std::to_string(n - 1) + "," + std::to_string(n) + ") over " + f.name()};
    }
    ThetaSystem th = lsop(m, so, FieldTag::gf2());
    for (std::size_t j = 1; j < n; ++j) {
      Polynomial want = Polynomial::variable(FieldTag::gf2(), n, 0) + Polynomial::variable(FieldTag::gf2(), n, j);
      if (!(th.forms[j - 1] == want)) return {false, "theta of U(n-1,n) is not x1 + xj"};
    }
  }
  return {true, "U(n-1,n), n=3..8: h = (1..1,0), L = {1..x1^(n-2)}, Basis over gf2 and Q"};
}

Outcome criterion3() {
  NamedMatroid nm = named_matroid("DualK33");
  StandardOrdering so = StandardOrdering::make(nm.matroid, *nm.ordering);
  const char* listed[] = {"1",     "x1",    "x2",    "x3",       "x4",       "x5",       "x1^2",
                          "x1 x2", "x1 x4", "x2^2",  "x2 x3",    "x2 x5",    "x3 x4",    "x3 x5",
                          "x4 x5", "x1^2 x2", "x1^2 x4", "x2^2 x3", "x2^2 x5", "x3 x4 x5"};
  std::vector<Monomial> want;
  for (const char* s : listed) want.push_back(Monomial::parse(5, s));
  std::sort(want.begin(), want.end());
  NbcReport rep = nbc_check(nm.matroid, so, FieldTag::gf2(), {BasisPath::Groebner, true});
  bool ok = rep.lower == want && rep.basis && rep.h_sum == 20;
  return {ok, "DualK33 over gf2: |L| = " + std::to_string(rep.lower_size) + (rep.lower == want ? " (matches the list)" : " (differs)") +
                  ", sum h = " + std::to_string(rep.h_sum) + ", " + (rep.basis ? "Basis" : "not Basis")};
}

Outcome criterion4(const AcceptanceOptions& opt) {
  Matroid m = named_matroid("R10").matroid;
  std::size_t b = m.bases().size();
  std::uint64_t total = standard_ordering_count(m);
  SearchOptions so;
  so.workers = opt.workers;
  SearchReport sample = search_orderings(m, SearchPolicy::parse("sample:10000:1"), so);
  bool ok = b == 162 && total == 2332800 && sample.examined == 10000 && sample.basis == 0;
  std::string detail = "R10: " + std::to_string(b) + " bases, " + std::to_string(total) + " orderings, sample " +
                       std::to_string(sample.examined) + " with " + std::to_string(sample.basis) + " Basis";
  if (opt.exhaustive) {
    so.workers = std::max<std::size_t>(4, opt.workers);
    so.window = 65536;
    SearchReport all = search_orderings(m, SearchPolicy::parse("exhaustive"), so);
    ok = ok && all.examined == total && all.basis == 0;
    detail += "; exhaustive " + std::to_string(all.examined) + " with " + std::to_string(all.basis) + " Basis";
  }
  return {ok, detail};
}

Outcome criterion5() {
  std::size_t checked = 0;
  for (const auto& c : compositions(12, 4)) {
    for (int kind = 0; kind < 2; ++kind) {
      LabelledMatroid lm = kind == 0 ? theta_matroid(c) : phi_matroid(c);
      NbcReport rep = nbc_check(lm.matroid, lm.ordering, FieldTag::gf2(), kFast);
      if (!rep.basis) return {false, std::string(kind == 0 ? "theta " : "phi ") + comp_name(c) + " is not Basis"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " theta and phi fixtures, all Basis"};
}

Outcome criterion6() {
  std::size_t runs = 0, subsets = 0;
  for (const auto& fx : standard_fixtures()) {
    const Matroid& m = fx.matroid;
    for (std::size_t bi : spread(m.bases().size(), 5)) {
      StandardOrdering so = ordering_for_basis(m, bi);
      for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
        RankReport rr = check_rank_identities(m, so, f);
        if (!rr.pass) return {false, fx.name + " rank identities fail over " + f.name()};
        SignedIncidenceMatrix coc = full_cocircuit_matrix(m, so, f);
        bool agree = true;
        for_each_k_subset(m.size(), m.rank(), [&](ElementSet s) {
          ++subsets;
          agree = check_basis_nonsingular(m, coc, s) == m.is_basis(s);
          return agree;
        });
        if (!agree) return {false, fx.name + " nonsingularity disagrees with independence over " + f.name()};
        ++runs;
      }
    }
  }
  return {true, std::to_string(runs) + " (fixture, basis, field) runs, " + std::to_string(subsets) + " subsets checked"};
}

std::vector<Fixture> family_samples() {
  std::vector<Fixture> out;
  for (auto c : std::vector<std::vector<std::size_t>>{{3, 3, 4}, {2, 2, 2}, {4, 5}}) {
    LabelledMatroid lm = theta_matroid(c);
    out.push_back({"theta " + comp_name(c), lm.matroid, lm.ordering.ordering});
  }
  for (auto c : std::vector<std::vector<std::size_t>>{{3, 2, 4}, {3, 3, 3, 3}}) {
    LabelledMatroid lm = phi_matroid(c);
    out.push_back({"phi " + comp_name(c), lm.matroid, lm.ordering.ordering});
  }
  return out;
}

Outcome criterion7() {
  std::size_t eq8 = 0, eq9 = 0;
  auto all = standard_fixtures();
  for (auto& f : family_samples()) all.push_back(f);
  for (const auto& fx : all) {
    const Matroid& m = fx.matroid;
    Ordering ord = fx.ordering.value_or(Ordering::natural(m.size()));
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (m.is_loop(e) || m.is_coloop(e)) continue;
      if (!h_recursion_check(m, e, ord).holds) return {false, "h recursion fails on " + fx.name + " at " + m.label(e)};
      ++eq8;
    }
    // orderings of the fixture that meet the 2-cocircuit hypothesis
    std::uint64_t total = standard_ordering_count(m);
    std::uint64_t step = std::max<std::uint64_t>(1, total / 400);
    for (std::uint64_t i = 0; i < total; i += step) {
      StandardOrdering so = standard_ordering_at(m, i);
      if (!has_cocircuit_pair(m, so)) continue;
      if (!decomposition_check(m, so, FieldTag::gf2()).holds())
        return {false, "L split fails on " + fx.name + " ordering " + so.ordering.format(m)};
      ++eq9;
    }
  }
  std::size_t families = 0, without_pair = 0;
  for (const auto& c : compositions(12, 4)) {
    for (int kind = 0; kind < 2; ++kind) {
      LabelledMatroid lm = kind == 0 ? theta_matroid(c) : phi_matroid(c);
      std::string name = std::string(kind == 0 ? "theta " : "phi ") + comp_name(c);
      if (!has_cocircuit_pair(lm.matroid, lm.ordering)) {
        ++without_pair;
        continue;
      }
      if (!decomposition_check(lm.matroid, lm.ordering, FieldTag::gf2()).holds()) return {false, "split fails on " + name};
      ++families;
    }
  }
  return {true, std::to_string(eq8) + " h recursions; L split on " + std::to_string(eq9) + " fixture orderings and " +
                    std::to_string(families) + " theta/phi labellings (" + std::to_string(without_pair) +
                    " labellings lack the pair and were skipped)"};
}

// outcome of one basis test: verdict, or the error it raised
std::string basis_outcome(const Ideal& j, const std::vector<Monomial>& s, BasisPath path) {
  try {
    BasisVerdict v = monomial_set_is_basis(j, s, path);
    return std::string(verdict_name(v.kind)) + " " + std::to_string(v.dimension) + " " +
           (v.witness ? v.witness->to_string() : "-");
  } catch (const Error& e) {
    return errc_name(e.code());
  }
}

Ideal random_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 1000000);
  const FieldTag fields[] = {FieldTag::gf2(), FieldTag::gfp(3), FieldTag::rationals()};
  Ideal j{fields[pick(rng) % 3], static_cast<std::size_t>(1 + pick(rng) % 3), {}};
  std::size_t count = 1 + pick(rng) % (j.nvars + 2);
  bool artinian = pick(rng) % 2 == 0;
  for (std::size_t i = 0; i < count; ++i) {
    unsigned d = 1 + pick(rng) % 3;
    Polynomial p(j.field, j.nvars);
    if (artinian && i < j.nvars) p = Polynomial::monomial(j.field, Monomial::variable(j.nvars, i, d));
    std::vector<Monomial> degree_d;
    for_each_k_subset(j.nvars + d - 1, d, [&](ElementSet s) {  // stars and bars
      Monomial m(j.nvars);
      std::size_t var = 0, seen = 0;
      for (std::size_t k = 0; k < j.nvars + d - 1; ++k) {
        if (s.contains(k)) {
          m.set_exponent(var, m.exponent(var) + 1);
          ++seen;
        } else {
          ++var;
        }
      }
      degree_d.push_back(m);
      return true;
    });
    for (const auto& m : degree_d)
      if (pick(rng) % 3 == 0) p = p + Polynomial::monomial(j.field, m, j.field.from_int(pick(rng) % 7 - 3));
    if (!p.is_zero()) j.generators.push_back(p);
  }
  return j;
}

Outcome criterion8() {
  std::size_t coc_checks = 0, fixture_pairs = 0, random_pairs = 0;
  auto all = standard_fixtures();
  for (auto& f : family_samples()) all.push_back(f);
  for (const auto& fx : all) {
    if (fx.matroid.cocircuits() != fx.matroid.cocircuits_by_transversals())
      return {false, "cocircuit paths differ on " + fx.name};
    ++coc_checks;
    const Matroid& m = fx.matroid;
    std::uint64_t total = standard_ordering_count(m);
    for (std::uint64_t i : spread(total, 3)) {
      StandardOrdering so = standard_ordering_at(m, i);
      for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
        ThetaSystem th = lsop(m, so, f);
        MonomialData data = dj_and_mc(m, so);
        Ideal j{f, m.size() - m.rank(), circuit_polynomials(m, th, data)};
        std::vector<Monomial> lower = order_ideals(data, j.nvars).lower;
        if (basis_outcome(j, lower, BasisPath::Groebner) != basis_outcome(j, lower, BasisPath::Macaulay))
          return {false, "basis paths differ on " + fx.name};
        ++fixture_pairs;
      }
    }
  }
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    Ideal j = random_ideal(rng);
    std::vector<Monomial> s;
    try {
      s = standard_monomials(groebner_basis(j), j.nvars);
    } catch (const Error&) {
    }
    std::uniform_int_distribution<int> pick(0, 1000000);
    Monomial extra = Monomial::variable(j.nvars, pick(rng) % j.nvars, 1 + pick(rng) % 2);
    switch (pick(rng) % 4) {
      case 1:
        if (!s.empty()) s.erase(s.begin() + pick(rng) % s.size());
        break;
      case 2:
        if (std::find(s.begin(), s.end(), extra) == s.end()) s.push_back(extra);
        break;
      case 3:
        if (!s.empty()) s[pick(rng) % s.size()] = extra;
        break;
      default:
        break;
    }
    if (basis_outcome(j, s, BasisPath::Groebner) != basis_outcome(j, s, BasisPath::Macaulay))
      return {false, "basis paths differ on random ideal " + std::to_string(k)};
    ++random_pairs;
  }
  return {true, std::to_string(coc_checks) + " cocircuit comparisons, " + std::to_string(fixture_pairs) +
                    " fixture ideals, " + std::to_string(random_pairs) + " random ideals"};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  std::size_t runs = 0;
  auto all = standard_fixtures();
  for (auto& f : family_samples()) all.push_back(f);
  for (const auto& fx : all) {
    const Matroid& m = fx.matroid;
    FhVectors base = f_h_vectors(m, Ordering::natural(m.size()));
    for (int k = 0; k < 5; ++k) {
      std::vector<std::size_t> p(m.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
      std::shuffle(p.begin(), p.end(), rng);
      if (!(f_h_vectors(m, Ordering(p)) == base)) return {false, fx.name + " f/h vectors depend on the ordering"};
      ++runs;
    }
  }
  return {true, std::to_string(runs) + " reorderings with identical f and h vectors"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<std::function<Outcome()>> checks = {
      criterion1, criterion2, criterion3, [&] { return criterion4(opt); },
      criterion5, criterion6, criterion7, criterion8, criterion9};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    int id = static_cast<int>(i + 1);
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    CriterionResult r;
    r.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [pass, detail] = checks[i]();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace matroidlab
