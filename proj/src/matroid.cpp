#include "matroidlab/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "matroidlab/echelon.hpp"
#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

std::atomic<std::size_t> g_enumeration_cap{20};

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(Errc::DuplicateLabels, "ground set labels repeat");
}

void check_budget(std::size_t n, const char* what) {
  if (n > g_enumeration_cap.load()) {
    throw Error(Errc::Overbudget, std::string(what) + " enumeration refused: ground set of " + std::to_string(n) +
                                      " exceeds the cap of " + std::to_string(g_enumeration_cap.load()));
  }
}

// Renumbers the elements of `s` inside `keep` to consecutive indices.
ElementSet compress(ElementSet s, ElementSet keep) {
  std::uint64_t out = 0;
  std::size_t k = 0;
  keep.for_each([&](std::size_t e) {
    if (s.contains(e)) out |= std::uint64_t{1} << k;
    ++k;
  });
  return ElementSet(out);
}

std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> out;
  for (ElementSet s : sets) {
    if (s.empty()) continue;
    bool minimal = std::none_of(out.begin(), out.end(), [&](ElementSet c) { return c.subset_of(s); });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class RankFn>
std::vector<ElementSet> enumerate_circuits(std::size_t n, std::size_t full_rank, RankFn&& rank_of) {
  std::vector<ElementSet> out;
  for (std::size_t k = 1; k <= std::min(n, full_rank + 1); ++k) {
    for_each_k_subset(n, k, [&](ElementSet s) {
      if (rank_of(s) != k - 1) return true;
      bool minimal = true;
      s.for_each([&](std::size_t e) {
        if (minimal && rank_of(s.without(e)) != k - 1) minimal = false;
      });
      if (minimal) out.push_back(s);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::size_t column_rank(const Matrix& m, ElementSet cols) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Echelon<Ops> ech(ops, m.rows());
    std::size_t r = 0;
    cols.for_each([&](std::size_t c) {
      if (r == m.rows()) return;
      typename Echelon<Ops>::Row v;
      v.reserve(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(ops.from(m.at(i, c)));
      if (ech.insert(std::move(v))) ++r;
    });
    return r;
  });
}

// Greedy basis in index order.
ElementSet greedy_basis(const Matroid& m) {
  ElementSet b;
  for (std::size_t e = 0; e < m.size() && b.size() < m.rank(); ++e) {
    if (m.is_independent(b.with(e))) b = b.with(e);
  }
  return b;
}

std::vector<std::size_t> to_indices(ElementSet s) { return s.elements(); }

// Keeps a maximal independent set of rows.
Matrix independent_rows(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Echelon<Ops> ech(ops, m.cols());
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      typename Echelon<Ops>::Row v;
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(ops.from(m.at(r, c)));
      if (ech.insert(std::move(v))) keep.push_back(r);
    }
    return m.select_rows(keep);
  });
}

}  // namespace

std::size_t enumeration_cap() { return g_enumeration_cap.load(); }
void set_enumeration_cap(std::size_t cap) { g_enumeration_cap.store(std::min<std::size_t>(cap, 64)); }

struct Matroid::Cache {
  std::vector<std::uint64_t> gf2_columns;  // row bitmask per column, GF(2) column backend only
  std::once_flag bases_once, circuits_once, cocircuits_once, rep_once, binary_once;
  bool binary = false;
  std::vector<ElementSet> bases, circuits, cocircuits;
  std::optional<Matrix> representation;
};

Matroid::Matroid(std::vector<std::string> labels, Backend backend)
    : labels_(std::move(labels)), backend_(std::move(backend)), cache_(std::make_shared<Cache>()) {
  if (labels_.size() > 64) throw Error(Errc::Overbudget, "ground sets are limited to 64 elements");
  check_unique(labels_);
  init_rank();
}

void Matroid::init_rank() {
  if (auto* col = std::get_if<ColumnBackend>(&backend_)) {
    const Matrix& m = col->matrix;
    if (m.cols() != labels_.size()) throw Error(Errc::BadSize, "matrix width differs from ground set size");
    if (m.field().kind == FieldKind::GF2 && m.rows() <= 64) {
      cache_->gf2_columns.resize(m.cols(), 0);
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
          if (sgn(m.at(r, c)) != 0) cache_->gf2_columns[c] |= std::uint64_t{1} << r;
    }
  }
  full_rank_ = 0;
  full_rank_ = rank(ground_set());
}

Matroid Matroid::from_matrix(Matrix m) {
  std::vector<std::string> labels = m.col_labels().empty() ? default_labels(m.cols()) : m.col_labels();
  m.set_col_labels(labels);
  return Matroid(std::move(labels), ColumnBackend{std::move(m)});
}

Matroid Matroid::uniform(std::size_t r, std::size_t n, std::vector<std::string> labels) {
  if (r > n) throw Error(Errc::BadRank, "U(" + std::to_string(r) + "," + std::to_string(n) + ") needs r <= n");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw Error(Errc::BadSize, "uniform matroid label count");
  return Matroid(std::move(labels), UniformBackend{r});
}

Matroid Matroid::from_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                            std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(edges.size());
  if (labels.size() != edges.size()) throw Error(Errc::BadSize, "edge label count");
  GraphicBackend g;
  std::map<std::string, std::size_t> vertex_index;
  auto vertex = [&](const std::string& v) {
    auto [it, inserted] = vertex_index.emplace(v, g.vertices.size());
    if (inserted) g.vertices.push_back(v);
    return it->second;
  };
  for (const auto& [u, v] : edges) {
    std::size_t a = vertex(u);
    std::size_t b = vertex(v);
    g.edges.emplace_back(a, b);
  }
  return Matroid(std::move(labels), std::move(g));
}

Matroid Matroid::from_circuits(std::vector<std::string> labels, std::vector<ElementSet> circuits) {
  ElementSet ground = ElementSet::first(labels.size());
  for (ElementSet c : circuits) {
    if (c.empty() || !c.subset_of(ground)) throw Error(Errc::BadParams, "circuit outside the ground set");
  }
  return Matroid(std::move(labels), CircuitListBackend{minimal_sets(std::move(circuits))});
}

std::size_t Matroid::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::UnknownName, "no element labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string Matroid::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t e) {
    if (!first) out += ",";
    out += labels_[e];
    first = false;
  });
  return out + "}";
}

std::string Matroid::kind_name() const {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ColumnBackend>) return "column";
        if constexpr (std::is_same_v<T, GraphicBackend>) return "graphic";
        if constexpr (std::is_same_v<T, UniformBackend>) return "uniform";
        return "circuits";
      },
      backend_);
}

std::size_t Matroid::rank(ElementSet s) const {
  return std::visit(
      [&](const auto& b) -> std::size_t {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ColumnBackend>) {
          if (!cache_->gf2_columns.empty()) {
            std::uint64_t basis[64] = {};
            std::size_t r = 0;
            s.for_each([&](std::size_t c) {
              std::uint64_t v = cache_->gf2_columns[c];
              while (v) {
                int top = 63 - std::countl_zero(v);
                if (!basis[top]) {
                  basis[top] = v;
                  ++r;
                  return;
                }
                v ^= basis[top];
              }
            });
            return r;
          }
          return column_rank(b.matrix, s);
        } else if constexpr (std::is_same_v<T, GraphicBackend>) {
          UnionFind uf(b.vertices.size());
          std::size_t r = 0;
          s.for_each([&](std::size_t e) {
            if (uf.unite(b.edges[e].first, b.edges[e].second)) ++r;
          });
          return r;
        } else if constexpr (std::is_same_v<T, UniformBackend>) {
          return std::min(s.size(), b.r);
        } else {
          ElementSet indep;
          s.for_each([&](std::size_t e) {
            ElementSet cand = indep.with(e);
            bool ok = std::none_of(b.circuits.begin(), b.circuits.end(),
                                   [&](ElementSet c) { return c.subset_of(cand); });
            if (ok) indep = cand;
          });
          return indep.size();
        }
      },
      backend_);
}

const std::vector<ElementSet>& Matroid::bases() const {
  std::call_once(cache_->bases_once, [&] {
    check_budget(size(), "basis");
    std::vector<ElementSet> out;
    for_each_k_subset(size(), full_rank_, [&](ElementSet s) {
      if (is_independent(s)) out.push_back(s);
      return true;
    });
    std::sort(out.begin(), out.end());
    cache_->bases = std::move(out);
  });
  return cache_->bases;
}

const std::vector<ElementSet>& Matroid::circuits() const {
  std::call_once(cache_->circuits_once, [&] {
    if (auto* cl = std::get_if<CircuitListBackend>(&backend_)) {
      cache_->circuits = cl->circuits;
      return;
    }
    check_budget(size(), "circuit");
    if (auto* u = std::get_if<UniformBackend>(&backend_)) {
      std::vector<ElementSet> out;
      for_each_k_subset(size(), u->r + 1, [&](ElementSet s) {
        out.push_back(s);
        return true;
      });
      std::sort(out.begin(), out.end());
      cache_->circuits = std::move(out);
      return;
    }
    cache_->circuits = enumerate_circuits(size(), full_rank_, [&](ElementSet s) { return rank(s); });
  });
  return cache_->circuits;
}

const std::vector<ElementSet>& Matroid::cocircuits() const {
  std::call_once(cache_->cocircuits_once, [&] {
    check_budget(size(), "cocircuit");
    const ElementSet ground = ground_set();
    const std::size_t dual_rank = size() - full_rank_;
    cache_->cocircuits = enumerate_circuits(size(), dual_rank, [&](ElementSet s) {
      return s.size() - full_rank_ + rank(ground - s);
    });
  });
  return cache_->cocircuits;
}

std::vector<ElementSet> Matroid::cocircuits_by_transversals() const {
  const auto& bs = bases();
  std::vector<ElementSet> found;
  for (std::size_t k = 1; k <= size(); ++k) {
    for_each_k_subset(size(), k, [&](ElementSet s) {
      for (ElementSet c : found) {
        if (c.subset_of(s)) return true;
      }
      bool meets_all = std::all_of(bs.begin(), bs.end(), [&](ElementSet b) { return b.intersects(s); });
      if (meets_all) found.push_back(s);
      return true;
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

Matroid Matroid::dual() const {
  const std::size_t n = size();
  if (auto* u = std::get_if<UniformBackend>(&backend_)) return uniform(n - u->r, n, labels_);
  if (std::holds_alternative<CircuitListBackend>(backend_)) return from_circuits(labels_, cocircuits());
  std::optional<Matrix> rep;
  if (auto* col = std::get_if<ColumnBackend>(&backend_)) {
    rep = col->matrix;
  } else {
    rep = signed_representation();
  }
  const Matrix& a = *rep;
  ElementSet basis = greedy_basis(*this);
  std::vector<std::size_t> bcols = to_indices(basis);
  Matrix sf = standard_form(a, bcols);
  std::vector<std::size_t> nonbasis = to_indices(ground_set() - basis);
  Matrix d(nonbasis.size(), n, a.field());
  for (std::size_t i = 0; i < nonbasis.size(); ++i) {
    d.set(i, nonbasis[i], Scalar(1));
    for (std::size_t k = 0; k < bcols.size(); ++k) d.set(i, bcols[k], a.field().neg(sf.at(k, nonbasis[i])));
  }
  d.set_col_labels(labels_);
  return from_matrix(std::move(d));
}

Matroid Matroid::restrict_to(ElementSet keep) const {
  keep = keep & ground_set();
  std::vector<std::size_t> kept = to_indices(keep);
  std::vector<std::string> labels;
  for (std::size_t e : kept) labels.push_back(labels_[e]);
  return std::visit(
      [&](const auto& b) -> Matroid {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ColumnBackend>) {
          Matrix m = b.matrix.select_columns(kept);
          return from_matrix(std::move(m));
        } else if constexpr (std::is_same_v<T, GraphicBackend>) {
          GraphicBackend g;
          g.vertices = b.vertices;
          for (std::size_t e : kept) g.edges.push_back(b.edges[e]);
          return Matroid(labels, std::move(g));
        } else if constexpr (std::is_same_v<T, UniformBackend>) {
          return uniform(std::min(b.r, kept.size()), kept.size(), labels);
        } else {
          std::vector<ElementSet> cs;
          for (ElementSet c : b.circuits) {
            if (c.subset_of(keep)) cs.push_back(compress(c, keep));
          }
          return from_circuits(labels, std::move(cs));
        }
      },
      backend_);
}

Matroid Matroid::delete_element(std::size_t e) const {
  if (e >= size()) throw Error(Errc::BadParams, "element out of range");
  return restrict_to(ground_set().without(e));
}

Matroid Matroid::contract(std::size_t e) const {
  if (e >= size()) throw Error(Errc::BadParams, "element out of range");
  if (is_loop(e)) return delete_element(e);
  const ElementSet keep = ground_set().without(e);
  std::vector<std::string> labels;
  keep.for_each([&](std::size_t x) { labels.push_back(labels_[x]); });
  return std::visit(
      [&](const auto& b) -> Matroid {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ColumnBackend>) {
          const Matrix& a = b.matrix;
          const FieldTag& f = a.field();
          std::size_t pr = 0;
          while (sgn(a.at(pr, e)) == 0) ++pr;
          Matrix out(a.rows() - 1, a.cols() - 1, f);
          Scalar inv = f.inv(a.at(pr, e));
          std::size_t orow = 0;
          for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pr) continue;
            Scalar factor = f.mul(a.at(r, e), inv);
            std::size_t ocol = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) {
              if (c == e) continue;
              out.set(orow, ocol++, f.sub(a.at(r, c), f.mul(factor, a.at(pr, c))));
            }
            ++orow;
          }
          out.set_col_labels(labels);
          return from_matrix(std::move(out));
        } else if constexpr (std::is_same_v<T, GraphicBackend>) {
          GraphicBackend g;
          g.vertices = b.vertices;
          auto [u, v] = b.edges[e];
          for (std::size_t x = 0; x < b.edges.size(); ++x) {
            if (x == e) continue;
            auto [a1, a2] = b.edges[x];
            if (a1 == v) a1 = u;
            if (a2 == v) a2 = u;
            g.edges.emplace_back(a1, a2);
          }
          return Matroid(labels, std::move(g));
        } else if constexpr (std::is_same_v<T, UniformBackend>) {
          return uniform(b.r - 1, size() - 1, labels);
        } else {
          std::vector<ElementSet> cs;
          for (ElementSet c : b.circuits) cs.push_back(compress(c.without(e), keep));
          return from_circuits(labels, minimal_sets(std::move(cs)));
        }
      },
      backend_);
}

ElementSet Matroid::fundamental_circuit(ElementSet basis, std::size_t e) const {
  if (basis.contains(e)) throw Error(Errc::NotCobasisElement, labels_[e] + " lies in the basis");
  if (!is_basis(basis)) throw Error(Errc::BadParams, format(basis) + " is not a basis");
  ElementSet both = basis.with(e);
  ElementSet out = ElementSet::single(e);
  basis.for_each([&](std::size_t b) {
    if (rank(both.without(b)) == full_rank_ && is_independent(both.without(b))) out = out.with(b);
  });
  return out;
}

ElementSet Matroid::fundamental_cocircuit(ElementSet basis, std::size_t b) const {
  if (!basis.contains(b)) throw Error(Errc::NotBasisElement, labels_[b] + " is not in the basis");
  if (!is_basis(basis)) throw Error(Errc::BadParams, format(basis) + " is not a basis");
  ElementSet out = ElementSet::single(b);
  ElementSet rest = basis.without(b);
  (ground_set() - basis).for_each([&](std::size_t e) {
    if (is_independent(rest.with(e))) out = out.with(e);
  });
  return out;
}

std::vector<ElementSet> Matroid::connected_components() const {
  UnionFind uf(size());
  for (ElementSet c : circuits()) {
    std::size_t first = c.min();
    c.for_each([&](std::size_t e) { uf.unite(first, e); });
  }
  std::map<std::size_t, ElementSet> blocks;
  for (std::size_t e = 0; e < size(); ++e) {
    auto& b = blocks[uf.find(e)];
    b = b.with(e);
  }
  std::vector<ElementSet> out;
  for (auto& [root, b] : blocks) out.push_back(b);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
  return out;
}

namespace {

std::optional<Matrix> validated_signing(const Matroid& m, Matrix candidate) {
  try {
    if (!is_totally_unimodular(candidate)) return std::nullopt;
  } catch (const Error& err) {
    if (err.code() == Errc::Overbudget) return std::nullopt;
    throw;
  }
  candidate.set_col_labels(m.labels());
  Matroid check = Matroid::from_matrix(candidate);
  if (check.rank() != m.rank()) return std::nullopt;
  for (ElementSet b : m.bases()) {
    if (!check.is_independent(b)) return std::nullopt;
  }
  if (check.bases().size() != m.bases().size()) return std::nullopt;
  return candidate;
}

}  // namespace

namespace {

// fundamental cocircuits of the first basis as GF(2) rows
Matrix fundamental_gf2(const Matroid& m) {
  ElementSet b = m.bases().front();
  Matrix a(m.rank(), m.size(), FieldTag::gf2());
  std::size_t row = 0;
  b.for_each([&](std::size_t e) {
    m.fundamental_cocircuit(b, e).for_each([&](std::size_t c) { a.set(row, c, Scalar(1)); });
    ++row;
  });
  a.set_col_labels(m.labels());
  return a;
}

}  // namespace

bool Matroid::is_binary() const {
  std::call_once(cache_->binary_once, [&] {
    if (auto* col = std::get_if<ColumnBackend>(&backend_)) {
      if (col->matrix.field().kind == FieldKind::GF2) {
        cache_->binary = true;
        return;
      }
    }
    if (std::holds_alternative<GraphicBackend>(backend_)) {
      cache_->binary = true;
      return;
    }
    if (auto* u = std::get_if<UniformBackend>(&backend_)) {
      cache_->binary = u->r <= 1 || u->r + 1 >= size();
      return;
    }
    // a binary matroid is represented by its fundamental cocircuits over GF(2)
    const std::size_t r = rank();
    if (r == 0) {
      cache_->binary = true;
      return;
    }
    cache_->binary = same_matroid(Matroid::from_matrix(fundamental_gf2(*this)));
  });
  return cache_->binary;
}

std::optional<Matrix> Matroid::signed_representation() const {
  std::call_once(cache_->rep_once, [&] {
    const std::size_t n = size();
    const FieldTag q = FieldTag::rationals();
    std::optional<Matrix> rep;
    if (auto* u = std::get_if<UniformBackend>(&backend_)) {
      if (u->r == 0) {
        rep = Matrix(0, n, q);
      } else if (u->r == n) {
        rep = Matrix::identity(n, q);
      } else if (u->r == 1) {
        rep = Matrix(1, n, q);
        for (std::size_t c = 0; c < n; ++c) rep->set(0, c, Scalar(1));
      } else if (u->r + 1 == n) {
        rep = Matrix(u->r, n, q);
        for (std::size_t i = 0; i < u->r; ++i) {
          rep->set(i, i, Scalar(1));
          rep->set(i, n - 1, Scalar(1));
        }
      }
    } else if (auto* g = std::get_if<GraphicBackend>(&backend_)) {
      Matrix inc(g->vertices.size(), n, q);
      for (std::size_t e = 0; e < n; ++e) {
        auto [a, b] = g->edges[e];
        if (a == b) continue;
        inc.set(a, e, Scalar(1));
        inc.set(b, e, Scalar(-1));
      }
      rep = independent_rows(inc);
    } else if (auto* col = std::get_if<ColumnBackend>(&backend_)) {
      ElementSet basis = greedy_basis(*this);
      Matrix sf = standard_form(col->matrix, to_indices(basis));
      if (!col->matrix.field().is_rational() && col->matrix.field().p == 2) {
        rep = validated_signing(*this, camion_signing(sf));
      } else {
        bool unit_entries = true;
        for (std::size_t r = 0; r < sf.rows() && unit_entries; ++r)
          for (std::size_t c = 0; c < sf.cols(); ++c) {
            long v = 0;
            try {
              v = signed_entry(sf, r, c);
            } catch (const Error&) {
              v = 2;
            }
            if (v < -1 || v > 1) {
              unit_entries = false;
              break;
            }
          }
        if (unit_entries) rep = validated_signing(*this, sf.over(q));
        if (!rep) rep = validated_signing(*this, camion_signing(sf));
      }
    } else if (rank() == 0) {
      rep = Matrix(0, n, q);
    } else if (is_binary()) {
      rep = validated_signing(*this, camion_signing(fundamental_gf2(*this)));
    }
    if (rep) {
      rep->set_col_labels(labels_);
      rep->set_row_labels({});
    }
    cache_->representation = std::move(rep);
  });
  return cache_->representation;
}

bool Matroid::same_matroid(const Matroid& other) const {
  return labels_ == other.labels_ && full_rank_ == other.full_rank_ && bases() == other.bases();
}

Matroid parallel_connection(const Matroid& m, const Matroid& n, const std::string& basepoint) {
  const std::size_t pm = m.index_of(basepoint);
  const std::size_t pn = n.index_of(basepoint);
  for (const auto& l : n.labels()) {
    if (l != basepoint && std::find(m.labels().begin(), m.labels().end(), l) != m.labels().end()) {
      throw Error(Errc::BadOverlap, "ground sets share '" + l + "' besides the basepoint");
    }
  }
  if (m.is_loop(pm) || n.is_loop(pn)) throw Error(Errc::BadParams, "basepoint is a loop");
  std::vector<std::string> labels = m.labels();
  std::vector<std::size_t> map_n(n.size());
  for (std::size_t e = 0; e < n.size(); ++e) {
    if (e == pn) {
      map_n[e] = pm;
    } else {
      map_n[e] = labels.size();
      labels.push_back(n.label(e));
    }
  }
  auto lift = [&](ElementSet c) {
    ElementSet out;
    c.for_each([&](std::size_t e) { out = out.with(map_n[e]); });
    return out;
  };
  std::vector<ElementSet> circuits = m.circuits();
  std::vector<ElementSet> through_m, through_n;
  for (ElementSet c : m.circuits())
    if (c.contains(pm)) through_m.push_back(c);
  for (ElementSet c : n.circuits()) {
    ElementSet lc = lift(c);
    circuits.push_back(lc);
    if (c.contains(pn)) through_n.push_back(lc);
  }
  for (ElementSet c1 : through_m)
    for (ElementSet c2 : through_n) circuits.push_back((c1 | c2).without(pm));
  return Matroid::from_circuits(std::move(labels), std::move(circuits));
}

Matroid parallel_connection(std::span<const Matroid> operands, const std::vector<std::string>& basepoints) {
  if (operands.empty()) throw Error(Errc::BadParams, "no operands");
  const bool single = basepoints.size() == 1;
  if (!single && basepoints.size() + 1 != operands.size()) {
    throw Error(Errc::BadParams, "need one shared basepoint or one basepoint per consecutive pair");
  }
  if (operands.size() == 1) return operands.front();
  Matroid acc = operands.front();
  for (std::size_t i = 1; i < operands.size(); ++i) {
    acc = parallel_connection(acc, operands[i], single ? basepoints[0] : basepoints[i - 1]);
  }
  return acc;
}

namespace {

// Row-reduces a column matroid's matrix to full row rank with the basepoint
// column equal to the first unit vector.
Matrix basepoint_form(const Matroid& m, std::size_t p) {
  const auto& col = std::get<ColumnBackend>(m.backend());
  ElementSet basis = ElementSet::single(p);
  for (std::size_t e = 0; e < m.size() && basis.size() < m.rank(); ++e) {
    if (m.is_independent(basis.with(e))) basis = basis.with(e);
  }
  std::vector<std::size_t> cols = basis.elements();
  Matrix sf = standard_form(col.matrix, cols);
  std::size_t prow = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), p) - cols.begin());
  std::vector<std::size_t> order{prow};
  for (std::size_t r = 0; r < sf.rows(); ++r)
    if (r != prow) order.push_back(r);
  return sf.select_rows(order);
}

}  // namespace

Matroid parallel_connection_represented(const Matroid& m, const Matroid& n, const std::string& basepoint) {
  const auto* cm = std::get_if<ColumnBackend>(&m.backend());
  const auto* cn = std::get_if<ColumnBackend>(&n.backend());
  if (!cm || !cn || !(cm->matrix.field() == cn->matrix.field())) {
    throw Error(Errc::BadParams, "represented parallel connection needs column matroids over one field");
  }
  Matroid reference = parallel_connection(m, n, basepoint);  // validates overlap and loops
  const std::size_t pm = m.index_of(basepoint);
  const std::size_t pn = n.index_of(basepoint);
  Matrix a = basepoint_form(m, pm);
  Matrix b = basepoint_form(n, pn);
  const FieldTag f = a.field();
  Matrix out(a.rows() + b.rows() - 1, reference.size(), f);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  std::size_t col = m.size();
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (c == pn) continue;
    out.set(0, col, b.at(0, c));
    for (std::size_t r = 1; r < b.rows(); ++r) out.set(a.rows() + r - 1, col, b.at(r, c));
    ++col;
  }
  out.set_col_labels(reference.labels());
  return Matroid::from_matrix(std::move(out));
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  std::vector<std::string> labels = m.labels();
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  const auto* cm = std::get_if<ColumnBackend>(&m.backend());
  const auto* cn = std::get_if<ColumnBackend>(&n.backend());
  if (cm && cn && cm->matrix.field() == cn->matrix.field()) {
    const Matrix& a = cm->matrix;
    const Matrix& b = cn->matrix;
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b.at(r, c));
    out.set_col_labels(labels);
    return Matroid::from_matrix(std::move(out));
  }
  std::vector<ElementSet> circuits = m.circuits();
  for (ElementSet c : n.circuits()) circuits.push_back(ElementSet(c.bits() << m.size()));
  return Matroid::from_circuits(std::move(labels), std::move(circuits));
}

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::string_view text,
                                                                 std::vector<std::string>* labels) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3) {
      throw Error(Errc::Parse, "edge list line " + std::to_string(lineno) + ": expected 'u v [label]'");
    }
    edges.emplace_back(toks[0], toks[1]);
    names.push_back(toks.size() == 3 ? toks[2] : "e" + std::to_string(edges.size()));
  }
  if (labels) *labels = std::move(names);
  return edges;
}

Matrix camion_signing(const Matrix& support) {
  const std::size_t rows = support.rows(), cols = support.cols();
  const std::size_t nodes = rows + cols;
  Matrix out(rows, cols, FieldTag::rationals());
  out.set_col_labels(support.col_labels());
  // Bipartite support graph: rows are nodes [0, rows), columns follow.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(support.at(r, c)) != 0) edges.emplace_back(r, c);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(nodes);  // (neighbour, sign)
  auto add_signed = [&](std::size_t r, std::size_t c, int sign) {
    out.set(r, c, Scalar(sign));
    adj[r].emplace_back(rows + c, sign);
    adj[rows + c].emplace_back(r, sign);
  };
  // BFS spanning forest signed +1.
  std::vector<bool> seen(nodes, false), in_tree(edges.size(), false);
  std::vector<std::vector<std::size_t>> incident(nodes);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].push_back(i);
    incident[rows + edges[i].second].push_back(i);
  }
  for (std::size_t s = 0; s < nodes; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t i : incident[u]) {
        std::size_t v = u < rows ? rows + edges[i].second : edges[i].first;
        if (seen[v]) continue;
        seen[v] = true;
        in_tree[i] = true;
        add_signed(edges[i].first, edges[i].second, 1);
        queue.push_back(v);
      }
    }
  }
  // Each remaining edge closes a shortest, hence chordless, cycle with the
  // signed part; pick its sign so that cycle sums to 0 mod 4.
  std::vector<std::size_t> prev(nodes);
  std::vector<int> prev_sign(nodes);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_tree[i]) continue;
    const std::size_t src = edges[i].first, dst = rows + edges[i].second;
    std::vector<bool> visited(nodes, false);
    visited[src] = true;
    std::deque<std::size_t> queue{src};
    while (!queue.empty() && !visited[dst]) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [v, sign] : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        prev[v] = u;
        prev_sign[v] = sign;
        queue.push_back(v);
      }
    }
    int sum = 0;
    for (std::size_t v = dst; v != src; v = prev[v]) sum += prev_sign[v];
    int mod = ((sum % 4) + 4) % 4;  // path sum is odd: 1 or 3
    add_signed(edges[i].first, edges[i].second, mod == 1 ? -1 : 1);
  }
  return out;
}

}  // namespace matroidlab
