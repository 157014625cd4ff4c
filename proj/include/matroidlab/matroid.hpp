#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/matrix.hpp"

namespace matroidlab {

/// Ground-set size above which full circuit/cocircuit/basis enumeration
/// refuses with Errc::Overbudget. Process-wide; defaults to 20.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

struct ColumnBackend {
  Matrix matrix;  // columns follow the ground set order
};

struct GraphicBackend {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indices, one per element
};

struct UniformBackend {
  std::size_t r = 0;
};

struct CircuitListBackend {
  std::vector<ElementSet> circuits;
};

using Backend = std::variant<ColumnBackend, GraphicBackend, UniformBackend, CircuitListBackend>;

/// Immutable matroid on a labelled ground set. Element i of the ground set
/// is the i-th label; all ElementSets index into that list. Enumerations are
/// computed lazily, once, and shared between copies.
class Matroid {
 public:
  /// Columns are the ground set; labels come from the column labels or
  /// default to e1..en. Throws Errc::DuplicateLabels.
  static Matroid from_matrix(Matrix m);
  /// Throws Errc::BadRank if r > n.
  static Matroid uniform(std::size_t r, std::size_t n, std::vector<std::string> labels = {});
  /// One element per edge; endpoints are vertex names.
  static Matroid from_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                            std::vector<std::string> labels = {});
  /// The circuits must satisfy the circuit axioms; this is not rechecked.
  static Matroid from_circuits(std::vector<std::string> labels, std::vector<ElementSet> circuits);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t e) const { return labels_[e]; }
  /// Throws Errc::UnknownName.
  std::size_t index_of(const std::string& label) const;
  ElementSet ground_set() const { return ElementSet::first(size()); }
  std::string format(ElementSet s) const;

  const Backend& backend() const { return backend_; }
  std::string kind_name() const;

  std::size_t rank() const { return full_rank_; }
  std::size_t rank(ElementSet s) const;
  bool is_independent(ElementSet s) const { return rank(s) == s.size(); }
  bool is_basis(ElementSet s) const { return s.size() == full_rank_ && is_independent(s); }
  bool is_loop(std::size_t e) const { return rank(ElementSet::single(e)) == 0; }
  bool is_coloop(std::size_t e) const { return rank(ground_set().without(e)) < full_rank_; }

  /// Sorted by bitmask. Throw Errc::Overbudget above the enumeration cap.
  const std::vector<ElementSet>& bases() const;
  const std::vector<ElementSet>& circuits() const;
  /// Circuits of the dual.
  const std::vector<ElementSet>& cocircuits() const;
  /// Minimal sets meeting every basis, computed from bases() alone.
  std::vector<ElementSet> cocircuits_by_transversals() const;

  Matroid dual() const;
  Matroid delete_element(std::size_t e) const;
  /// Contracting a loop deletes it.
  Matroid contract(std::size_t e) const;
  /// Restriction to `keep`, preserving the relative order of elements.
  Matroid restrict_to(ElementSet keep) const;

  /// Throws Errc::NotCobasisElement if e is in B, Errc::BadParams if B is
  /// not a basis.
  ElementSet fundamental_circuit(ElementSet basis, std::size_t e) const;
  /// Throws Errc::NotBasisElement if b is not in B.
  ElementSet fundamental_cocircuit(ElementSet basis, std::size_t b) const;

  /// Classes of the "share a circuit" relation, sorted by least element.
  std::vector<ElementSet> connected_components() const;
  bool is_connected() const { return connected_components().size() <= 1; }

  /// Totally unimodular representation over Q, columns in ground order, one
  /// row per unit of rank. nullopt when none can be derived.
  std::optional<Matrix> signed_representation() const;
  /// Representable over GF(2). Decided once and cached.
  bool is_binary() const;

  /// Same bases on the same labels.
  bool same_matroid(const Matroid& other) const;

 private:
  struct Cache;

  Matroid(std::vector<std::string> labels, Backend backend);
  void init_rank();

  std::vector<std::string> labels_;
  Backend backend_;
  std::size_t full_rank_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// Parallel connection P(M, N; p) by its circuit set. The ground sets must
/// meet exactly in the basepoint label, which is a loop in neither operand.
Matroid parallel_connection(const Matroid& m, const Matroid& n, const std::string& basepoint);

/// One shared basepoint (basepoints.size() == 1) or a chain with
/// basepoints[i] joining operand i and i + 1.
Matroid parallel_connection(std::span<const Matroid> operands, const std::vector<std::string>& basepoints);

/// Parallel connection of two column matroids over the same field by
/// gluing their representations along the basepoint coordinate.
Matroid parallel_connection_represented(const Matroid& m, const Matroid& n, const std::string& basepoint);

/// Direct sum; labels must be disjoint.
Matroid direct_sum(const Matroid& m, const Matroid& n);

/// Lines "u v", optionally "u v label"; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> parse_edge_list(std::string_view text,
                                                                 std::vector<std::string>* labels = nullptr);

/// Sign a {0,1} matrix so that every chordless cycle of its bipartite
/// support graph sums to 0 mod 4. The result is over Q and is totally
/// unimodular whenever any TU signing of the support exists.
Matrix camion_signing(const Matrix& support);

}  // namespace matroidlab
