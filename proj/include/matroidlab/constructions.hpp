#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"

namespace matroidlab {

struct LabelledMatroid {
  Matroid matroid;
  StandardOrdering ordering;
};

/// U(n-1, n) as the column matroid of [I | 1] over Q, columns labelled in
/// the given order (the all-ones column last).
Matroid corank_one_uniform(const std::vector<std::string>& labels);

/// Parallel connection of U(n_i - 1, n_i) at one basepoint "p", with the
/// theta labelling. The sizes are sorted first. Element names are "p" and
/// "a<i>_<k>" for component i. Throws Errc::BadParams if some n_i < 2.
LabelledMatroid theta_matroid(std::vector<std::size_t> sizes);

/// Chain parallel connection of U(n_i - 1, n_i), component i joined to
/// component i+1 at basepoint "p<i+1>", with the phi labelling.
LabelledMatroid phi_matroid(const std::vector<std::size_t>& sizes);

/// Operands and basepoints of the two families, for building the same
/// matroid from circuits alone.
std::vector<Matroid> theta_operands(std::vector<std::size_t> sizes);
std::vector<Matroid> phi_operands(const std::vector<std::size_t>& sizes);
std::vector<std::string> phi_basepoints(std::size_t t);

struct NamedMatroid {
  Matroid matroid;
  std::optional<Ordering> ordering;  // the published ordering, when there is one
};

/// R10, DualK33, K33, K4, U24, Fano. Throws Errc::UnknownName.
NamedMatroid named_matroid(const std::string& name);
std::vector<std::string> named_matroids();

}  // namespace matroidlab
