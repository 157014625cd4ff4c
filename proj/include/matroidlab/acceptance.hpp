#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/ordering.hpp"

namespace matroidlab {

struct Fixture {
  std::string name;
  Matroid matroid;
  std::optional<Ordering> ordering;
};

/// Small uniform matroids that are regular, K4, K33, DualK33 and R10.
std::vector<Fixture> standard_fixtures();

/// Every composition (n_1..n_t) with n_i >= 2, t <= max_parts and
/// sum <= max_total.
std::vector<std::vector<std::size_t>> compositions(std::size_t max_total, std::size_t max_parts);

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool exhaustive = false;  // run all R10 orderings as well as the sample
  std::size_t workers = 4;
  std::vector<int> only;    // empty means all
};

/// Runs the criteria in order; `progress` gets each result as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& r);

}  // namespace matroidlab
