#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/ordering.hpp"

namespace matroidlab {

/// bases * r! * (n-r)!. Throws Errc::Overbudget if that overflows 64 bits.
std::uint64_t standard_ordering_count(const Matroid& m);

/// Index = (basis index * r! + basis permutation rank) * (n-r)! + cobasis
/// permutation rank, with bases in bitmask order and permutations ranked
/// lexicographically. Throws Errc::BadParams past the end.
StandardOrdering standard_ordering_at(const Matroid& m, std::uint64_t index);

/// Streams orderings [from, to) in index order; stops when fn returns false.
void for_each_standard_ordering(const Matroid& m, std::uint64_t from, std::uint64_t to,
                                const std::function<bool(std::uint64_t, const StandardOrdering&)>& fn);

/// FNV-1a over labels, rank and bases, as 16 hex digits.
std::string matroid_hash(const Matroid& m);

struct SearchPolicy {
  enum class Kind { Exhaustive, Sample, FirstHit };
  Kind kind = Kind::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  /// "exhaustive", "sample:N:SEED", "first-hit". Throws Errc::Parse.
  static SearchPolicy parse(const std::string& text);
  std::string to_string() const;
};

struct Shard {
  std::size_t index = 0;  // 0-based
  std::size_t count = 1;

  /// "i/m" with 0 <= i < m. Throws Errc::Parse.
  static Shard parse(const std::string& text);
  std::string to_string() const;
};

struct SearchOptions {
  FieldTag field = FieldTag::gf2();
  std::size_t workers = 1;
  Shard shard;
  std::optional<std::string> resume_path;
  std::size_t window = 2048;  // orderings per checkpoint
  bool fast = true;
  std::size_t max_windows = 0;  // stop after this many windows, 0 = run to the end
};

struct SearchReport {
  std::string policy;
  std::string field;
  std::string shard;
  std::uint64_t total_orderings = 0;
  std::uint64_t planned = 0;   // orderings this shard has to look at
  std::uint64_t examined = 0;
  std::uint64_t basis = 0;
  std::uint64_t not_basis = 0;
  std::optional<std::uint64_t> first_witness_index;
  std::optional<std::vector<std::string>> first_witness;
  bool complete = false;
  double seconds = 0;
};

/// Decides NBC basis or not for many orderings of one matroid. Data that
/// does not depend on the ordering is computed once and shared; each
/// instance owns its own scratch space, so use one per thread.
class FastNbcKernel {
 public:
  struct Shared;

  FastNbcKernel(const Matroid& m, FieldTag field);
  explicit FastNbcKernel(std::shared_ptr<const Shared> shared);

  std::shared_ptr<const Shared> shared() const { return shared_; }
  bool is_basis(const StandardOrdering& so) const;
  /// |L| for the ordering, or nullopt when it exceeds the sum of h or is
  /// infinite.
  std::optional<std::size_t> lower_size_bounded(const StandardOrdering& so) const;

 private:
  std::shared_ptr<const Shared> shared_;
};

/// Deterministic for a fixed policy and seed whatever the worker count.
/// With a resume path the state is loaded if present and saved after every
/// window.
SearchReport search_orderings(const Matroid& m, const SearchPolicy& policy, const SearchOptions& opt = {});

}  // namespace matroidlab
