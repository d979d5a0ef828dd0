#pragma once

// Simplex constructions and an exhaustive checker for the functional batch
// property: every batch of t nonzero queries must be served by pairwise
// disjoint recovery sets of size at most r.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fbc/gf2.hpp"

namespace fbc {

/// Columns are the nonzero k-bit vectors in increasing integer order.  1 <= k <= 7.
GeneratorMatrix simplex(int k);

/// [simplex(k) | simplex(k)].  1 <= k <= 6.
GeneratorMatrix double_simplex(int k);

/// A nonzero query vector.
class Query {
 public:
  explicit Query(BitVec alpha);
  Query(std::uint32_t word, int k) : Query(BitVec(word, k)) {}

  const BitVec& alpha() const noexcept { return alpha_; }
  std::uint32_t word() const noexcept { return alpha_.word(); }

  friend bool operator==(const Query&, const Query&) = default;

 private:
  BitVec alpha_;
};

/// Multiset of t queries kept in non-decreasing order of their integer value.
class Batch {
 public:
  Batch(int k, std::vector<std::uint32_t> words);
  Batch(int k, std::initializer_list<std::uint32_t> words)
      : Batch(k, std::vector<std::uint32_t>(words)) {}

  int k() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(words_.size()); }
  std::span<const std::uint32_t> words() const noexcept { return words_; }
  Query operator[](int i) const { return Query(words_.at(static_cast<std::size_t>(i)), k_); }

  friend bool operator==(const Batch&, const Batch&) = default;

 private:
  int k_;
  std::vector<std::uint32_t> words_;
};

/// All minimal recovery sets of size <= r for every nonzero query.  Each list
/// is ordered by size, then lexicographically by index sequence.  Immutable.
class RecoveryCatalog {
 public:
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }

  std::span<const ColumnSet> sets_for(std::uint32_t alpha) const;
  std::span<const ColumnSet> sets_for(const Query& q) const { return sets_for(q.word()); }
  std::size_t total_sets() const noexcept { return sets_.size(); }

 private:
  friend RecoveryCatalog build_catalog(const GeneratorMatrix& g, int r);

  int k_ = 0;
  int n_ = 0;
  int r_ = 0;
  std::vector<std::uint32_t> offsets_;  // CSR over alpha in [0, 2^k]
  std::vector<ColumnSet> sets_;
};

RecoveryCatalog build_catalog(const GeneratorMatrix& g, int r);

enum class SearchOrder {
  /// Queries in batch order, candidates in catalog order: the result is the
  /// lexicographically first assignment.
  kCatalog,
  /// Query with the fewest compatible candidates first.
  kFailFirst,
};

/// One recovery set per query of the batch (aligned with batch order), pairwise
/// disjoint, or nullopt if none exists.
std::optional<std::vector<ColumnSet>> find_disjoint_assignment(
    const RecoveryCatalog& catalog, const Batch& batch, SearchOrder order = SearchOrder::kCatalog);

enum class VerdictStatus { kHolds, kFails, kUndecided };

struct VerifyOptions {
  int jobs = 1;
  /// Deterministic counterexample: the first failing batch in lexicographic
  /// order (or the first failing uniform batch when the screen is on).
  bool deterministic = true;
  /// Try the t-fold repetitions of each query before the full sweep.
  bool uniform_screen = true;
  std::optional<std::chrono::duration<double>> time_budget;
  std::optional<std::uint64_t> batch_budget;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kUndecided;
  std::optional<Batch> counterexample;
  /// Batches for which an assignment search was run.
  std::uint64_t assignments_checked = 0;
  /// Number of multisets in the full sweep (nullopt if it overflows 64 bits).
  std::optional<std::uint64_t> batches_total;
  std::chrono::duration<double> wall_time{};

  bool holds() const noexcept { return status == VerdictStatus::kHolds; }
};

/// Decides whether g is an [n, k, t, r] functional batch code by checking every
/// multiset of t nonzero queries.
Verdict verify(const GeneratorMatrix& g, int t, int r, const VerifyOptions& options = {});

/// C(q + t - 1, t), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> multiset_count(std::uint64_t q, int t);

/// The index-th size-t multiset over {1..q} in lexicographic order.
std::vector<std::uint32_t> unrank_multiset(std::uint64_t q, int t, std::uint64_t index);

/// One row of the worked [3,2,2,2] example: a query pair and 1-based recovery sets.
struct ExampleRow {
  std::uint32_t alpha1;
  std::uint32_t alpha2;
  std::vector<int> set1;
  std::vector<int> set2;
};

/// The nine query pairs of the [3,2,2,2] simplex example with their recovery sets.
std::vector<ExampleRow> table1_rows();

/// Checks every row of table1_rows() against simplex(2): disjoint, size <= 2, spans its query.
bool verify_table1();

}  // namespace fbc
