#include "fbc/codecheck.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "fbc/errors.hpp"

namespace fbc {

GeneratorMatrix simplex(int k) {
  if (k < 1 || k > 7) throw ParameterError("simplex code needs 1 <= k <= 7");
  std::vector<BitVec> cols;
  for (std::uint32_t v = 1; v < (1u << k); ++v) cols.emplace_back(v, k);
  return GeneratorMatrix(k, std::move(cols));
}

GeneratorMatrix double_simplex(int k) {
  if (k < 1 || k > 6) throw ParameterError("double simplex code needs 1 <= k <= 6");
  const GeneratorMatrix s = simplex(k);
  std::vector<BitVec> cols(s.columns().begin(), s.columns().end());
  cols.insert(cols.end(), s.columns().begin(), s.columns().end());
  return GeneratorMatrix(k, std::move(cols));
}

Query::Query(BitVec alpha) : alpha_(alpha) {
  if (alpha_.is_zero()) throw ParameterError("queries must be nonzero");
}

Batch::Batch(int k, std::vector<std::uint32_t> words) : k_(k), words_(std::move(words)) {
  if (words_.empty()) throw ParameterError("a batch holds at least one query");
  for (auto w : words_) Query(w, k);  // validates
  std::sort(words_.begin(), words_.end());
}

std::span<const ColumnSet> RecoveryCatalog::sets_for(std::uint32_t alpha) const {
  if (alpha == 0 || alpha >= (std::uint32_t{1} << k_)) throw ParameterError("query outside the catalog");
  const auto b = offsets_[alpha];
  const auto e = offsets_[alpha + 1];
  return std::span<const ColumnSet>(sets_).subspan(b, e - b);
}

namespace {

struct Found {
  std::uint32_t alpha;
  ColumnSet set;
};

// Depth-first over index-increasing subsets, keeping only independent ones.
// Preorder visits subsets of equal size in lexicographic order.
void collect_independent(const GeneratorMatrix& g, int max_size, int start, const Gf2Basis& basis,
                         std::uint32_t sum, ColumnSet& current, int size, std::vector<Found>& out) {
  for (int j = start; j < g.n(); ++j) {
    Gf2Basis next = basis;
    const auto w = g.column(j).word();
    if (!next.insert(w)) continue;
    current.set(j);
    out.push_back({sum ^ w, current});
    if (size + 1 < max_size) collect_independent(g, max_size, j + 1, next, sum ^ w, current, size + 1, out);
    current.reset(j);
  }
}

}  // namespace

RecoveryCatalog build_catalog(const GeneratorMatrix& g, int r) {
  if (r < 1) throw ParameterError("locality r must be at least 1");
  RecoveryCatalog cat;
  cat.k_ = g.k();
  cat.n_ = g.n();
  cat.r_ = r;

  std::vector<Found> found;
  ColumnSet current;
  collect_independent(g, std::min({r, g.k(), g.n()}), 0, Gf2Basis{}, 0, current, 0, found);

  // Bucket by alpha (stable), then order each bucket by size keeping lex order within a size.
  const std::size_t universe = std::size_t{1} << g.k();
  cat.offsets_.assign(universe + 1, 0);
  for (const auto& f : found) ++cat.offsets_[f.alpha + 1];
  std::partial_sum(cat.offsets_.begin(), cat.offsets_.end(), cat.offsets_.begin());
  cat.sets_.resize(found.size());
  std::vector<std::uint32_t> fill(cat.offsets_.begin(), cat.offsets_.end() - 1);
  for (const auto& f : found) cat.sets_[fill[f.alpha]++] = f.set;
  for (std::size_t a = 1; a < universe; ++a) {
    std::stable_sort(cat.sets_.begin() + cat.offsets_[a], cat.sets_.begin() + cat.offsets_[a + 1],
                     [](const ColumnSet& x, const ColumnSet& y) { return x.count() < y.count(); });
  }
  return cat;
}

namespace {

// Backtracking over one batch.  Reused across batches to keep scratch storage.
class AssignmentSearch {
 public:
  explicit AssignmentSearch(const RecoveryCatalog& cat) : cat_(cat) {}

  // queries must be sorted.  On success choice_[i] indexes lists_[i].
  bool run(std::span<const std::uint32_t> queries, SearchOrder order) {
    const int t = static_cast<int>(queries.size());
    lists_.resize(t);
    choice_.assign(t, -1);
    suffix_min_.assign(t + 1, 0);
    for (int i = 0; i < t; ++i) {
      lists_[i] = cat_.sets_for(queries[i]);
      if (lists_[i].empty()) return false;
    }
    for (int i = t - 1; i >= 0; --i) suffix_min_[i] = suffix_min_[i + 1] + lists_[i].front().count();
    if (suffix_min_[0] > cat_.n()) return false;
    queries_ = queries;

    if (order == SearchOrder::kCatalog) return in_order(0, ColumnSet{}, 0);

    groups_.clear();
    for (int i = 0; i < t; ++i) {
      if (i == 0 || queries[i] != queries[i - 1]) groups_.push_back({i, 0, 0});
      ++groups_.back().count;
    }
    return fail_first(ColumnSet{}, 0, t);
  }

  std::vector<ColumnSet> assignment() const {
    std::vector<ColumnSet> out;
    out.reserve(choice_.size());
    for (std::size_t i = 0; i < choice_.size(); ++i) out.push_back(lists_[i][choice_[i]]);
    return out;
  }

 private:
  struct Group {
    int first;     // batch position of the first copy
    int count;     // multiplicity
    int assigned;  // copies placed so far, at positions first .. first+assigned-1
  };

  bool in_order(int i, const ColumnSet& used, int used_count) {
    const int t = static_cast<int>(lists_.size());
    if (i == t) return true;
    const auto& list = lists_[i];
    // Equal queries take candidates in increasing index order.
    const int start = (i > 0 && queries_[i] == queries_[i - 1]) ? choice_[i - 1] + 1 : 0;
    for (int c = start; c < static_cast<int>(list.size()); ++c) {
      const ColumnSet& s = list[c];
      const int sz = s.count();
      // Lists are sorted by size, so later candidates cannot fit either.
      if (used_count + sz + suffix_min_[i + 1] > cat_.n()) break;
      if (s.intersects(used)) continue;
      choice_[i] = c;
      if (in_order(i + 1, used | s, used_count + sz)) return true;
    }
    choice_[i] = -1;
    return false;
  }

  bool fail_first(const ColumnSet& used, int used_count, int remaining) {
    if (remaining == 0) return true;

    int best = -1;
    int best_options = std::numeric_limits<int>::max();
    int min_need = 0;
    for (int gi = 0; gi < static_cast<int>(groups_.size()); ++gi) {
      const Group& g = groups_[gi];
      const int left = g.count - g.assigned;
      if (left == 0) continue;
      const auto& list = lists_[g.first];
      min_need += left * list.front().count();
      const int start = g.assigned > 0 ? choice_[g.first + g.assigned - 1] + 1 : 0;
      int options = 0;
      for (int c = start; c < static_cast<int>(list.size()); ++c) {
        if (!list[c].intersects(used)) ++options;
      }
      if (options < left) return false;
      if (options < best_options) {
        best_options = options;
        best = gi;
      }
    }
    if (used_count + min_need > cat_.n()) return false;

    Group& g = groups_[best];
    const int pos = g.first + g.assigned;
    const auto& list = lists_[g.first];
    const int start = g.assigned > 0 ? choice_[pos - 1] + 1 : 0;
    ++g.assigned;
    for (int c = start; c < static_cast<int>(list.size()); ++c) {
      const ColumnSet& s = list[c];
      if (s.intersects(used)) continue;
      choice_[pos] = c;
      if (fail_first(used | s, used_count + s.count(), remaining - 1)) return true;
    }
    --g.assigned;
    choice_[pos] = -1;
    return false;
  }

  const RecoveryCatalog& cat_;
  std::span<const std::uint32_t> queries_;
  std::vector<std::span<const ColumnSet>> lists_;
  std::vector<int> choice_;
  std::vector<int> suffix_min_;
  std::vector<Group> groups_;
};

void next_multiset(std::vector<std::uint32_t>& seq, std::uint64_t q) {
  int i = static_cast<int>(seq.size()) - 1;
  while (i >= 0 && seq[i] == q) --i;
  if (i < 0) return;
  ++seq[i];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < seq.size(); ++j) seq[j] = seq[i];
}

// floor(total * c / chunks) without overflow.
std::uint64_t chunk_boundary(std::uint64_t total, std::uint64_t c, std::uint64_t chunks) {
  using boost::multiprecision::uint128_t;
  return static_cast<std::uint64_t>(uint128_t(total) * c / chunks);
}

}  // namespace

std::optional<std::vector<ColumnSet>> find_disjoint_assignment(const RecoveryCatalog& catalog,
                                                               const Batch& batch, SearchOrder order) {
  if (batch.k() != catalog.k()) throw ParameterError("batch dimension does not match the catalog");
  AssignmentSearch search(catalog);
  if (!search.run(batch.words(), order)) return std::nullopt;
  return search.assignment();
}

std::optional<std::uint64_t> multiset_count(std::uint64_t q, int t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  if (q == 0) return 0;
  // C(q - 1 + i, i) for i = 1..t; each step stays an exact integer.
  using boost::multiprecision::uint128_t;
  uint128_t c = 1;
  for (int i = 1; i <= t; ++i) {
    c = c * (q - 1 + static_cast<std::uint64_t>(i)) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<std::uint32_t> unrank_multiset(std::uint64_t q, int t, std::uint64_t index) {
  const auto total = multiset_count(q, t);
  if (total && index >= *total) throw ParameterError("multiset rank out of range");
  std::vector<std::uint32_t> seq(static_cast<std::size_t>(t));
  std::uint64_t v = 1;
  for (int pos = 0; pos < t; ++pos) {
    const int rest = t - pos - 1;
    for (;; ++v) {
      // Completions once position pos holds v: multisets of size rest over [v, q].
      const auto cnt = multiset_count(q - v + 1, rest);
      if (!cnt || index < *cnt) break;
      index -= *cnt;
    }
    seq[pos] = static_cast<std::uint32_t>(v);
  }
  return seq;
}

Verdict verify(const GeneratorMatrix& g, int t, int r, const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  if (t < 1) throw ParameterError("batch size t must be at least 1");
  if (r < 1) throw ParameterError("locality r must be at least 1");
  const auto started = Clock::now();
  const RecoveryCatalog catalog = build_catalog(g, r);
  const std::uint64_t q = (std::uint64_t{1} << g.k()) - 1;

  Verdict verdict;
  verdict.batches_total = multiset_count(q, t);

  std::atomic<std::uint64_t> checked{0};
  std::atomic<bool> budget_hit{false};
  const auto over_budget = [&]() {
    if (options.batch_budget && checked.load(std::memory_order_relaxed) >= *options.batch_budget) return true;
    if (options.time_budget && Clock::now() - started >= *options.time_budget) return true;
    return false;
  };
  const auto finish = [&](VerdictStatus status) {
    verdict.status = status;
    verdict.assignments_checked = checked.load();
    verdict.wall_time = Clock::now() - started;
    return verdict;
  };

  if (options.uniform_screen) {
    std::vector<std::uint32_t> order(q);
    std::iota(order.begin(), order.end(), 1u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto ca = catalog.sets_for(a).size();
      const auto cb = catalog.sets_for(b).size();
      if (ca != cb) return ca < cb;
      const int wa = std::popcount(a);
      const int wb = std::popcount(b);
      if (wa != wb) return wa > wb;
      return a > b;
    });
    AssignmentSearch search(catalog);
    std::vector<std::uint32_t> uniform(static_cast<std::size_t>(t));
    for (auto a : order) {
      if (over_budget()) return finish(VerdictStatus::kUndecided);
      std::fill(uniform.begin(), uniform.end(), a);
      checked.fetch_add(1, std::memory_order_relaxed);
      if (!search.run(uniform, SearchOrder::kFailFirst)) {
        verdict.counterexample = Batch(g.k(), uniform);
        return finish(VerdictStatus::kFails);
      }
    }
  }

  if (!verdict.batches_total) return finish(VerdictStatus::kUndecided);
  const std::uint64_t total = *verdict.batches_total;
  const int jobs = std::max(1, options.jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 16);

  constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_fail{kNoFailure};
  std::atomic<bool> stop{false};
  std::vector<std::vector<std::uint32_t>> failures(chunks);

  const auto worker = [&]() {
    AssignmentSearch search(catalog);
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks || stop.load()) return;
      // Chunks are handed out in increasing order; nothing later can beat a known failure.
      if (c > first_fail.load()) return;
      const std::uint64_t lo = chunk_boundary(total, c, chunks);
      const std::uint64_t hi = chunk_boundary(total, c + 1, chunks);
      auto seq = unrank_multiset(q, t, lo);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (((idx - lo) & 255u) == 0) {
          if (stop.load() || c > first_fail.load()) return;
          if (over_budget()) {
            budget_hit = true;
            stop = true;
            return;
          }
        }
        checked.fetch_add(1, std::memory_order_relaxed);
        if (!search.run(seq, SearchOrder::kFailFirst)) {
          failures[c] = seq;
          std::uint64_t prev = first_fail.load();
          while (c < prev && !first_fail.compare_exchange_weak(prev, c)) {
          }
          if (!options.deterministic) stop = true;
          break;
        }
        next_multiset(seq, q);
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  if (const auto f = first_fail.load(); f != kNoFailure) {
    verdict.counterexample = Batch(g.k(), failures[f]);
    return finish(VerdictStatus::kFails);
  }
  return finish(budget_hit ? VerdictStatus::kUndecided : VerdictStatus::kHolds);
}

std::vector<ExampleRow> table1_rows() {
  // alpha as an integer: bit 0 is alpha_1, bit 1 is alpha_2.
  return {
      {1, 1, {1}, {2, 3}}, {1, 2, {1}, {2}}, {1, 3, {1}, {3}},
      {2, 1, {2}, {1}},    {2, 2, {1, 3}, {2}}, {2, 3, {2}, {3}},
      {3, 1, {3}, {1}},    {3, 2, {3}, {2}},    {3, 3, {1, 2}, {3}},
  };
}

bool verify_table1() {
  const GeneratorMatrix g = simplex(2);
  const auto to_set = [](const std::vector<int>& one_based) {
    ColumnSet s;
    for (int j : one_based) s.set(j - 1);
    return s;
  };
  for (const auto& row : table1_rows()) {
    const ColumnSet a = to_set(row.set1);
    const ColumnSet b = to_set(row.set2);
    if (a.intersects(b) || a.count() > 2 || b.count() > 2) return false;
    if (!in_span(g, a, BitVec(row.alpha1, 2)) || !in_span(g, b, BitVec(row.alpha2, 2))) return false;
  }
  return true;
}

}  // namespace fbc
