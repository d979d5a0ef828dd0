#include "fbc/gf2.hpp"

#include <string>

#include "fbc/errors.hpp"

namespace fbc {

namespace {

void check_dim(int k) {
  if (k < 1 || k > kMaxDimension) {
    throw ParameterError("dimension k=" + std::to_string(k) + " outside [1, " +
                         std::to_string(kMaxDimension) + "]");
  }
}

void check_set(const GeneratorMatrix& g, const ColumnSet& s) {
  bool ok = true;
  s.for_each([&](int j) { ok = ok && j < g.n(); });
  if (!ok) throw ParameterError("column set refers to positions beyond n=" + std::to_string(g.n()));
}

void check_query(const GeneratorMatrix& g, const BitVec& alpha) {
  if (alpha.dim() != g.k()) throw ParameterError("query dimension does not match k");
}

}  // namespace

BitVec::BitVec(std::uint32_t word, int k) : word_(word), k_(k) {
  check_dim(k);
  if (k < 32 && (word >> k) != 0) {
    throw ParameterError("word " + std::to_string(word) + " has bits above dimension " +
                         std::to_string(k));
  }
}

BitVec BitVec::unit(int k, int i) {
  check_dim(k);
  if (i < 1 || i > k) throw ParameterError("unit vector index out of range");
  return BitVec(std::uint32_t{1} << (i - 1), k);
}

BitVec BitVec::operator^(const BitVec& o) const {
  BitVec r = *this;
  r ^= o;
  return r;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.k_ != k_) throw ParameterError("adding vectors of different dimension");
  word_ ^= o.word_;
  return *this;
}

Bitset128 Bitset128::from_indices(std::initializer_list<int> idx) {
  return from_indices(std::span<const int>(idx.begin(), idx.size()));
}

Bitset128 Bitset128::from_indices(std::span<const int> idx) {
  Bitset128 s;
  for (int i : idx) {
    if (i < 0 || i >= kMaxLength) throw ParameterError("column index out of range");
    s.set(i);
  }
  return s;
}

std::vector<int> Bitset128::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool lex_less(const Bitset128& a, const Bitset128& b) noexcept {
  // The first differing position decides: whichever set contains it has the
  // smaller element there, unless the other set is a prefix (ran out).
  Bitset128 diff = a ^ b;
  if (diff.none()) return false;
  const int h = diff.w_[0] != 0 ? 0 : 1;
  const int p = h * 64 + std::countr_zero(diff.w_[h]);
  if (a.test(p)) {
    // a has p, b does not: a is smaller unless b has no further elements past
    // the common prefix, i.e. b is a proper prefix of a.
    Bitset128 tail = b;
    for (int i = 0; i <= p; ++i) tail.reset(i);
    return tail.any();
  }
  Bitset128 tail = a;
  for (int i = 0; i <= p; ++i) tail.reset(i);
  return !tail.any();
}

GeneratorMatrix::GeneratorMatrix(int k, std::vector<BitVec> cols) : k_(k), cols_(std::move(cols)) {
  check_dim(k);
  if (cols_.empty() || static_cast<int>(cols_.size()) > kMaxLength) {
    throw ParameterError("column count n=" + std::to_string(cols_.size()) + " outside [1, " +
                         std::to_string(kMaxLength) + "]");
  }
  for (const auto& c : cols_) {
    if (c.dim() != k) throw ParameterError("column dimension does not match k");
  }
}

GeneratorMatrix GeneratorMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int k = static_cast<int>(rows.size());
  check_dim(k);
  const std::size_t n = rows.front().size();
  std::vector<std::uint32_t> words(n, 0);
  for (int i = 0; i < k; ++i) {
    if (rows[i].size() != n) throw ParameterError("ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) {
      const int e = rows[i][j];
      if (e != 0 && e != 1) throw ParameterError("matrix entries must be 0 or 1");
      if (e) words[j] |= std::uint32_t{1} << i;
    }
  }
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (auto w : words) cols.emplace_back(w, k);
  return GeneratorMatrix(k, std::move(cols));
}

Codeword encode(const GeneratorMatrix& g, const BitVec& x) {
  if (x.dim() != g.k()) throw ParameterError("message dimension does not match k");
  Codeword y;
  for (int j = 0; j < g.n(); ++j) {
    if (std::popcount(x.word() & g.column(j).word()) & 1) y.set(j);
  }
  return y;
}

bool in_span(const GeneratorMatrix& g, const ColumnSet& s, const BitVec& alpha) {
  check_query(g, alpha);
  check_set(g, s);
  Gf2Basis basis;
  s.for_each([&](int j) { basis.insert(g.column(j).word()); });
  return basis.contains(alpha.word());
}

bool is_independent_and_sums_to(const GeneratorMatrix& g, const ColumnSet& s, const BitVec& alpha) {
  check_query(g, alpha);
  check_set(g, s);
  if (s.none()) return false;
  Gf2Basis basis;
  std::uint32_t sum = 0;
  bool independent = true;
  s.for_each([&](int j) {
    const auto w = g.column(j).word();
    independent = independent && basis.insert(w);
    sum ^= w;
  });
  return independent && sum == alpha.word();
}

int rank(const GeneratorMatrix& g, const ColumnSet& s) {
  check_set(g, s);
  Gf2Basis basis;
  s.for_each([&](int j) { basis.insert(g.column(j).word()); });
  return basis.rank();
}

}  // namespace fbc
