#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// A BitVec of dimension k stores component i (1-based, as in x_i) in bit i-1
// of a machine word.  Under this convention the integer value of a query is
// sum_i alpha_i 2^(i-1), so simplex(2) lists the columns (1,0), (0,1), (1,1).

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fbc {

inline constexpr int kMaxDimension = 24;
inline constexpr int kMaxLength = 128;

class BitVec {
 public:
  /// Throws ParameterError if k is outside [1, kMaxDimension] or word has bits at or above k.
  BitVec(std::uint32_t word, int k);

  static BitVec zero(int k) { return BitVec(0, k); }
  /// Unit vector e_i, i is 1-based.
  static BitVec unit(int k, int i);

  std::uint32_t word() const noexcept { return word_; }
  int dim() const noexcept { return k_; }
  bool is_zero() const noexcept { return word_ == 0; }
  int weight() const noexcept { return std::popcount(word_); }
  /// Component i, 1-based.
  bool operator[](int i) const noexcept { return (word_ >> (i - 1)) & 1u; }

  BitVec operator^(const BitVec& o) const;
  BitVec& operator^=(const BitVec& o);

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::uint32_t word_;
  int k_;
};

/// Fixed-width 128-bit set over positions [0, 128).  Used both for sets of
/// column indices and for codewords.
class Bitset128 {
 public:
  constexpr Bitset128() = default;
  static Bitset128 from_indices(std::initializer_list<int> idx);
  static Bitset128 from_indices(std::span<const int> idx);

  bool test(int i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) noexcept { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(int i) noexcept { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  int count() const noexcept { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool none() const noexcept { return (w_[0] | w_[1]) == 0; }
  bool any() const noexcept { return !none(); }
  bool intersects(const Bitset128& o) const noexcept {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }
  bool is_subset_of(const Bitset128& o) const noexcept {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  /// Set positions in increasing order.
  std::vector<int> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (int h = 0; h < 2; ++h) {
      for (std::uint64_t w = w_[h]; w != 0; w &= w - 1) f(h * 64 + std::countr_zero(w));
    }
  }

  Bitset128& operator|=(const Bitset128& o) noexcept {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  Bitset128& operator&=(const Bitset128& o) noexcept {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  Bitset128& operator^=(const Bitset128& o) noexcept {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  friend Bitset128 operator|(Bitset128 a, const Bitset128& b) noexcept { return a |= b; }
  friend Bitset128 operator&(Bitset128 a, const Bitset128& b) noexcept { return a &= b; }
  friend Bitset128 operator^(Bitset128 a, const Bitset128& b) noexcept { return a ^= b; }

  friend bool operator==(const Bitset128&, const Bitset128&) = default;

  /// Lexicographic order of the increasing index sequences.
  friend bool lex_less(const Bitset128& a, const Bitset128& b) noexcept;

 private:
  std::array<std::uint64_t, 2> w_{};
};

using ColumnSet = Bitset128;
using Codeword = Bitset128;

/// k x n generator matrix stored column-wise.  Column order is significant
/// and repeated columns are allowed.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int k, std::vector<BitVec> cols);
  /// Row-major 0/1 entries, rows.size() == k.
  static GeneratorMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int k() const noexcept { return k_; }
  int n() const noexcept { return static_cast<int>(cols_.size()); }
  const BitVec& column(int j) const { return cols_.at(static_cast<std::size_t>(j)); }
  std::span<const BitVec> columns() const noexcept { return cols_; }
  /// Entry g_{i,j}, both 0-based.
  bool entry(int i, int j) const { return (column(j).word() >> i) & 1u; }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  int k_;
  std::vector<BitVec> cols_;
};

/// y = x * G.  Bit j of the result is the inner product of x with column j.
Codeword encode(const GeneratorMatrix& g, const BitVec& x);

/// Whether alpha lies in the span of the columns indexed by s.
bool in_span(const GeneratorMatrix& g, const ColumnSet& s, const BitVec& alpha);

/// Over GF(2) a recovery set is minimal iff its columns are independent and sum to alpha.
bool is_independent_and_sums_to(const GeneratorMatrix& g, const ColumnSet& s, const BitVec& alpha);

/// Rank of the columns indexed by s.
int rank(const GeneratorMatrix& g, const ColumnSet& s);

/// Incremental echelon basis for vectors of dimension <= 32.
class Gf2Basis {
 public:
  /// Reduces v against the basis; returns the residue (0 iff v is in the span).
  std::uint32_t reduce(std::uint32_t v) const noexcept {
    while (v != 0) {
      const int p = 31 - std::countl_zero(v);
      if (pivot_[p] == 0) return v;
      v ^= pivot_[p];
    }
    return 0;
  }
  /// Inserts v; returns false if v was already in the span.
  bool insert(std::uint32_t v) noexcept {
    v = reduce(v);
    if (v == 0) return false;
    pivot_[31 - std::countl_zero(v)] = v;
    ++rank_;
    return true;
  }
  bool contains(std::uint32_t v) const noexcept { return reduce(v) == 0; }
  int rank() const noexcept { return rank_; }

 private:
  std::array<std::uint32_t, 32> pivot_{};
  int rank_ = 0;
};

}  // namespace fbc
