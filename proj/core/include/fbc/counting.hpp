#pragma once

// Exact counts of bounded labellings.
//
// theta(n, t, r) is the number of maps [n] -> {0, 1, ..., t} in which every
// nonzero label is used at least once and at most r times.  Three independent
// routes are provided (composition sum, recursion, exponential generating
// function) together with closed-form upper bounds on it.

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

namespace fbc {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Count factorial(int n);
Count binomial(int n, int m);

/// (n)_m = n (n-1) ... (n-m+1).  Throws ParameterError unless 0 <= m <= n.
Count falling_factorial(int n, int m);

/// n! / prod parts_i!.  Throws ParameterError unless the parts are nonnegative and sum to n.
Count multinomial(int n, std::span<const int> parts);

/// Sum over compositions (i_1..i_t) in [r]^t of multinomial(n; n - sum, i_1, ..., i_t).
/// Cost grows as r^t; meant as an oracle for small t.
Count theta_direct(int n, int t, int r);

/// Memo for the recursion theta_t(n) = sum_{i=1..r} C(n,i) theta_{t-1}(n-i).
/// Holds the full (t', n') rectangle below the largest query.  Not thread-safe.
class ThetaMemo {
 public:
  explicit ThetaMemo(int r);

  int r() const noexcept { return r_; }
  const Count& get(int n, int t);

  /// Number of rows (t values) and columns (n values) currently filled.
  int rows() const noexcept { return static_cast<int>(table_.size()); }
  int width() const noexcept { return width_; }

 private:
  void grow(int n, int t);

  int r_;
  int width_ = 0;
  std::vector<std::vector<Count>> table_;  // table_[t][n]
};

Count theta_rec(ThetaMemo& memo, int n, int t);

/// Truncated exponential generating function sum_j c_j x^j / j! with integer numerators.
class EgfPoly {
 public:
  EgfPoly() = default;
  explicit EgfPoly(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The constant series 1.
  static EgfPoly one();
  /// x/1! + x^2/2! + ... + x^r/r!, i.e. all numerators 1 on degrees 1..r.
  static EgfPoly bounded_block(int r);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Count& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  std::span<const Count> coeffs() const noexcept { return coeffs_; }

  /// EGF product truncated at max_degree: c_m = sum_j C(m, j) a_j b_{m-j}.
  friend EgfPoly multiply(const EgfPoly& a, const EgfPoly& b, int max_degree);

  /// m! [x^m] of (this * e^x) at m = n, i.e. sum_j C(n, j) c_j.
  Count times_exp_at(int n) const;

 private:
  std::vector<Count> coeffs_;
};

/// G_r(x)^t truncated at max_degree.
EgfPoly bounded_block_power(int r, int t, int max_degree);

Count theta_egf(int n, int t, int r);

/// (n)_t (n - t + 2)^t / 2^t, valid upper bound on theta(n, t, 2) for n >= t.
Rational theta_upper_r2(int n, int t);

/// ((n - (t-1)/2) (n - t)^(r-1) / (r-1)!)^t.  Throws ApplicabilityError if n < t + r.
Rational theta_upper_general(int n, int t, int r);

/// (n - (t+r)/2 + 1)^(rt) / ((r-1)!)^t.  Requires t >= 1 and n >= max(t+1, 2r-1),
/// otherwise throws ApplicabilityError.
Rational theta_upper_recursive(int n, int t, int r);

/// Exact integer power with a nonnegative exponent.
Count ipow(const Count& base, unsigned exponent);
Rational ipow(const Rational& base, unsigned exponent);

}  // namespace fbc
