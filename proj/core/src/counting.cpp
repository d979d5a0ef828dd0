#include "fbc/counting.hpp"

#include <algorithm>
#include <string>

#include "fbc/errors.hpp"

namespace fbc {

namespace {

void require_nonnegative(int v, const char* name) {
  if (v < 0) throw ParameterError(std::string(name) + " must be nonnegative");
}

void require_locality(int r) {
  if (r < 1) throw ParameterError("locality r must be at least 1");
}

}  // namespace

Count factorial(int n) {
  require_nonnegative(n, "n");
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Count binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) return 0;
  m = std::min(m, n - m);
  Count c = 1;
  for (int i = 1; i <= m; ++i) {
    c *= n - m + i;
    c /= i;
  }
  return c;
}

Count falling_factorial(int n, int m) {
  require_nonnegative(n, "n");
  if (m < 0 || m > n) {
    throw ParameterError("falling factorial (" + std::to_string(n) + ")_" + std::to_string(m) +
                         " needs 0 <= m <= n");
  }
  Count p = 1;
  for (int i = 0; i < m; ++i) p *= n - i;
  return p;
}

Count multinomial(int n, std::span<const int> parts) {
  require_nonnegative(n, "n");
  long long sum = 0;
  for (int p : parts) {
    require_nonnegative(p, "multinomial part");
    sum += p;
  }
  if (sum != n) throw ParameterError("multinomial parts must sum to n");
  Count result = factorial(n);
  for (int p : parts) result /= factorial(p);
  return result;
}

Count theta_direct(int n, int t, int r) {
  require_nonnegative(n, "n");
  require_nonnegative(t, "t");
  require_locality(r);
  if (t == 0) return 1;
  if (n < t) return 0;

  // n! / ((n - s)! prod i_l!), accumulated over nested counters i_l in [1, r].
  const Count n_fact = factorial(n);
  std::vector<Count> small_fact(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) small_fact[i] = factorial(i);

  std::vector<int> parts(static_cast<std::size_t>(t), 1);
  int sum = t;
  Count total = 0;
  while (true) {
    if (sum <= n) {
      Count den = factorial(n - sum);
      for (int p : parts) den *= small_fact[p];
      total += n_fact / den;
    }
    // Advance the odometer; once the prefix already exceeds n, skip the rest of that digit.
    int pos = t - 1;
    while (pos >= 0) {
      if (parts[pos] < r && sum < n) {
        ++parts[pos];
        ++sum;
        break;
      }
      sum -= parts[pos] - 1;
      parts[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return total;
}

ThetaMemo::ThetaMemo(int r) : r_(r) { require_locality(r); }

void ThetaMemo::grow(int n, int t) {
  const int new_width = std::max(width_, n + 1);
  const int new_rows = std::max(rows(), t + 1);

  // Extend existing rows to the new width, then append rows at full width.
  // Row t' only reads row t'-1 at smaller n, so filling row by row is enough.
  std::vector<Count> binom_row;
  for (int tt = 0; tt < new_rows; ++tt) {
    if (tt == rows()) table_.emplace_back();
    auto& row = table_[tt];
    const int start = static_cast<int>(row.size());
    row.resize(static_cast<std::size_t>(new_width));
    for (int nn = start; nn < new_width; ++nn) {
      if (tt == 0) {
        row[nn] = 1;
        continue;
      }
      Count acc = 0;
      Count c = 1;  // C(nn, i), built incrementally
      const auto& prev = table_[tt - 1];
      for (int i = 1; i <= r_ && i <= nn; ++i) {
        c *= nn - i + 1;
        c /= i;
        acc += c * prev[nn - i];
      }
      row[nn] = std::move(acc);
    }
  }
  width_ = new_width;
}

const Count& ThetaMemo::get(int n, int t) {
  require_nonnegative(n, "n");
  require_nonnegative(t, "t");
  if (n >= width_ || t >= rows()) grow(n, t);
  return table_[t][n];
}

Count theta_rec(ThetaMemo& memo, int n, int t) { return memo.get(n, t); }

EgfPoly EgfPoly::one() { return EgfPoly({Count(1)}); }

EgfPoly EgfPoly::bounded_block(int r) {
  require_locality(r);
  std::vector<Count> c(static_cast<std::size_t>(r) + 1, Count(1));
  c[0] = 0;
  return EgfPoly(std::move(c));
}

EgfPoly multiply(const EgfPoly& a, const EgfPoly& b, int max_degree) {
  const int deg = std::min(a.degree() + b.degree(), max_degree);
  if (deg < 0) return EgfPoly();
  std::vector<Count> out(static_cast<std::size_t>(deg) + 1);
  for (int m = 0; m <= deg; ++m) {
    Count acc = 0;
    const int lo = std::max(0, m - b.degree());
    const int hi = std::min(m, a.degree());
    for (int j = lo; j <= hi; ++j) {
      if (a.coeffs_[j] == 0 || b.coeffs_[m - j] == 0) continue;
      acc += binomial(m, j) * a.coeffs_[j] * b.coeffs_[m - j];
    }
    out[m] = std::move(acc);
  }
  return EgfPoly(std::move(out));
}

Count EgfPoly::times_exp_at(int n) const {
  Count acc = 0;
  for (int m = 0; m <= std::min(n, degree()); ++m) acc += binomial(n, m) * coeffs_[m];
  return acc;
}

EgfPoly bounded_block_power(int r, int t, int max_degree) {
  require_nonnegative(t, "t");
  if (t == 0) return EgfPoly::one();
  const EgfPoly block = EgfPoly::bounded_block(r);
  EgfPoly acc = multiply(EgfPoly::one(), block, max_degree);
  for (int i = 1; i < t; ++i) acc = multiply(acc, block, max_degree);
  return acc;
}

Count theta_egf(int n, int t, int r) {
  require_nonnegative(n, "n");
  require_nonnegative(t, "t");
  require_locality(r);
  const int max_degree = static_cast<int>(std::min<long long>(n, 1LL * r * t));
  return bounded_block_power(r, t, max_degree).times_exp_at(n);
}

Count ipow(const Count& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational ipow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Rational theta_upper_r2(int n, int t) {
  require_nonnegative(t, "t");
  if (n < t) throw ParameterError("theta_upper_r2 needs n >= t");
  const Count num = falling_factorial(n, t) * ipow(Count(n - t + 2), static_cast<unsigned>(t));
  return Rational(num, ipow(Count(2), static_cast<unsigned>(t)));
}

Rational theta_upper_general(int n, int t, int r) {
  require_nonnegative(t, "t");
  require_locality(r);
  if (n < t + r) {
    throw ApplicabilityError("bound needs n >= t + r (n=" + std::to_string(n) +
                             ", t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")");
  }
  // (2n - t + 1)/2 * (n - t)^(r-1) / (r-1)!
  const Rational base(Count(2 * n - t + 1) * ipow(Count(n - t), static_cast<unsigned>(r - 1)),
                      Count(2) * factorial(r - 1));
  return ipow(base, static_cast<unsigned>(t));
}

Rational theta_upper_recursive(int n, int t, int r) {
  require_locality(r);
  if (t < 1 || n < std::max(t + 1, 2 * r - 1)) {
    throw ApplicabilityError("bound needs t >= 1 and n >= max(t+1, 2r-1) (n=" +
                             std::to_string(n) + ", t=" + std::to_string(t) +
                             ", r=" + std::to_string(r) + ")");
  }
  const unsigned rt = static_cast<unsigned>(r) * static_cast<unsigned>(t);
  const Count num = ipow(Count(2 * n - t - r + 2), rt);
  const Count den = ipow(Count(2), rt) * ipow(factorial(r - 1), static_cast<unsigned>(t));
  return Rational(num, den);
}

}  // namespace fbc
