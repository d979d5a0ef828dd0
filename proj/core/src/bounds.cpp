#include "fbc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fbc/errors.hpp"
#include "fbc/gf2.hpp"

namespace fbc {

namespace {

// ceil(a / b) for b > 0 and any sign of a.
long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

Count queries(int k) { return (Count(1) << k) - 1; }

double log_queries(int k) { return std::log(std::ldexp(1.0, k) - 1.0); }

// Smallest n >= lo with pred(n), for pred monotone (false...false, true...).
template <class Pred>
int gallop_smallest(int lo, Pred&& pred) {
  if (pred(lo)) return lo;
  long long below = lo;  // pred(below) is false
  long long step = 1;
  long long above = lo + 1;
  while (!pred(static_cast<int>(above))) {
    below = above;
    step *= 2;
    above += step;
    if (above > std::numeric_limits<int>::max() / 2) throw std::overflow_error("bound search diverged");
  }
  while (above - below > 1) {
    const long long mid = below + (above - below) / 2;
    if (pred(static_cast<int>(mid))) {
      above = mid;
    } else {
      below = mid;
    }
  }
  return static_cast<int>(above);
}

int domain_start(BoundId id, const CodeParams& p) {
  long long lo = 0;
  switch (id) {
    case BoundId::kThm6:
      lo = p.t;
      break;
    case BoundId::kCor1:
      lo = ceil_div(2LL * p.r * p.t - p.t - 1, 2LL * p.r);
      break;
    case BoundId::kThm7:
      lo = ceil_div(p.t + p.r - 2, 2);
      break;
    case BoundId::kThm8:
      lo = ceil_div(3LL * p.t - 5, 4);
      break;
    case BoundId::kBaseline23:
    case BoundId::kExactTheta:
      lo = 0;
      break;
  }
  return static_cast<int>(std::max<long long>(lo, 0));
}

std::optional<double> estimate(BoundId id, const CodeParams& p) {
  const double lq = log_queries(p.k);
  const double root = std::exp((lq + std::lgamma(static_cast<double>(p.r))) / p.r);
  switch (id) {
    case BoundId::kCor1:
      return p.t - (p.t + 1.0) / (2.0 * p.r) + root;
    case BoundId::kThm7:
      return (p.t + p.r) / 2.0 - 1.0 + root;
    case BoundId::kThm8:
      return std::sqrt(2.0 * (std::ldexp(1.0, p.k) - 1.0)) + 0.75 * p.t - 1.25;
    case BoundId::kBaseline23:
      return p.t * lq / std::log(p.t + 1.0);
    default:
      return std::nullopt;
  }
}

BoundOutcome solve(BoundId id, const CodeParams& p) {
  const int lo = domain_start(id, p);
  const auto est = estimate(id, p);

  int raw = 0;
  if (est && std::isfinite(*est) && *est < std::numeric_limits<int>::max() / 4) {
    raw = std::max(lo, static_cast<int>(std::ceil(*est)));
    while (!bound_holds(id, raw, p)) ++raw;
    while (raw > lo && bound_holds(id, raw - 1, p)) --raw;
  } else {
    raw = gallop_smallest(lo, [&](int n) { return bound_holds(id, n, p); });
  }
  if (!bound_holds(id, raw, p) || (raw > lo && bound_holds(id, raw - 1, p))) {
    throw std::logic_error("bound solver failed exact certification");
  }

  BoundOutcome out{id, bound_rhs(id, p), est, raw, raw, applicability_floor(id, p), false, false};
  if (raw < out.applicability_floor) {
    out.clamped = true;
    out.min_n = out.applicability_floor;
  }
  if (out.applicability_floor >= 1) out.vacuous = necessary_condition(out.applicability_floor - 1, p);
  return out;
}

}  // namespace

CodeParams::CodeParams(int k_, int t_, int r_) : k(k_), t(t_), r(r_) {
  if (k < 1 || k > kMaxDimension) throw ParameterError("k must lie in [1, 24]");
  if (t < 1) throw ParameterError("batch size t must be at least 1");
  if (r < 1) throw ParameterError("locality r must be at least 1");
}

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::kExactTheta:
      return "exact";
    case BoundId::kThm6:
      return "thm6";
    case BoundId::kCor1:
      return "cor1";
    case BoundId::kThm7:
      return "thm7";
    case BoundId::kThm8:
      return "thm8";
    case BoundId::kBaseline23:
      return "baseline";
  }
  return "?";
}

std::optional<BoundId> parse_bound_name(std::string_view name) {
  for (auto id : {BoundId::kExactTheta, BoundId::kThm6, BoundId::kCor1, BoundId::kThm7,
                  BoundId::kThm8, BoundId::kBaseline23}) {
    if (bound_name(id) == name) return id;
  }
  return std::nullopt;
}

Count batch_count(const CodeParams& p) { return ipow(queries(p.k), static_cast<unsigned>(p.t)); }

bool necessary_condition(int n, const CodeParams& p) {
  ThetaMemo memo(p.r);
  return necessary_condition(n, p, memo);
}

bool necessary_condition(int n, const CodeParams& p, ThetaMemo& memo) {
  if (memo.r() != p.r) throw ParameterError("memo locality does not match r");
  if (n < 0) return false;
  return memo.get(n, p.t) >= batch_count(p);
}

int min_n_exact(const CodeParams& p) {
  ThetaMemo memo(p.r);
  return min_n_exact(p, memo);
}

int min_n_exact(const CodeParams& p, ThetaMemo& memo) {
  // theta vanishes below t, so t - 1 always fails.
  const int n = gallop_smallest(p.t, [&](int m) { return necessary_condition(m, p, memo); });
  if (!necessary_condition(n, p, memo) || necessary_condition(n - 1, p, memo)) {
    throw std::logic_error("necessary condition is not monotone at the search boundary");
  }
  return n;
}

Rational bound_lhs(BoundId id, int n, const CodeParams& p) {
  const auto r = static_cast<unsigned>(p.r);
  switch (id) {
    case BoundId::kThm6:
      return Rational(Count(2 * n - p.t + 1) * ipow(Count(n - p.t), r - 1),
                      Count(2) * factorial(p.r - 1));
    case BoundId::kCor1:
      return ipow(Rational(Count(2LL * p.r * (n - p.t) + p.t + 1), Count(2 * p.r)), r);
    case BoundId::kThm7:
      return ipow(Rational(Count(2 * n - p.t - p.r + 2), Count(2)), r);
    case BoundId::kThm8:
      return ipow(Rational(Count(4 * n - 3 * p.t + 5), Count(4)), 2);
    case BoundId::kBaseline23:
      return Rational(ipow(Count(p.t + 1), static_cast<unsigned>(std::max(n, 0))));
    case BoundId::kExactTheta: {
      ThetaMemo memo(p.r);
      return Rational(memo.get(std::max(n, 0), p.t));
    }
  }
  throw ParameterError("unknown bound");
}

Rational bound_rhs(BoundId id, const CodeParams& p) {
  switch (id) {
    case BoundId::kThm6:
      return Rational(queries(p.k));
    case BoundId::kCor1:
    case BoundId::kThm7:
      return Rational(queries(p.k) * factorial(p.r - 1));
    case BoundId::kThm8:
      return Rational(2 * queries(p.k));
    case BoundId::kBaseline23:
    case BoundId::kExactTheta:
      return Rational(batch_count(p));
  }
  throw ParameterError("unknown bound");
}

bool bound_holds(BoundId id, int n, const CodeParams& p) {
  if (n < domain_start(id, p)) return false;
  return bound_lhs(id, n, p) >= bound_rhs(id, p);
}

int applicability_floor(BoundId id, const CodeParams& p) {
  switch (id) {
    case BoundId::kThm6:
    case BoundId::kCor1:
      return p.t + p.r;
    case BoundId::kThm7:
      return std::max(p.t + 1, 2 * p.r - 1);
    case BoundId::kThm8:
      return 1;
    case BoundId::kBaseline23:
    case BoundId::kExactTheta:
      return 0;
  }
  return 0;
}

BoundOutcome min_n_thm6(const CodeParams& p) { return solve(BoundId::kThm6, p); }
BoundOutcome min_n_cor1(const CodeParams& p) { return solve(BoundId::kCor1, p); }
BoundOutcome min_n_thm7(const CodeParams& p) { return solve(BoundId::kThm7, p); }
BoundOutcome min_n_thm8(int k, int t) { return solve(BoundId::kThm8, CodeParams(k, t, 2)); }
BoundOutcome min_n_baseline23(int k, int t) { return solve(BoundId::kBaseline23, CodeParams(k, t, 1)); }

BoundOutcome min_n_closed_form(BoundId id, const CodeParams& p) {
  switch (id) {
    case BoundId::kThm6:
      return min_n_thm6(p);
    case BoundId::kCor1:
      return min_n_cor1(p);
    case BoundId::kThm7:
      return min_n_thm7(p);
    case BoundId::kThm8:
      return min_n_thm8(p.k, p.t);
    case BoundId::kBaseline23:
      return min_n_baseline23(p.k, p.t);
    case BoundId::kExactTheta:
      break;
  }
  throw ParameterError("exact bound has no closed form");
}

int construction_length(int k) {
  if (k < 1 || k > 29) throw ParameterError("construction length needs 1 <= k <= 29");
  return (1 << (k + 1)) - 2;
}

std::vector<Table2Row> emit_table2(int k_max) {
  if (k_max < 2 || k_max > 10) throw ParameterError("table 2 supports 2 <= k_max <= 10");
  std::vector<Table2Row> rows;
  ThetaMemo memo(2);
  for (int k = 2; k <= k_max; ++k) {
    const int t = 1 << k;
    const CodeParams p(k, t, 2);
    rows.push_back({k, t, min_n_thm8(k, t), min_n_exact(p, memo), construction_length(k)});
  }
  return rows;
}

std::string Table3Column::label() const {
  std::string s(bound_name(id));
  s += "_t" + std::to_string(t);
  if (id != BoundId::kBaseline23) s += "_r" + std::to_string(r);
  return s;
}

std::vector<Table3Column> default_table3_columns() {
  return {{BoundId::kBaseline23, 2, 1},
          {BoundId::kThm7, 2, 2},
          {BoundId::kThm7, 2, 3},
          {BoundId::kThm7, 3, 3},
          {BoundId::kThm7, 2, 5}};
}

std::vector<Table3Row> emit_table3(int k_lo, int k_hi, std::span<const Table3Column> columns) {
  if (k_lo < 1 || k_hi > kMaxDimension || k_lo > k_hi) throw ParameterError("invalid k range");
  std::vector<Table3Row> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    Table3Row row{k, {}};
    for (const auto& c : columns) {
      if (c.id == BoundId::kExactTheta) throw ParameterError("table 3 columns must be closed-form bounds");
      row.cells.push_back(min_n_closed_form(c.id, CodeParams(k, c.t, c.r)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReferenceDiscrepancy> known_table3_discrepancies() {
  const Table3Column col{BoundId::kThm7, 2, 5};
  return {{8, col, min_n_thm7(CodeParams(8, 2, 5)).min_n, 10}};
}

}  // namespace fbc
