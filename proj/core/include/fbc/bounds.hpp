#pragma once

// Lower bounds on the length n of an [n, k, t, r] functional batch code.
//
// Every closed-form bound has the shape "lhs(n) >= rhs" where lhs is
// nondecreasing in n on its domain.  Solvers estimate the threshold in
// floating point (or gallop) and then certify the answer with exact rational
// comparisons at min_n and min_n - 1.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fbc/counting.hpp"

namespace fbc {

struct CodeParams {
  int k;
  int t;
  int r;

  /// Throws ParameterError unless 1 <= k <= kMaxDimension, t >= 1, r >= 1.
  CodeParams(int k, int t, int r);
};

enum class BoundId { kExactTheta, kThm6, kCor1, kThm7, kThm8, kBaseline23 };

std::string_view bound_name(BoundId id);
std::optional<BoundId> parse_bound_name(std::string_view name);

struct BoundOutcome {
  BoundId id;
  /// Exact threshold that lhs(n) must reach; absent for kExactTheta.
  std::optional<Rational> rhs;
  /// Real-valued n >= estimate form of the bound, when it has a closed form.
  std::optional<double> n_estimate;
  /// Smallest n on the bound's domain satisfying the inequality, ignoring the floor.
  int raw_min_n;
  /// max(raw_min_n, applicability_floor).
  int min_n;
  /// The bound is proven only for n >= applicability_floor.
  int applicability_floor;
  /// raw_min_n < applicability_floor.
  bool clamped;
  /// The exact counting condition cannot exclude codes shorter than the floor,
  /// so min_n is not a lower bound on the minimal length.
  bool vacuous;
};

/// (2^k - 1)^t, the number of ordered batches of nonzero queries.
Count batch_count(const CodeParams& p);

/// theta_{t,r}(n) >= (2^k - 1)^t.  False means no [n,k,t,r] functional batch code exists.
bool necessary_condition(int n, const CodeParams& p);
bool necessary_condition(int n, const CodeParams& p, ThetaMemo& memo);

/// Smallest n with necessary_condition true (galloping, then binary search).
int min_n_exact(const CodeParams& p);
int min_n_exact(const CodeParams& p, ThetaMemo& memo);

/// Exact left-hand side lhs(n) of a closed-form bound and its threshold.
Rational bound_lhs(BoundId id, int n, const CodeParams& p);
Rational bound_rhs(BoundId id, const CodeParams& p);
/// Whether n lies in the domain where lhs is monotone and the inequality holds there.
bool bound_holds(BoundId id, int n, const CodeParams& p);
int applicability_floor(BoundId id, const CodeParams& p);

BoundOutcome min_n_thm6(const CodeParams& p);
BoundOutcome min_n_cor1(const CodeParams& p);
BoundOutcome min_n_thm7(const CodeParams& p);
/// r = 2 bound; p.r is ignored.
BoundOutcome min_n_thm8(int k, int t);
/// (t+1)^n >= (2^k-1)^t; independent of r.
BoundOutcome min_n_baseline23(int k, int t);

/// Dispatch for the closed-form bounds (not kExactTheta).
BoundOutcome min_n_closed_form(BoundId id, const CodeParams& p);

/// Length of the double-simplex code, 2^(k+1) - 2.
int construction_length(int k);

struct Table2Row {
  int k;
  int t;
  BoundOutcome thm8;
  int exact;
  int construction;
};

/// Rows k = 2..k_max at r = 2 and t = 2^k.
std::vector<Table2Row> emit_table2(int k_max);

struct Table3Column {
  BoundId id;
  int t;
  int r;

  std::string label() const;
};

/// Baseline at t = 2 followed by the locality bound at (t,r) = (2,2), (2,3), (3,3), (2,5).
std::vector<Table3Column> default_table3_columns();

struct Table3Row {
  int k;
  std::vector<BoundOutcome> cells;
};

std::vector<Table3Row> emit_table3(int k_lo, int k_hi, std::span<const Table3Column> columns);

/// A cell where the certified value differs from a widely cited tabulation.
struct ReferenceDiscrepancy {
  int k;
  Table3Column column;
  int certified;
  int reference;
};

std::vector<ReferenceDiscrepancy> known_table3_discrepancies();

}  // namespace fbc
