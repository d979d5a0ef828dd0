#include "fbc/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fbc/errors.hpp"

namespace fbc {
namespace {

TEST(CodeParams, Validation) {
  EXPECT_THROW(CodeParams(0, 1, 1), ParameterError);
  EXPECT_THROW(CodeParams(25, 1, 1), ParameterError);
  EXPECT_THROW(CodeParams(3, 0, 1), ParameterError);
  EXPECT_THROW(CodeParams(3, 1, 0), ParameterError);
}

TEST(BoundNames, RoundTrip) {
  for (auto id : {BoundId::kExactTheta, BoundId::kThm6, BoundId::kCor1, BoundId::kThm7, BoundId::kThm8,
                  BoundId::kBaseline23}) {
    EXPECT_EQ(parse_bound_name(bound_name(id)), id);
  }
  EXPECT_FALSE(parse_bound_name("thm9"));
}

TEST(NecessaryCondition, Examples) {
  EXPECT_TRUE(necessary_condition(5, CodeParams(2, 4, 2)));   // 360 >= 81
  EXPECT_FALSE(necessary_condition(4, CodeParams(2, 4, 2)));  // 24 < 81
  EXPECT_FALSE(necessary_condition(9, CodeParams(3, 8, 2)));
  EXPECT_TRUE(necessary_condition(10, CodeParams(3, 8, 2)));
  ThetaMemo wrong(3);
  EXPECT_THROW(necessary_condition(5, CodeParams(2, 4, 2), wrong), ParameterError);
}

TEST(NecessaryCondition, MonotoneInN) {
  for (int k = 1; k <= 6; ++k) {
    for (int t = 1; t <= 5; ++t) {
      for (int r = 1; r <= 4; ++r) {
        const CodeParams p(k, t, r);
        ThetaMemo memo(r);
        bool seen = false;
        for (int n = 0; n <= 60; ++n) {
          const bool ok = necessary_condition(n, p, memo);
          if (seen) EXPECT_TRUE(ok) << k << "," << t << "," << r << " n=" << n;
          seen = seen || ok;
        }
      }
    }
  }
}

TEST(MinNExact, Values) {
  EXPECT_EQ(min_n_exact(CodeParams(2, 4, 2)), 5);
  EXPECT_EQ(min_n_exact(CodeParams(4, 16, 2)), 19);
  EXPECT_EQ(min_n_exact(CodeParams(7, 128, 2)), 146);
  // 2^1 - 1 = 1 batch: any length with theta > 0, i.e. n >= t.
  EXPECT_EQ(min_n_exact(CodeParams(1, 6, 3)), 6);
}

TEST(MinNExact, AgreesWithLinearScan) {
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= 5; ++t) {
      for (int r = 1; r <= 4; ++r) {
        const CodeParams p(k, t, r);
        int n = 0;
        while (!necessary_condition(n, p)) ++n;
        EXPECT_EQ(min_n_exact(p), n);
      }
    }
  }
}

TEST(Thm6, Examples) {
  // Smallest n with (2n - 1)(n - 2)^2 >= 4 * 1023, scanned in plain integers.
  long long n = 2;
  while ((2 * n - 1) * (n - 2) * (n - 2) < 4 * 1023) ++n;
  ASSERT_EQ(n, 15);
  const auto o = min_n_thm6(CodeParams(10, 2, 3));
  EXPECT_EQ(o.min_n, 15);
  EXPECT_EQ(o.applicability_floor, 5);
  EXPECT_FALSE(o.clamped);
  EXPECT_FALSE(o.vacuous);
  EXPECT_EQ(o.rhs, Rational(1023));
}

TEST(Thm6, LocalityOneIsDistinctColumnShape) {
  for (int k = 1; k <= 12; ++k) {
    for (int t = 1; t <= 6; ++t) {
      // 2^k - 1 <= n - (t-1)/2  <=>  2n >= 2^(k+1) - 2 + t - 1, and the inequality starts at n = t.
      const int expected = std::max(t, static_cast<int>(std::ceil(((1 << (k + 1)) - 2 + t - 1) / 2.0)));
      EXPECT_EQ(min_n_thm6(CodeParams(k, t, 1)).raw_min_n, expected) << k << "," << t;
    }
  }
}

TEST(Cor1, Examples) {
  const auto o = min_n_cor1(CodeParams(10, 2, 3));
  EXPECT_EQ(o.min_n, 15);
  ASSERT_TRUE(o.n_estimate);
  EXPECT_NEAR(*o.n_estimate, 1.5 + std::cbrt(2046.0), 1e-9);
  for (int k = 1; k <= 12; ++k) {
    for (int t = 1; t <= 6; ++t) {
      const auto c = min_n_cor1(CodeParams(k, t, 1));
      EXPECT_NEAR(*c.n_estimate, t - (t + 1) / 2.0 + ((1 << k) - 1), 1e-9);
      EXPECT_EQ(c.raw_min_n, static_cast<int>(std::ceil(*c.n_estimate - 1e-12)));
    }
  }
}

TEST(Cor1, MonotoneInK) {
  for (int t = 1; t <= 6; ++t) {
    for (int r = 1; r <= 5; ++r) {
      double prev = -1e9;
      int prev_n = 0;
      for (int k = 1; k <= 20; ++k) {
        const auto o = min_n_cor1(CodeParams(k, t, r));
        EXPECT_GT(*o.n_estimate, prev);
        EXPECT_GE(o.raw_min_n, prev_n);
        prev = *o.n_estimate;
        prev_n = o.raw_min_n;
      }
    }
  }
}

TEST(Cor1, NeverExceedsThm6) {
  for (int k = 1; k <= 15; ++k) {
    for (int t = 1; t <= 4; ++t) {
      for (int r = 1; r <= 5; ++r) {
        const CodeParams p(k, t, r);
        EXPECT_LE(min_n_cor1(p).raw_min_n, min_n_thm6(p).raw_min_n) << k << "," << t << "," << r;
      }
    }
  }
}

TEST(Thm7, Examples) {
  EXPECT_EQ(min_n_thm7(CodeParams(15, 2, 2)).min_n, 183);
  EXPECT_EQ(min_n_thm7(CodeParams(5, 2, 3)).min_n, 6);
  EXPECT_EQ(min_n_thm7(CodeParams(15, 3, 3)).min_n, 43);
}

TEST(Thm7, ClampingAndVacuity) {
  const auto k5 = min_n_thm7(CodeParams(5, 2, 5));
  EXPECT_EQ(k5.raw_min_n, 7);
  EXPECT_EQ(k5.applicability_floor, 9);
  EXPECT_TRUE(k5.clamped);
  EXPECT_TRUE(k5.vacuous);

  const auto k7 = min_n_thm7(CodeParams(7, 2, 5));
  EXPECT_EQ(k7.raw_min_n, 8);
  EXPECT_EQ(k7.min_n, 9);
  EXPECT_TRUE(k7.clamped);
  EXPECT_FALSE(k7.vacuous);

  const auto k8 = min_n_thm7(CodeParams(8, 2, 5));
  EXPECT_EQ(k8.raw_min_n, 9);
  EXPECT_EQ(k8.min_n, 9);
  EXPECT_FALSE(k8.clamped);
  EXPECT_FALSE(k8.vacuous);
}

TEST(Thm8, Examples) {
  EXPECT_EQ(min_n_thm8(7, 128).min_n, 111);
  EXPECT_EQ(min_n_thm8(5, 32).min_n, 31);
  EXPECT_EQ(min_n_thm8(2, 4).min_n, 5);
  EXPECT_FALSE(min_n_thm8(5, 32).clamped);
}

TEST(Baseline, Examples) {
  EXPECT_EQ(min_n_baseline23(5, 2).min_n, 7);
  EXPECT_EQ(min_n_baseline23(15, 2).min_n, 19);
  for (int t = 1; t <= 8; ++t) EXPECT_EQ(min_n_baseline23(1, t).min_n, 0);
}

TEST(Construction, Lengths) {
  EXPECT_EQ(construction_length(1), 2);
  EXPECT_EQ(construction_length(3), 14);
  EXPECT_EQ(construction_length(7), 254);
  EXPECT_THROW(construction_length(0), ParameterError);
}

TEST(Construction, NeverBelowExactBound) {
  for (int k = 1; k <= 4; ++k) EXPECT_LE(min_n_exact(CodeParams(k, 1 << k, 2)), construction_length(k));
}

TEST(Certification, RandomDraws) {
  std::mt19937 rng(2024);
  for (auto id : {BoundId::kThm6, BoundId::kCor1, BoundId::kThm7, BoundId::kThm8, BoundId::kBaseline23}) {
    for (int draw = 0; draw < 60; ++draw) {
      const CodeParams p(1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 40),
                         1 + static_cast<int>(rng() % 6));
      const auto o = min_n_closed_form(id, p);
      const CodeParams q = id == BoundId::kThm8 ? CodeParams(p.k, p.t, 2)
                           : id == BoundId::kBaseline23 ? CodeParams(p.k, p.t, 1)
                                                        : p;
      EXPECT_TRUE(bound_holds(id, o.raw_min_n, q));
      EXPECT_FALSE(bound_holds(id, o.raw_min_n - 1, q));
      EXPECT_TRUE(bound_holds(id, o.min_n, q));
      EXPECT_EQ(o.clamped, o.raw_min_n < o.applicability_floor);
      EXPECT_EQ(o.min_n, std::max(o.raw_min_n, o.applicability_floor));
    }
  }
}

TEST(Soundness, ClosedFormsNeverExceedExact) {
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= 4; ++t) {
      for (int r = 1; r <= 4; ++r) {
        const CodeParams p(k, t, r);
        const int exact = min_n_exact(p);
        std::vector<BoundOutcome> outs{min_n_thm6(p), min_n_cor1(p), min_n_thm7(p), min_n_baseline23(k, t)};
        if (r == 2) outs.push_back(min_n_thm8(k, t));
        for (const auto& o : outs) {
          if (o.vacuous) {
            EXPECT_LT(exact, o.applicability_floor);
          } else {
            EXPECT_LE(o.min_n, exact) << bound_name(o.id) << " " << k << "," << t << "," << r;
          }
        }
      }
    }
  }
}

TEST(Table2, Rows) {
  const auto rows = emit_table2(7);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].k, 2);
  EXPECT_EQ(rows[0].t, 4);
  EXPECT_EQ(rows[0].thm8.min_n, 5);
  EXPECT_EQ(rows[0].exact, 5);
  EXPECT_EQ(rows[0].construction, 6);
  EXPECT_EQ(rows[4].thm8.min_n, 58);
  EXPECT_EQ(rows[4].exact, 74);
  EXPECT_EQ(rows[4].construction, 126);
  for (const auto& r : rows) {
    EXPECT_LE(r.thm8.min_n, r.exact);
    EXPECT_LE(r.exact, r.construction);
  }
  EXPECT_THROW(emit_table2(1), ParameterError);
}

TEST(Table3, Rows) {
  const auto cols = default_table3_columns();
  ASSERT_EQ(cols.size(), 5u);
  const auto rows = emit_table3(5, 15, cols);
  ASSERT_EQ(rows.size(), 11u);
  const auto values = [](const Table3Row& r) {
    std::vector<int> v;
    for (const auto& c : r.cells) v.push_back(c.vacuous ? -1 : c.min_n);
    return v;
  };
  EXPECT_EQ(values(rows[12 - 5]), (std::vector<int>{16, 65, 22, 23, 13}));
  EXPECT_EQ(values(rows[9 - 5]), (std::vector<int>{12, 24, 12, 13, 10}));
  EXPECT_TRUE(rows[0].cells[4].vacuous);
  EXPECT_EQ(cols[4].label(), "thm7_t2_r5");
  EXPECT_EQ(cols[0].label(), "baseline_t2");
}

TEST(Table3, KnownDiscrepancy) {
  const auto d = known_table3_discrepancies();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].k, 8);
  EXPECT_EQ(d[0].certified, 9);
  EXPECT_EQ(d[0].reference, 10);
}

}  // namespace
}  // namespace fbc
