#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "lvc/auc.hpp"
#include "lvc/ivt.hpp"
#include "lvc/nash.hpp"
#include "lvc/pwl.hpp"
#include "lvc/rdiv.hpp"
#include "support.hpp"

using namespace lvc;
using lvc::testing::words_of_length;

namespace {

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

PwlFunction linear() { return PwlFunction::make({{0, -1}, {1, 2}}); }
PwlFunction flat() { return PwlFunction::make({{0, -1}, {q(2, 5), 0}, {q(3, 5), 0}, {1, 1}}); }

/// Advice with bit b followed by the binary name of x.
Bits ivt_advice(int b, const Rational& x) {
  const Bits name = binary_from_rational(x);
  return Bits([b, name](std::size_t i) { return i == 0 ? static_cast<std::uint8_t>(b) : name[i - 1]; });
}

Rational random_unit(std::mt19937_64& rng, long long max_den) {
  const long long d = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_den));
  return make_rational(static_cast<long long>(rng() % static_cast<std::uint64_t>(d + 1)), d);
}

/// Random PWL with a sign change; about a third of the inner breakpoints sit at zero.
PwlFunction random_pwl(std::mt19937_64& rng) {
  const std::size_t inner = rng() % 6;
  std::vector<Rational> ts;
  for (std::size_t i = 0; i < inner; ++i) ts.push_back(make_rational(static_cast<long long>(1 + rng() % 99), 100));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const int s = rng() % 2 ? 1 : -1;
  std::vector<std::pair<Rational, Rational>> pts{{0, Rational(-s) * make_rational(1 + static_cast<long long>(rng() % 9), 4)}};
  for (const auto& t : ts) {
    const long long v = rng() % 3 == 0 ? 0 : static_cast<long long>(rng() % 17) - 8;
    pts.emplace_back(t, make_rational(v, 4));
  }
  pts.emplace_back(1, Rational(s) * make_rational(1 + static_cast<long long>(rng() % 9), 4));
  return PwlFunction::make(std::move(pts));
}

/// Independent equilibrium check by pure-strategy deviations.
bool is_equilibrium(const BimatrixGame& g, const StrategyPair& s) {
  const std::size_t m = g.rows(), n = g.cols();
  auto row_payoff = [&](const Vector& x) {
    Rational v = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) v += x[i] * g.A[i][j] * s.y[j];
    return v;
  };
  auto col_payoff = [&](const Vector& y) {
    Rational v = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) v += s.x[i] * g.B[i][j] * y[j];
    return v;
  };
  const Rational base_a = row_payoff(s.x), base_b = col_payoff(s.y);
  for (std::size_t i = 0; i < m; ++i) {
    Vector e(m, 0);
    e[i] = 1;
    if (row_payoff(e) > base_a) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, 0);
    e[j] = 1;
    if (col_payoff(e) > base_b) return false;
  }
  return true;
}

BimatrixGame random_game(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  Matrix a(m, Vector(n)), b(m, Vector(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = make_rational(static_cast<long long>(rng() % 2001) - 1000, 997);
      b[i][j] = make_rational(static_cast<long long>(rng() % 2001) - 1000, 991);
    }
  return BimatrixGame::make(std::move(a), std::move(b));
}

}  // namespace

// ---- robust division ----

TEST(Rdiv, Examples) {
  EXPECT_EQ(rdiv(q(1, 2), q(1, 4)), 1);
  EXPECT_EQ(rdiv(q(1, 4), q(1, 2)), q(1, 2));
  EXPECT_EQ(rdiv(q(3, 7), 0), 0);
  for (const auto& v : {q(0), q(1, 3), q(1)}) EXPECT_TRUE(rdiv_accepts(q(3, 7), 0, v));
  EXPECT_FALSE(rdiv_accepts(q(1, 4), q(1, 2), q(1, 3)));
  EXPECT_THROW(rdiv(q(3, 2), q(1, 2)), std::invalid_argument);
  EXPECT_THROW(rdiv(q(1, 2), q(-1, 2)), std::invalid_argument);
}

TEST(Rdiv, GridProperties) {
  for (long long i = 0; i <= 49; ++i)
    for (long long j = 0; j <= 49; ++j) {
      const Rational x = make_rational(i, 49), y = make_rational(j, 49);
      const Rational v = rdiv(x, y);
      ASSERT_GE(v, 0);
      ASSERT_LE(v, 1);
      if (y > 0 && x >= y) { ASSERT_EQ(v, 1); }
      if (y > 0 && x < y) { ASSERT_EQ(v, x / y); }
      ASSERT_TRUE(rdiv_accepts(x, y, v));
    }
}

TEST(RdivStream, Examples) {
  auto o = rdiv_stream(sds_from_rational(q(1, 2)), sds_from_rational(q(1, 4)), 30, {1'000'000});
  ASSERT_EQ(o.status, RdivStatus::Converged);
  EXPECT_LE(lvc::abs(o.value.to_rational() - 1), rational_pow2(-30));
  EXPECT_EQ(o.mind_changes, 1u);
  ASSERT_TRUE(o.witness_precision.has_value());

  o = rdiv_stream(sds_from_rational(0), sds_from_rational(0), 30, {10000});
  EXPECT_EQ(o.status, RdivStatus::Exhausted);
  EXPECT_EQ(o.value, Dyadic(0));
  EXPECT_EQ(o.mind_changes, 0u);
  EXPECT_FALSE(o.witness_precision.has_value());
  EXPECT_LE(o.steps, 10000u);

  // y = 0 < x: the witness still arrives and 1 is one of the correct answers.
  o = rdiv_stream(sds_from_rational(q(2, 3)), sds_from_rational(0), 30, {10000});
  ASSERT_EQ(o.status, RdivStatus::Converged);
  EXPECT_EQ(o.mind_changes, 1u);
  EXPECT_TRUE(rdiv_accepts(q(2, 3), 0, o.value.to_rational()));

  // x = 1/4 written with a negative digit: 1/2 - 1/4.
  const SignedDigitStream x(Stream<int>::from_prefix({1, -1}));
  o = rdiv_stream(x, sds_from_rational(q(1, 2)), 20, {10000});
  ASSERT_EQ(o.status, RdivStatus::Converged);
  EXPECT_LE(lvc::abs(o.value.to_rational() - q(1, 2)), rational_pow2(-20));
}

TEST(RdivStream, AgreesWithExactQuotient) {
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = random_unit(rng, 1000);
    Rational y = random_unit(rng, 1000);
    if (y == 0) y = make_rational(1, 1000);
    const auto o = rdiv_stream(sds_from_rational(x), sds_from_rational(y), 30, {1'000'000});
    ASSERT_EQ(o.status, RdivStatus::Converged);
    ASSERT_LE(o.mind_changes, 1u);
    ASSERT_LE(lvc::abs(o.value.to_rational() - rdiv(x, y)), rational_pow2(-30));
    ASSERT_GE(o.value.to_rational(), 0);
    ASSERT_LE(o.value.to_rational(), 1);
  }
}

TEST(RdivStream, AtMostOneMindChangeEvenWithoutConvergence) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_unit(rng, 50), y = random_unit(rng, 50);
    for (std::size_t fuel : {0u, 2u, 7u, 40u}) ASSERT_LE(rdiv_stream(sds_from_rational(x), sds_from_rational(y), 30, {fuel}).mind_changes, 1u);
  }
}

// ---- all-or-unique choice ----

TEST(Auc, FullIntervalPassesThrough) {
  const auto p = neg_full_name();
  EXPECT_EQ(auc_K_interval(p, 64), (Interval{0, 1}));
  EXPECT_FALSE(neg_first_information(auc_K(p, 64), 64).has_value());
  const CauchyName y = uniform_point_name({0, 1}, binary_from_rational(q(2, 7)));
  const CauchyName h = auc_H(p, y, 64);
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(h[i], y[i + 1]);
}

TEST(Auc, SingletonExample) {
  const auto p = neg_singleton_name(q(1, 3), 4);
  const Interval iv = auc_K_interval(p);
  EXPECT_TRUE(iv.contains(q(1, 3)));
  EXPECT_LE(iv.length(), rational_pow2(-4));
  EXPECT_LT(iv.lo, iv.hi);
  // K names exactly that interval.
  EXPECT_EQ(neg_hull(auc_K(p), 10), iv);
  EXPECT_EQ(neg_first_information(auc_K(p), 10), 4u);
  for (const auto& r : {q(0), q(1, 2), q(1)}) {
    const CauchyName h = auc_H(p, uniform_point_name(iv, binary_from_rational(r)));
    for (std::size_t i = 0; i < 40; ++i)
      EXPECT_LE(lvc::abs(h[i] - q(1, 3)), rational_pow2(-static_cast<std::int64_t>(i)));
    EXPECT_LE(lvc::abs(h[60] - q(1, 3)), rational_pow2(-60));
  }
}

TEST(Auc, RandomSingletonsGiveCauchyNamesOfThePoint) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = random_unit(rng, 200);
    const std::size_t n = rng() % 12;
    const auto p = neg_singleton_name(x, n);
    const Interval iv = auc_K_interval(p);
    ASSERT_TRUE(iv.contains(x));
    ASSERT_LE(iv.length(), rational_pow2(-static_cast<std::int64_t>(n)));
    const CauchyName h = auc_H(p, uniform_point_name(iv, seeded_bits(rng())));
    for (std::size_t i = 0; i < 24; ++i)
      ASSERT_LE(lvc::abs(h[i] - x), rational_pow2(-static_cast<std::int64_t>(i)));
  }
}

TEST(Auc, ProbabilisticChoiceMachineAlwaysSucceeds) {
  std::mt19937_64 rng(50);
  const auto m = auc_pcc_machine();
  for (int input = 0; input < 10; ++input) {
    const Rational x = random_unit(rng, 100);
    const auto p = neg_singleton_name(x, rng() % 8);
    const auto e = lv_estimate_success(m, p, 20, rng(), {1000}, 16);
    EXPECT_EQ(e.succeeded, 20u);
    const auto o = lv_run(m, p, seeded_bits(rng()), 16, {1000});
    ASSERT_EQ(o.status, RunStatus::Succeeding);
    EXPECT_LE(lvc::abs(o.output.back() - x), rational_pow2(-15));
  }
}

TEST(Auc, RobustDivisionNames) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = random_unit(rng, 60);
    Rational y = random_unit(rng, 60);
    if (y == 0) y = make_rational(1, 3);
    const auto p = rdiv_auc_name(sds_from_rational(x), sds_from_rational(y));
    const auto loc = neg_localize(p, rational_pow2(-12), 200);
    ASSERT_TRUE(loc.has_value());
    ASSERT_TRUE(loc->first.contains(rdiv(x, y)));
  }
  const auto at_zero = rdiv_auc_name(sds_from_rational(q(1, 3)), sds_from_rational(0));
  const auto loc = neg_localize(at_zero, rational_pow2(-12), 200);
  ASSERT_TRUE(loc.has_value());
  EXPECT_TRUE(loc->first.contains(1));
  EXPECT_FALSE(neg_first_information(rdiv_auc_name(sds_from_rational(0), sds_from_rational(0)), 200).has_value());
}

// ---- Nash equilibria ----

TEST(Nash, FamilyClosedForm) {
  EXPECT_EQ(nash_2x2_family(1).second.y[0], q(1, 2));
  EXPECT_EQ(nash_2x2_family(0).second.y[0], q(1, 3));
  for (const auto& a : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
    const auto [g, s] = nash_2x2_family(a);
    EXPECT_TRUE(nash_verify(g, s));
    EXPECT_TRUE(is_equilibrium(g, s));
    const auto r = nash_solve(g);
    ASSERT_TRUE(r.equilibrium.has_value());
    EXPECT_EQ(*r.equilibrium, s);
    EXPECT_EQ(r.equilibrium->x, (Vector{q(1, 2), q(1, 2)}));
    EXPECT_EQ(r.equilibrium->y[0], (1 + a) / (3 + a));
    EXPECT_EQ(nash_family_parameter(r.equilibrium->y[0]), a);
  }
  EXPECT_THROW(nash_2x2_family(q(3, 2)), std::invalid_argument);
}

TEST(Nash, VerifyRejectsNonEquilibria) {
  const auto [g, s] = nash_2x2_family(q(1, 2));
  EXPECT_FALSE(nash_verify(g, StrategyPair::make({1, 0}, {1, 0})));
  EXPECT_THROW(StrategyPair::make({q(3, 2), q(-1, 2)}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(StrategyPair::make({q(1, 2), q(1, 3)}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(nash_verify(g, StrategyPair::make({1}, {1, 0})), std::invalid_argument);
  EXPECT_THROW(BimatrixGame::make({{1, 2}}, {{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(BimatrixGame::make({{1, 2}, {3}}, {{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST(Nash, MatchingPennies) {
  const auto g = BimatrixGame::make({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const auto r = nash_solve(g);
  ASSERT_TRUE(r.equilibrium.has_value());
  EXPECT_EQ(r.equilibrium->x, (Vector{q(1, 2), q(1, 2)}));
  EXPECT_EQ(r.equilibrium->y, (Vector{q(1, 2), q(1, 2)}));
}

TEST(Nash, DominantStrategyIsPure) {
  const auto g = BimatrixGame::make({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}});
  const auto r = nash_solve(g);
  ASSERT_TRUE(r.equilibrium.has_value());
  EXPECT_EQ(r.row_support.size(), 1u);
  EXPECT_EQ(r.col_support.size(), 1u);
  EXPECT_EQ(r.equilibrium->x, (Vector{1, 0}));
  EXPECT_EQ(r.equilibrium->y, (Vector{1, 0}));
  EXPECT_TRUE(is_equilibrium(g, *r.equilibrium));
}

TEST(Nash, RandomGamesSolveAndVerify) {
  std::mt19937_64 rng(2718);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 2}, {4, 3}};
  for (const auto& [m, n] : shapes)
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_game(rng, m, n);
      const auto r = nash_solve(g);
      ASSERT_TRUE(r.equilibrium.has_value());
      const auto& s = *r.equilibrium;
      ASSERT_TRUE(nash_verify(g, s));
      ASSERT_TRUE(is_equilibrium(g, s));
      Rational sx = 0, sy = 0;
      for (const auto& v : s.x) {
        ASSERT_GE(v, 0);
        sx += v;
      }
      for (const auto& v : s.y) {
        ASSERT_GE(v, 0);
        sy += v;
      }
      ASSERT_EQ(sx, 1);
      ASSERT_EQ(sy, 1);
    }
}

TEST(Nash, SubsetsAndLinearAlgebra) {
  EXPECT_EQ(index_subsets(4, 2), (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(index_subsets(3, 0).empty());
  EXPECT_TRUE(index_subsets(2, 3).empty());
  // v0 - v1 = 0, v0 + v1 = 1
  auto v = solve_probability_system({{1, -1}, {1, 1}}, {0, 1}, 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (Vector{q(1, 2), q(1, 2)}));
  EXPECT_FALSE(solve_probability_system({{1, 1}}, {1}, 2).has_value());            // underdetermined
  EXPECT_FALSE(solve_probability_system({{1, 1}, {1, 1}}, {1, 0}, 2).has_value());  // inconsistent
  EXPECT_FALSE(solve_probability_system({{1, -3}, {1, 1}}, {2, 1}, 2).has_value()); // leaves [0,1]
  EXPECT_EQ(guarded_divide(q(-1, 3), q(2, 3)), q(-1, 2));
  EXPECT_EQ(guarded_divide(q(2, 3), q(-2, 3)), -1);
}

// ---- piecewise-linear functions ----

TEST(Pwl, EvaluationAndZeroSets) {
  EXPECT_EQ(pwl_eval(linear(), q(1, 3)), 0);
  EXPECT_EQ(pwl_eval(flat(), q(1, 2)), 0);
  EXPECT_EQ(pwl_eval(flat(), q(4, 5)), q(1, 2));
  EXPECT_EQ(pwl_zero_set(linear()), (std::vector<Interval>{{q(1, 3), q(1, 3)}}));
  EXPECT_EQ(pwl_zero_set(flat()), (std::vector<Interval>{{q(2, 5), q(3, 5)}}));
  EXPECT_TRUE(pwl_has_sign_change(linear()));
  EXPECT_TRUE(pwl_has_sign_change(flat()));
  EXPECT_EQ(pwl_range(flat(), {q(1, 2), 2}), (Interval{0, 1}));
  EXPECT_EQ(*pwl_zero_distance(flat(), q(9, 10)), q(3, 10));
  EXPECT_THROW(pwl_eval(linear(), q(5, 4)), std::invalid_argument);
  EXPECT_THROW(PwlFunction::make({{0, 1}}), std::invalid_argument);
  EXPECT_THROW(PwlFunction::make({{0, 1}, {q(1, 2), 0}, {q(1, 2), 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(PwlFunction::make({{q(1, 8), 1}, {1, 0}}), std::invalid_argument);
}

TEST(Pwl, ZeroSetAgreesWithDenseEvaluation) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_pwl(rng);
    const auto zs = pwl_zero_set(f);
    for (const auto& iv : zs) {
      ASSERT_EQ(pwl_eval(f, iv.lo), 0);
      ASSERT_EQ(pwl_eval(f, iv.hi), 0);
      ASSERT_EQ(pwl_eval(f, iv.midpoint()), 0);
    }
    for (long long s = 0; s <= 400; ++s) {
      const Rational t = make_rational(s, 400);
      bool in_set = false;
      for (const auto& iv : zs) in_set = in_set || iv.contains(t);
      ASSERT_EQ(pwl_eval(f, t) == 0, in_set);
    }
  }
}

// ---- intermediate values ----

TEST(Trisect, Examples) {
  auto o = ivt_trisect(linear(), 30, {1'000'000});
  ASSERT_EQ(o.status, TrisectStatus::Zero);
  EXPECT_LE(lvc::abs(o.value.to_rational() - q(1, 3)), rational_pow2(-30));
  o = ivt_trisect(PwlFunction::make({{0, -1}, {1, 1}}), 10, {1'000'000});
  ASSERT_EQ(o.status, TrisectStatus::Zero);
  EXPECT_LE(lvc::abs(o.value.to_rational() - q(1, 2)), rational_pow2(-10));
  o = ivt_trisect(flat(), 30, {1'000'000});
  EXPECT_EQ(o.status, TrisectStatus::Stalled);
  EXPECT_TRUE(o.plateau);
  EXPECT_EQ(o.interval, (Interval{q(1, 3), q(2, 3)}));
  EXPECT_THROW(ivt_trisect(PwlFunction::make({{0, 1}, {1, 1}}), 10, {100}), std::invalid_argument);
}

TEST(Trisect, InvariantsOnRandomFunctions) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = random_pwl(rng);
    const std::size_t k = 4 + rng() % 20;
    for (std::size_t fuel : {5u, 40u, 100000u}) {
      const auto o = ivt_trisect(f, k, {fuel});
      const Rational fa = pwl_eval(f, o.interval.lo), fb = pwl_eval(f, o.interval.hi);
      ASSERT_LT(fa * fb, 0);
      Rational bound = 1;
      for (std::size_t j = 0; j < o.shrinks; ++j) bound *= q(2, 3);
      ASSERT_LE(o.interval.length(), bound);
      if (o.status == TrisectStatus::Zero) {
        ASSERT_LE(*pwl_zero_distance(f, o.value.to_rational()), rational_pow2(-static_cast<std::int64_t>(k)));
      }
      if (o.plateau) {
        const Rational third = o.interval.length() / 3;
        ASSERT_EQ(pwl_eval(f, o.interval.lo + third), 0);
        ASSERT_EQ(pwl_eval(f, o.interval.lo + 2 * third), 0);
      }
    }
  }
}

TEST(IvtProbabilistic, FlatFunctionExamples) {
  auto o = ivt_probabilistic(flat(), ivt_advice(0, q(1, 2)), 20, {10000});
  ASSERT_EQ(o.status, RunStatus::Succeeding);
  EXPECT_EQ(o.output.size(), 21u);
  EXPECT_EQ(o.output.back().to_rational(), q(1, 2));
  o = ivt_probabilistic(flat(), ivt_advice(0, q(9, 10)), 20, {10000});
  EXPECT_EQ(o.status, RunStatus::Failed);
  EXPECT_EQ(o.steps, 2u);
  o = ivt_probabilistic(flat(), ivt_advice(1, q(1, 2)), 20, {10000});
  EXPECT_EQ(o.status, RunStatus::Exhausted);
  EXPECT_EQ(o.steps, 10000u);
}

TEST(IvtProbabilistic, TrisectionBranchSucceedsWithoutPlateau) {
  const auto o = ivt_probabilistic(linear(), ivt_advice(1, 0), 12, {100000});
  ASSERT_EQ(o.status, RunStatus::Succeeding);
  for (std::size_t i = 0; i < o.output.size(); ++i)
    EXPECT_LE(lvc::abs(o.output[i].to_rational() - q(1, 3)), rational_pow2(-static_cast<std::int64_t>(i)));
}

TEST(IvtProbabilistic, SucceedingRunsLandNearTheZeroSet) {
  std::mt19937_64 rng(123);
  std::size_t successes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_pwl(rng);
    const std::size_t k = 3 + rng() % 10;
    const auto o = ivt_probabilistic(f, seeded_bits(rng()), k, {20000});
    if (o.status != RunStatus::Succeeding) continue;
    ++successes;
    ASSERT_LE(*pwl_zero_distance(f, o.output.back().to_rational()), rational_pow2(-static_cast<std::int64_t>(k)));
  }
  EXPECT_GT(successes, 50u);
}

TEST(IvtProbabilistic, OutcomeFrequenciesOnFlatFunction) {
  const auto e = lv_estimate_success(ivt_machine(), flat(), 1000, 2024, {10000}, 11);
  EXPECT_NEAR(static_cast<double>(e.succeeded) / 1000, 0.1, 0.03);
  EXPECT_NEAR(static_cast<double>(e.failed) / 1000, 0.4, 0.03);
  EXPECT_NEAR(static_cast<double>(e.exhausted) / 1000, 0.5, 0.03);
}

TEST(IvtTrees, ConstantUnitInterval) {
  const std::vector<Interval> approx(3, Interval{0, 1});
  const auto t = ivt_tree_sequence(approx, 2, 8);
  EXPECT_FALSE(t.hedge_depth.has_value());
  EXPECT_FALSE(t.tree.member("1"));
  for (std::size_t len = 0; len <= 7; ++len)
    for (const auto& w : words_of_length(len)) EXPECT_TRUE(t.tree.member("0" + w));
}

TEST(IvtTrees, ZeroBranchNamesHalfTheInterval) {
  const std::vector<Interval> approx{{0, 1}, {q(1, 4), q(3, 4)}};
  const auto t = ivt_tree_sequence(approx, 1, 8);
  const Interval half{q(1, 8), q(3, 8)};
  for (std::size_t len = 0; len <= 7; ++len)
    for (const auto& w : words_of_length(len)) {
      // Cylinder of 0w under rho_2, with every prefix required to meet the target.
      bool alive = true;
      for (std::size_t l = 0; l <= len; ++l) {
        const std::string u = "0" + w.substr(0, l);
        Rational lo = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
          if (u[i] == '1') lo += rational_pow2(-static_cast<std::int64_t>(i) - 1);
        const Rational hi = lo + rational_pow2(-static_cast<std::int64_t>(u.size()));
        alive = alive && !(hi < half.lo || half.hi < lo);
      }
      ASSERT_EQ(t.tree.member("0" + w), alive) << w;
    }
  EXPECT_EQ(t.hedge_depth, 0u);
}

TEST(IvtTrees, HedgeGrowsAndMembershipStabilizes) {
  std::vector<Interval> approx;
  for (std::int64_t n = 0; n <= 14; ++n) {
    const Rational r = rational_pow2(-n - 1);
    approx.push_back({q(1, 2) - r, q(1, 2) + r});
  }
  std::optional<std::size_t> prev;
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto t = ivt_tree_sequence(approx, n, 10);
    ASSERT_TRUE(t.hedge_depth.has_value());
    if (prev) { EXPECT_GE(*t.hedge_depth, *prev); }
    prev = t.hedge_depth;
  }
  EXPECT_EQ(*prev, 8u);
  std::vector<CoTree> stages;
  for (std::size_t n = 9; n <= 14; ++n) stages.push_back(ivt_tree_sequence(approx, n, 10).tree);
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : words_of_length(len)) {
      for (const auto& t : stages) ASSERT_EQ(t.member(w), stages.front().member(w)) << w;
      if (w[0] == '1') { EXPECT_TRUE(stages.back().member(w)); }
    }
}

TEST(IvtTrees, RejectsBadApproximations) {
  EXPECT_THROW(ivt_tree_sequence({{0, 1}, {q(1, 2), q(3, 2)}}, 1, 5), std::invalid_argument);
  EXPECT_THROW(ivt_tree_sequence({{0, q(1, 2)}, {q(1, 4), q(3, 4)}}, 1, 5), std::invalid_argument);
  EXPECT_THROW(ivt_tree_sequence({{0, 1}}, 1, 5), std::invalid_argument);
  EXPECT_THROW(ivt_tree_sequence({{0, 1}}, 0, 21), std::invalid_argument);
}
