#include "orlicz/limits.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

// Frozen from tests/oracles/goldens.py (mpmath, 40 digits).
constexpr double kHalfMassNorm[] = {0.98186617240780201335, 0.9981231666117081625, 0.9998116566894667596,
                                    0.99998115904269554259};
constexpr double kLiminfBoundHalfQ100 = 0.94794552833978472351;
constexpr double kDeltaAtHalf = 0.31326168751822283405;
constexpr double kLogRatioC2Inf = 0.75316960746949170872;

const std::vector<double> kHalfSchedule{1e2, 1e3, 1e4, 1e5};

Discretized single_atom(double mass) {
    return {DiscreteMeasure::from_weights(std::vector<double>{mass}), SampledFunction({1.0})};
}

// Test-side oracle: first t = 1/lambda on a uniform grid with
// t ln(e - 1 + t)^q >= 1/m, refined by bisection. Shares nothing with the
// library solver.
double grid_scan_char_norm(double m, double q, double lo, double hi, double step) {
    const auto excess = [&](double t) { return std::log(t) + q * std::log(std::log(std::numbers::e - 1 + t)) + std::log(m); };
    double prev = lo;
    for (double t = lo + step; t <= hi; t += step) {
        if (excess(t) >= 0) {
            double a = prev, b = t;
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (a + b);
                (excess(mid) >= 0 ? b : a) = mid;
            }
            return 1.0 / (0.5 * (a + b));
        }
        prev = t;
    }
    return NAN;
}

TEST(LimitSweep, UnitIndicatorIsFixed) {
    const auto d = single_atom(1.0);
    const auto r = limit_sweep(d.function, d.measure, 1.0, std::vector<double>{1, 10, 100, 1000});
    for (std::size_t i = 0; i < r.schedule.size(); ++i) {
        EXPECT_EQ(r.norms[i], 1.0);
        EXPECT_EQ(r.gaps[i], 0.0);
    }
    EXPECT_TRUE(r.passed);
}

TEST(LimitSweep, HalfMassIndicatorMatchesOracle) {
    const auto d = single_atom(0.5);
    const auto r = limit_sweep(d.function, d.measure, 1.0, kHalfSchedule);
    EXPECT_EQ(r.reference, 1.0);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.norms[i], kHalfMassNorm[i], 1e-12);
    for (std::size_t i = 1; i < 4; ++i) EXPECT_LT(r.gaps[i], r.gaps[i - 1]);
    EXPECT_TRUE(r.passed);
    // gap * q settles near e ln 2 ~ 1.884
    EXPECT_NEAR(r.gaps.back() * 1e5, std::numbers::e * std::log(2.0), 1e-3);

    EXPECT_NEAR(grid_scan_char_norm(0.5, 100.0, 1.0, 1.03, 1e-7), r.norms[0], 1e-9);
}

TEST(LimitSweep, MultiLevelGapsDecrease) {
    const SampledFunction f({1, 2, 4});
    const auto r = limit_sweep(f, DiscreteMeasure::counting(3), 2.0, std::vector<double>{10, 100, 1000, 10000});
    EXPECT_EQ(r.reference, 4.0);
    // Strict while the gap is above solver resolution; past q ~ 1e3 the true
    // gap is ~1e-100 and rounds to zero.
    for (std::size_t i = 1; i < r.gaps.size(); ++i) {
        if (r.gaps[i - 1] > 1e-9 * r.reference)
            EXPECT_LT(r.gaps[i], r.gaps[i - 1]);
        else
            EXPECT_LE(r.gaps[i], r.gaps[i - 1] + 1e-10 * r.reference);
    }
    EXPECT_GT(r.gaps[0], r.gaps[1]);
    EXPECT_TRUE(r.passed);
    for (const auto& row : r.bound_checks) {
        ASSERT_EQ(row.size(), 2u);
        EXPECT_EQ(row[0].name, kCharLower);
        EXPECT_EQ(row[1].name, kExplicitLower);
        EXPECT_TRUE(row[0].pass && row[1].pass);
    }
}

TEST(LimitSweep, SubUnitQMarksExplicitBoundVacuous) {
    const auto d = single_atom(0.5);
    const auto r = limit_sweep(d.function, d.measure, 1.0, std::vector<double>{0.25, 0.5, 2});
    EXPECT_TRUE(r.bound_checks[0][1].vacuous);
    EXPECT_FALSE(r.bound_checks[2][1].vacuous);
}

TEST(LimitSweep, RejectsBadInput) {
    const auto d = single_atom(1.0);
    EXPECT_THROW(limit_sweep(SampledFunction({0.0}), d.measure, 1.0, kHalfSchedule), DomainError);
    EXPECT_THROW(limit_sweep(d.function, d.measure, 1.0, std::vector<double>{1, 2}), InputError);
    EXPECT_THROW(limit_sweep(d.function, d.measure, 1.0, std::vector<double>{1, 3, 2}), InputError);
}

TEST(LimitSweep, DeterministicAcrossThreadCounts) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> value(-5, 5), weight(0.1, 3);
    std::vector<double> v(40), w(40);
    for (int i = 0; i < 40; ++i) {
        v[i] = value(rng);
        w[i] = weight(rng);
    }
    const SampledFunction f(v);
    const auto mu = DiscreteMeasure::from_weights(w);
    const auto schedule = log_grid(1.0, 1e5, 11);
    const auto serial = limit_sweep(f, mu, 1.5, schedule, {1e-10, 1});
    for (unsigned threads : {2u, 4u, 16u}) {
        const auto parallel = limit_sweep(f, mu, 1.5, schedule, {1e-10, threads});
        EXPECT_EQ(serial.norms, parallel.norms);
        EXPECT_EQ(serial.gaps, parallel.gaps);
        EXPECT_EQ(serial.passed, parallel.passed);
    }
}

TEST(LiminfBound, Examples) {
    const auto unit = liminf_bound_check(1.0, 1.0, 10.0);
    EXPECT_EQ(unit.lhs, 1.0);
    EXPECT_TRUE(unit.pass);
    EXPECT_TRUE(unit.vacuous);

    const auto half = liminf_bound_check(0.5, 1.0, 100.0);
    EXPECT_NEAR(half.rhs, kLiminfBoundHalfQ100, 1e-14);
    EXPECT_NEAR(half.lhs, kHalfMassNorm[0], 1e-12);
    EXPECT_TRUE(half.pass);
    EXPECT_FALSE(half.vacuous);

    const auto far = liminf_bound_check(0.5, 1.0, 1e5);
    EXPECT_NEAR(far.rhs, 1.0 - 5.44e-5, 1e-7);
    EXPECT_NEAR(far.lhs, 1.0 - 1.88e-5, 1e-7);
    EXPECT_TRUE(far.pass);
}

TEST(LiminfBound, NoViolations) {
    for (double m : {0.01, 0.1, 0.5, 0.9, 0.999, 2.0})
        for (double p : {1.0, 2.0, 3.0})
            for (double q : {1.0, 3.0, 10.0, 1e2, 1e3, 1e4, 1e5, 1e6})
                EXPECT_TRUE(liminf_bound_check(m, p, q).pass) << m << " " << p << " " << q;
}

TEST(LiminfBound, RequiresBernoulliRegime) {
    EXPECT_THROW(liminf_bound_check(0.5, 1.0, 0.5), DomainError);
    EXPECT_THROW(liminf_bound_check(0.0, 1.0, 2.0), DomainError);
}

TEST(DeltaRelation, Examples) {
    const auto r = delta_relation_check(0.5, 1.0, 1.0);
    EXPECT_NEAR(r.delta, kDeltaAtHalf, 1e-15);
    EXPECT_TRUE(r.pass);

    const auto near_one = delta_relation_check(0.999999, 2.0, 5.0);
    EXPECT_GT(near_one.delta, 0.0);
    EXPECT_LT(near_one.delta, 1e-6);
    EXPECT_NEAR(near_one.identity_lhs, 1.0, 1e-4);
    EXPECT_TRUE(near_one.pass);

    const auto steep = delta_relation_check(0.9, 1.0, 1000.0);
    EXPECT_TRUE(steep.bernoulli_holds);
    // independent log-domain oracle for (1 + delta)^q >= 1 + q delta
    EXPECT_GE(1000.0 * std::log1p(steep.delta), std::log1p(1000.0 * steep.delta));
}

TEST(DeltaRelation, IdentityAcrossGrid) {
    for (int k = 1; k <= 9; ++k)
        for (double p : {1.0, 2.0, 3.0})
            for (double q : {1.0, 10.0, 100.0}) {
                const auto r = delta_relation_check(0.1 * k, p, q);
                EXPECT_LE(r.identity_rel_err, 1e-9);
                EXPECT_TRUE(r.pass) << 0.1 * k << " " << p << " " << q;
            }
}

TEST(DeltaRelation, RejectsOutOfRange) {
    EXPECT_THROW(delta_relation_check(1.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(delta_relation_check(0.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(delta_relation_check(0.5, 1.0, 0.5), DomainError);
}

TEST(UpperThreshold, UnitIndicatorReachesAtOnce) {
    const auto d = single_atom(1.0);
    const auto r = upper_bound_threshold(d.function, d.measure, 1.0, 0.1, std::vector<double>{1, 2, 3, 4});
    ASSERT_TRUE(r.reached());
    EXPECT_EQ(*r.q_star, 1.0);
    EXPECT_LT(r.modulars[0], 1.0);
    EXPECT_TRUE(r.passed());
}

TEST(UpperThreshold, MultiLevelFunction) {
    const SampledFunction f({1, 2, 4});
    const auto mu = DiscreteMeasure::counting(3);
    std::vector<double> schedule(200);
    for (int i = 0; i < 200; ++i) schedule[i] = i + 1;
    const auto r = upper_bound_threshold(f, mu, 1.0, 0.1, schedule);
    EXPECT_DOUBLE_EQ(r.lambda, 4.4);
    ASSERT_TRUE(r.reached());
    EXPECT_EQ(*r.q_star, 5.0);  // goldens.py: first q with modular(4.4) <= 1
    EXPECT_TRUE(r.passed());

    // Oracle: direct modular sum at lambda = 4.4, strictly decreasing in q.
    double prev = INFINITY;
    for (double q : schedule) {
        double direct = 0.0;
        for (double v : {1.0, 2.0, 4.0}) direct += (v / 4.4) * std::pow(std::log(kE0 + v / 4.4), q);
        EXPECT_LT(direct, prev);
        prev = direct;
    }
}

TEST(UpperThreshold, NotReachedIsReportedNotThrown) {
    std::vector<double> v(8);
    for (int i = 0; i < 8; ++i) v[i] = std::pow(0.5, i);
    const auto r = upper_bound_threshold(SampledFunction(v), DiscreteMeasure::counting(8), 1.0, 0.1,
                                         std::vector<double>{1, 2});
    EXPECT_FALSE(r.reached());
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.domination_holds);
}

TEST(UpperThreshold, EnvelopeAtExactRatioDecays) {
    // max atom ratio exactly 1/(1 + eps): the per-atom factor log(e0 + 1/(1+eps))^q -> 0.
    const double eps = 0.25;
    const auto d = single_atom(1.0);
    const auto r = upper_bound_threshold(d.function, d.measure, 2.0, eps, std::vector<double>{1, 10, 100, 1000});
    EXPECT_TRUE(r.envelope_holds);
    for (std::size_t i = 1; i < r.modulars.size(); ++i) EXPECT_LT(r.modulars[i], r.modulars[i - 1]);
    EXPECT_LT(r.modulars.back(), 1e-30);
}

TEST(Truncation, BoundedFunctionIsUnchanged) {
    const SampledFunction f({1, 2, 3});
    const auto mu = DiscreteMeasure::counting(3);
    const auto r = truncation_sweep(f, mu, 1.0, std::vector<double>{5}, kHalfSchedule);
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].sweep.norms, r.full.norms);
    EXPECT_TRUE(r.passed);
}

TEST(Truncation, LevelsConvergeToTheirCaps) {
    const SampledFunction f({1, 10, 100});
    const auto mu = DiscreteMeasure::counting(3);
    const auto r = truncation_sweep(f, mu, 1.0, std::vector<double>{1, 10, 50, 100}, std::vector<double>{1e2, 1e3, 1e4});
    const double targets[] = {1, 10, 50, 100};
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        EXPECT_EQ(r.entries[i].target, targets[i]);
        EXPECT_TRUE(r.entries[i].converged);
        EXPECT_TRUE(r.entries[i].dominated);
    }
    // N = ||f||_inf: f_N = |f|, and the norm only sees |f|.
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_NEAR(r.entries[3].sweep.norms[i], r.full.norms[i], 1e-10 * r.full.norms[i]);
    EXPECT_TRUE(r.passed);
}

TEST(Classical, Examples) {
    const auto d = single_atom(1.0);
    const auto unit = classical_p_sweep(d.function, d.measure, std::vector<double>{1, 2, 8, 64});
    for (double n : unit.norms) EXPECT_EQ(n, 1.0);

    const auto two = classical_p_sweep(SampledFunction({1, 2}), DiscreteMeasure::counting(2), std::vector<double>{1000});
    EXPECT_NEAR(two.norms[0], 2.0, 1e-12);

    const auto mu = DiscreteMeasure::from_weights(std::vector<double>{0.1, 0.2, 0.7});
    const auto r = classical_p_sweep(SampledFunction({1, 2, 3}), mu, log_grid(1, 1024, 11));
    EXPECT_LT(r.gaps.back(), r.gaps.front());
    EXPECT_TRUE(r.passed);
    EXPECT_THROW(classical_p_sweep(SampledFunction({1, 2, 3}), mu, std::vector<double>{0.5, 2}), DomainError);
}

TEST(LogRatio, Examples) {
    const auto grid = log_grid(1e-8, 1e8, 128);
    const auto one = log_ratio_bound_check(1.0, grid);
    EXPECT_EQ(one.inf, 1.0);
    EXPECT_EQ(one.sup, 1.0);

    const auto two = log_ratio_bound_check(2.0, grid);
    EXPECT_GT(two.inf, 0.5);
    EXPECT_LE(two.sup, 1.0);
    EXPECT_NEAR(two.inf, kLogRatioC2Inf, 1e-12);
    EXPECT_TRUE(two.pass);

    // t -> c t symmetry: ratio_{1/2}(t) = 1 / ratio_2(t / 2)
    std::vector<double> halved(grid);
    for (double& t : halved) t *= 0.5;
    const auto half = log_ratio_bound_check(0.5, grid);
    EXPECT_NEAR(half.sup, 1.0 / log_ratio_bound_check(2.0, halved).inf, 1e-14);
    EXPECT_THROW(log_ratio_bound_check(0.0, grid), DomainError);
}

TEST(Equivalence, Examples) {
    const auto d = single_atom(1.0);
    const auto grid = default_grid();
    const auto r = equivalence_norm_check(d.function, d.measure, 1.0, 1.0, grid);
    EXPECT_EQ(r.norm_e0, 1.0);
    EXPECT_GT(r.norm_e, r.norm_e0);  // Bbar >= B pointwise
    EXPECT_TRUE(r.pass);

    const auto flat = equivalence_norm_check(d.function, d.measure, 2.0, 0.0, grid);
    EXPECT_EQ(flat.ratio, 1.0);
    EXPECT_EQ(flat.norm_e0, flat.norm_e);

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> value(-10, 10), weight(0.1, 5);
    std::vector<double> v(20), w(20);
    for (int i = 0; i < 20; ++i) {
        v[i] = value(rng);
        w[i] = weight(rng);
    }
    const auto random = equivalence_norm_check(SampledFunction(v), DiscreteMeasure::from_weights(w), 2.0, 3.0, grid);
    EXPECT_TRUE(random.within_constant);
    EXPECT_TRUE(random.domination);
}

}  // namespace
}  // namespace orlicz
