#include "seqspace/error.hpp"
#include "seqspace/limits.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/subset_search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace seqspace;

namespace {

std::vector<double> seq(std::size_t n, double (*f)(double)) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(static_cast<double>(i));
    return out;
}

double abs_sum(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

} // namespace

TEST(Limsup, ConstantTailConverges) {
    const auto e = estimate_limsup(std::vector<double>(32, 3.0));
    EXPECT_EQ(e.trend, Trend::converged);
    EXPECT_EQ(e.value, 3.0);
    EXPECT_EQ(e.window_begin, 24u);
    EXPECT_EQ(e.window_end, 32u);
}

TEST(Limsup, OscillationTakesUpperValue) {
    const auto e = estimate_limsup(seq(64, [](double i) { return std::fmod(i, 2.0) == 0 ? 1.0 : -1.0; }));
    EXPECT_EQ(e.value, 1.0);
    EXPECT_EQ(e.trend, Trend::converged);
}

TEST(Limsup, LinearGrowth) {
    const auto e = estimate_limsup(seq(32, [](double i) { return i; }));
    EXPECT_EQ(e.trend, Trend::growing);
    EXPECT_EQ(e.value, 31.0);
}

TEST(Limsup, GeometricDecayIsDecayingWithoutFloor) {
    const auto s = seq(32, [](double i) { return std::pow(0.5, i); });
    EXPECT_EQ(estimate_limsup(s).trend, Trend::decaying);
    EXPECT_EQ(estimate_limsup(s, {}, 1e-2).trend, Trend::converged);
}

TEST(Limsup, NonFiniteIsGrowing) {
    std::vector<double> s(16, 1.0);
    s[15] = std::numeric_limits<double>::infinity();
    EXPECT_EQ(estimate_limsup(s).trend, Trend::growing);
}

TEST(Limsup, EmptyAndShortSequences) {
    EXPECT_EQ(estimate_limsup(std::vector<double>{}).value, 0.0);
    const auto e = estimate_limsup(std::vector<double>{2.0, 1.0});
    EXPECT_EQ(e.value, 2.0);
    EXPECT_EQ(e.window_begin, 0u);
}

TEST(ColumnLimits, StableAndUnstableColumns) {
    DenseMatrix m(20, 2);
    for (std::size_t n = 0; n < 20; ++n) {
        m(n, 0) = 1.0 + std::pow(0.1, static_cast<double>(n));
        m(n, 1) = (n % 2 == 0) ? 1.0 : 0.0;
    }
    const auto c = column_limits(m, 20, 2);
    EXPECT_NEAR(c.alpha[0], 1.0, 1e-15);
    EXPECT_TRUE(c.stable[0]);
    EXPECT_FALSE(c.stable[1]);
    EXPECT_FALSE(c.all_stable());
    EXPECT_TRUE(column_limits(m, 20, 1).all_stable());
}

TEST(ClassifyTrace, Bounded) {
    EXPECT_EQ(classify_trace(std::vector<double>{0.5, 0.9, 1.0, 1.0}), Verdict::bounded);
    EXPECT_EQ(classify_trace(std::vector<double>{0, 0, 0}), Verdict::bounded);
}

TEST(ClassifyTrace, Growing) {
    EXPECT_EQ(classify_trace(std::vector<double>{1, 2, 4, 8}), Verdict::growing);
    EXPECT_EQ(classify_trace(std::vector<double>{1, std::numeric_limits<double>::quiet_NaN()}),
              Verdict::growing);
}

TEST(ClassifyTrace, Inconclusive) {
    EXPECT_EQ(classify_trace(std::vector<double>{}), Verdict::inconclusive);
    EXPECT_EQ(classify_trace(std::vector<double>{1.0}), Verdict::inconclusive);
    EXPECT_EQ(classify_trace(std::vector<double>{1, 1.01, 1.02}), Verdict::inconclusive);
    EXPECT_EQ(classify_trace(std::vector<double>{4, 2, 1}), Verdict::inconclusive);
}

TEST(SubsetSearch, ExhaustiveMatchesBruteForce) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DenseMatrix v(10, 3);
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t k = 0; k < 3; ++k) v(i, k) = d(rng);
    }
    const SubsetFunctional phi = [](std::span<const double> x) { return lp_norm(x, 2.0); };
    double brute = 0.0;
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
        std::vector<double> agg(3, 0.0);
        for (std::size_t i = 0; i < 7; ++i) {
            if (mask & (1u << i)) {
                for (std::size_t k = 0; k < 3; ++k) agg[k] += v(i + 2, k);
            }
        }
        brute = std::max(brute, phi(agg));
    }
    EXPECT_NEAR(exhaustive_window_sup(v, 2, 9, phi), brute, 1e-14);
}

TEST(SubsetSearch, IntervalsByStart) {
    DenseMatrix v(4, 1);
    for (std::size_t i = 0; i < 4; ++i) v(i, 0) = (i == 2) ? -5.0 : 1.0;
    const SubsetFunctional phi = [](std::span<const double> x) { return x[0]; };
    EXPECT_EQ(best_interval_by_start(v, 0, 4, phi), (std::vector<double>{2, 1, -4, 1}));
}

TEST(SubsetSearch, SupCombinesIntervalsAndWindow) {
    DenseMatrix v(6, 1);
    const std::vector<double> vals{1, -3, 2, -3, 4, -9};
    for (std::size_t i = 0; i < 6; ++i) v(i, 0) = vals[i];
    const SubsetFunctional phi = [](std::span<const double> x) { return abs_sum(x); };
    EXPECT_EQ(subset_sup(v, 0, 6, 1, 5, phi), 15.0);
    EXPECT_EQ(subset_sup(v, 0, 6, 0, 0, phi), 9.0);
}

TEST(SubsetSearch, WideWindowIsRejected) {
    DenseMatrix v(30, 1);
    const SubsetFunctional phi = [](std::span<const double> x) { return x[0]; };
    try {
        exhaustive_window_sup(v, 0, 30, phi);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
}
