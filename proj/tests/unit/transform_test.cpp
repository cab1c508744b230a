#include "seqspace/basis.hpp"
#include "seqspace/error.hpp"
#include "seqspace/oracle.hpp"
#include "seqspace/transform.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace seqspace;
using seqspace::testing::unit_params;

namespace {

double scaled_error(std::span<const double> got, std::span<const double> want, double scale) {
    double worst = 0.0;
    for (std::size_t k = 0; k < want.size(); ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
    return worst / scale;
}

} // namespace

TEST(Forward, ZeroMapsToZero) {
    const auto ps = make_preset({PresetKind::euler, 0.5, {}, {}}, 8);
    EXPECT_EQ(forward(ps, std::vector<double>(8, 0.0)), std::vector<double>(8, 0.0));
}

TEST(Forward, DifferenceOfConstantSequence) {
    EXPECT_EQ(forward(unit_params(3), std::vector<double>{1, 1, 1}), (std::vector<double>{1, 0, 0}));
}

TEST(Forward, MatchesMatrixApply) {
    std::mt19937_64 rng(31);
    const auto ps = make_preset({PresetKind::euler, 0.5, {}, {}}, 16);
    const auto x = oracle::random_vector(rng, 16);
    const auto ref = oracle::forward_by_matrix(ps, x);
    const double scale = inf_norm(oracle::ab_by_product(ps)) * max_abs(x);
    EXPECT_LE(scaled_error(forward(ps, x), ref, scale), 1e-14);
    EXPECT_LE(scaled_error(forward(ps, x, Summation::compensated), ref, scale), 1e-14);
}

TEST(Forward, IsLinear) {
    std::mt19937_64 rng(37);
    const auto ps = oracle::random_paramset(rng, 20);
    const auto x = oracle::random_vector(rng, 20), z = oracle::random_vector(rng, 20);
    const double a = 1.75, b = -0.4;
    std::vector<double> combo(20);
    for (std::size_t k = 0; k < 20; ++k) combo[k] = a * x[k] + b * z[k];
    const auto lhs = forward(ps, combo);
    const auto fx = forward(ps, x), fz = forward(ps, z);
    std::vector<double> rhs(20);
    for (std::size_t k = 0; k < 20; ++k) rhs[k] = a * fx[k] + b * fz[k];
    EXPECT_LE(scaled_error(lhs, rhs, std::max(1.0, max_abs(rhs))), 1e-13);
}

TEST(Forward, ShortInputIsLengthMismatch) {
    try {
        forward(unit_params(4), std::vector<double>{1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::length_mismatch);
    }
}

TEST(Inverse, ZeroMapsToZero) {
    const auto ps = make_preset({PresetKind::cesaro_alpha, 0.5, {}, {}}, 8);
    EXPECT_EQ(inverse(ps, std::vector<double>(8, 0.0)), std::vector<double>(8, 0.0));
}

TEST(Inverse, FirstUnitVectorGivesFirstBasisVector) {
    std::mt19937_64 rng(41);
    const auto ps = oracle::well_conditioned_paramset(rng, 12);
    std::vector<double> e0(12, 0.0);
    e0[0] = 1.0;
    const auto x = inverse(ps, e0);
    const auto b0 = basis_vector(ps, 0).values;
    EXPECT_LE(scaled_error(x, b0, std::max(1.0, max_abs(b0))), 1e-14);
}

TEST(Inverse, MatchesExplicitInverseMatrix) {
    std::mt19937_64 rng(43);
    const auto ps = oracle::well_conditioned_paramset(rng, 16);
    const auto y = oracle::random_vector(rng, 16);
    const auto ref = seqspace::apply(invert_AB(ps), y);
    EXPECT_LE(scaled_error(inverse(ps, y), ref, std::max(1.0, max_abs(ref))), 1e-12);
    const auto direct = oracle::inverse_direct(ps, y);
    EXPECT_LE(scaled_error(inverse(ps, y), direct, std::max(1.0, max_abs(direct))), 1e-12);
}

TEST(Inverse, RoundTripOnPresets) {
    std::mt19937_64 rng(47);
    for (const Preset& preset : {Preset{PresetKind::cesaro_alpha, 0.5, {}, {}},
                                 Preset{PresetKind::riesz, 0.5, {}, {}},
                                 Preset{PresetKind::identity_like, 0.5, {}, {}}}) {
        const auto ps = make_preset(preset, 32, 2.0, -1.0);
        const auto x = oracle::random_vector(rng, 32);
        EXPECT_LE(scaled_error(inverse(ps, forward(ps, x)), x, max_abs(x)), 1e-9)
            << to_string(preset.kind);
    }
}

TEST(Gauges, ZeroAndConstantExponent) {
    const auto p = ExponentSeq::constant(2.0, 3);
    EXPECT_EQ(maddox_sum_gauge(std::vector<double>(3, 0.0), p), 0.0);
    EXPECT_DOUBLE_EQ(maddox_sum_gauge(std::vector<double>{3, 4, 0}, p), 5.0);
    EXPECT_DOUBLE_EQ(maddox_sup_gauge(std::vector<double>{3, -4, 0}, p), 4.0);
}

TEST(Paranorm, ZeroVector) {
    const auto ps = unit_params(5);
    const auto p = ExponentSeq::constant(1.5, 5);
    EXPECT_EQ(paranorm_lp(ps, p, std::vector<double>(5, 0.0)), 0.0);
    EXPECT_EQ(paranorm_sup(ps, p, std::vector<double>(5, 0.0)).value, 0.0);
    EXPECT_EQ(norm_lp(ps, 2.0, std::vector<double>(5, 0.0)), 0.0);
}

TEST(Paranorm, ConstantExponentIsLpNormOfTransform) {
    std::mt19937_64 rng(53);
    const auto ps = oracle::random_paramset(rng, 10);
    const auto x = oracle::random_vector(rng, 10);
    const auto y = oracle::forward_by_matrix(ps, x);
    EXPECT_NEAR(paranorm_lp(ps, ExponentSeq::constant(3.0, 10), x), lp_norm(y, 3.0),
                1e-13 * lp_norm(y, 3.0));
    EXPECT_NEAR(paranorm_sup(ps, ExponentSeq::constant(3.0, 10), x).value, max_abs(y),
                1e-13 * max_abs(y));
}

TEST(Paranorm, TwoEvaluationPathsAgree) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, 24);
        const auto x = oracle::random_vector(rng, 24);
        const ExponentSeq p(oracle::random_vector(rng, 24, 0.5, 3.0), 24);
        const double g = maddox_sum_gauge(seqspace::apply(build_AB(ps), x), p);
        EXPECT_LE(std::abs(paranorm_lp(ps, p, x) - g), 1e-14 * g);
    }
}

TEST(Paranorm, TriangleInequality) {
    std::mt19937_64 rng(61);
    const auto ps = oracle::random_paramset(rng, 16);
    const ExponentSeq p(oracle::random_vector(rng, 16, 0.2, 4.0), 16);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = oracle::random_vector(rng, 16), z = oracle::random_vector(rng, 16);
        std::vector<double> xz(16);
        for (std::size_t k = 0; k < 16; ++k) xz[k] = x[k] + z[k];
        EXPECT_LE(paranorm_lp(ps, p, xz), (paranorm_lp(ps, p, x) + paranorm_lp(ps, p, z)) * (1 + 1e-12));
    }
}

TEST(Paranorm, ScalarBound) {
    std::mt19937_64 rng(67);
    const auto ps = oracle::random_paramset(rng, 16);
    const ExponentSeq p(oracle::random_vector(rng, 16, 0.2, 4.0), 16);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = oracle::random_vector(rng, 16);
        const double alpha = oracle::random_vector(rng, 1, -3.0, 3.0)[0];
        std::vector<double> ax(16);
        for (std::size_t k = 0; k < 16; ++k) ax[k] = alpha * x[k];
        EXPECT_LE(paranorm_lp(ps, p, ax),
                  std::max(1.0, std::abs(alpha)) * paranorm_lp(ps, p, x) * (1 + 1e-12));
    }
}

TEST(Paranorm, SupMatchesDirectSup) {
    std::mt19937_64 rng(71);
    const auto ps = oracle::random_paramset(rng, 12);
    const ExponentSeq p(oracle::random_vector(rng, 12, 0.5, 3.0), 12);
    const auto x = oracle::random_vector(rng, 12);
    const auto y = oracle::forward_by_matrix(ps, x);
    double ref = 0.0;
    for (std::size_t k = 0; k < 12; ++k) ref = std::max(ref, std::pow(std::abs(y[k]), p[k] / p.M()));
    EXPECT_NEAR(paranorm_sup(ps, p, x).value, ref, 1e-12 * ref);
}

TEST(Paranorm, TinyExponentRaisesCompletenessWarning) {
    const auto ps = unit_params(4);
    const std::vector<double> p{1e-7, 1, 1, 1};
    const auto r = paranorm_sup(ps, ExponentSeq(p, 4), std::vector<double>{1, 2, 3, 4});
    EXPECT_TRUE(r.completeness_warning);
    EXPECT_FALSE(paranorm_sup(ps, ExponentSeq::constant(1.0, 4), std::vector<double>{1, 2, 3, 4})
                     .completeness_warning);
}

TEST(Norm, OneNormOfDifferences) {
    const std::vector<double> x{1, 3, 2, 6};
    EXPECT_DOUBLE_EQ(norm_lp(unit_params(4), 1.0, x), 1 + 2 + 1 + 4);
}

TEST(Norm, Homogeneous) {
    std::mt19937_64 rng(73);
    const auto ps = oracle::random_paramset(rng, 12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = oracle::random_vector(rng, 12);
        const double a = oracle::random_vector(rng, 1, -4.0, 4.0)[0];
        std::vector<double> ax(12);
        for (std::size_t k = 0; k < 12; ++k) ax[k] = a * x[k];
        const double ref = std::abs(a) * norm_lp(ps, 2.0, x);
        EXPECT_NEAR(norm_lp(ps, 2.0, ax), ref, 1e-13 * ref);
    }
}

TEST(Norm, RejectsExponentBelowOne) {
    EXPECT_THROW(norm_lp(unit_params(4), 0.5, std::vector<double>(4, 1.0)), Error);
}
