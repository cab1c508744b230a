// Acceptance driver: prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include "seqspace/basis.hpp"
#include "seqspace/duality.hpp"
#include "seqspace/io.hpp"
#include "seqspace/mnc.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/oracle.hpp"
#include "seqspace/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

using namespace seqspace;

namespace {

struct Result {
    bool passed;
    std::string detail;
};

Result measured(double worst, double bound, const std::string& what) {
    return {worst <= bound, what + ", max error " + format_double(worst) + " (bound " + format_double(bound) + ")"};
}

ParamSet unit_params(std::size_t n) {
    const std::vector<double> ones(n, 1.0);
    std::vector<double> s(n, 0.0);
    s[0] = 1.0;
    return make_paramset(ones, s, ones, 1.0, -1.0, n);
}

DenseMatrix scaled_ab(const ParamSet& params, std::span<const double> w) {
    DenseMatrix a = build_AB(params).to_dense();
    for (std::size_t n = 0; n < a.rows(); ++n) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(n, k) *= w[n];
    }
    return a;
}

std::vector<double> halving(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k));
    return w;
}

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = oracle::random_vector(rng, n);
        std::copy(row.begin(), row.end(), a.row(i).begin());
    }
    return a;
}

Result inverse_identity(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto ps = oracle::random_paramset(rng, n);
        const auto a = build_A(ps);
        const auto inv = invert_A(ps);
        const double scale = inf_norm(a) * inf_norm(inv);
        worst = std::max(worst, max_abs_diff(multiply(a, inv), Triangle::identity(n)) / scale);
    }
    return measured(worst, 1e-10, "50 random parameter sets at N = 32, scaled by row norms");
}

Result d_coefficients(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto ps = oracle::random_paramset(rng, 9);
        const auto s = ps.s();
        const auto d = d_coeffs(s, 9);
        for (std::size_t k = 0; k <= 8; ++k) {
            const double ref = oracle::d_by_determinant(s, k);
            worst = std::max(worst, std::abs(d.d[k] - ref) / std::max(std::abs(ref), 1e-300));
        }
    }
    return measured(worst, 1e-10, "20 random s, n <= 8, relative");
}

Result round_trip(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto x = oracle::random_vector(rng, n);
        const auto back = inverse(ps, forward(ps, x));
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(back[k] - x[k]) / max_abs(x));
    }
    return measured(worst, 1e-9, "50 random x, |v/u| <= 1, N = 32, relative to max |x|");
}

Result paranorm_identity(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto x = oracle::random_vector(rng, n);
        const ExponentSeq p(oracle::random_vector(rng, n, 0.5, 3.0), n);
        const double h = paranorm_lp(ps, p, x);
        const double g = maddox_sum_gauge(oracle::forward_by_matrix(ps, x), p);
        worst = std::max(worst, std::abs(h - g) / std::max(g, 1e-300));
    }
    return measured(worst, 1e-14, "50 random cases, relative");
}

Result basis_correctness(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double unit = 0.0, rec = 0.0, closed = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto y = forward(ps, basis_vector(ps, static_cast<int>(j)).values);
            for (std::size_t k = 0; k < n; ++k) unit = std::max(unit, std::abs(y[k] - (k == j ? 1.0 : 0.0)));
        }
        const auto x = oracle::random_vector(rng, n);
        const auto back = reconstruct(ps, expand(ps, x), n - 1);
        for (std::size_t k = 0; k < n; ++k) rec = std::max(rec, std::abs(back[k] - x[k]) / max_abs(x));

        const auto rp = oracle::random_vector(rng, n, 0.5, 2.0);
        const auto sp = oracle::random_vector(rng, n, 0.5, 2.0);
        const auto uv = oracle::random_vector(rng, 2, 0.5, 2.0);
        const auto special = make_preset({PresetKind::basarir_kara, 0.5, rp, sp}, n, uv[0], -uv[1]);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const auto b = basis_vector(special, static_cast<int>(j)).values;
            const auto ref = oracle::basis_closed_form(rp, sp, uv[0], -uv[1], j, n);
            for (std::size_t k = 0; k < n; ++k) {
                closed = std::max(closed, std::abs(b[k] - ref[k]) / std::max(1.0, std::abs(ref[k])));
            }
        }
    }
    const bool ok = unit <= 1e-10 && rec <= 1e-9 && closed <= 1e-12;
    return {ok, "unit images " + format_double(unit) + ", reconstruction " + format_double(rec) +
                    ", closed form " + format_double(closed)};
}

Result e_kernel_identity(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto a = oracle::random_vector(rng, n);
        const auto y = oracle::random_vector(rng, n);
        const auto x = oracle::solve_lower(oracle::ab_by_product(ps), y);
        const auto ey = seqspace::apply(build_E(ps, a).matrix, std::span<const double>(y));
        const auto scale = oracle::partial_sum_scale(ps, a, y);
        double partial = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            partial += a[k] * x[k];
            worst = std::max(worst, std::abs(partial - ey[k]) / std::max(scale[k], 1e-300));
        }
    }
    return measured(worst, 1e-10, "50 random (params, a, y), every n < 32");
}

Result tilde_identity(std::mt19937_64& rng) {
    const std::size_t n = 32;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto a = random_matrix(rng, n);
        std::vector<double> x(n, 0.0);
        const auto head = oracle::random_vector(rng, n / 2);
        std::copy(head.begin(), head.end(), x.begin());
        const auto y = oracle::forward_by_matrix(ps, x);
        const auto ax = seqspace::apply(a, std::span<const double>(x));
        const auto ty = seqspace::apply(build_tilde(ps, a).matrix, std::span<const double>(y));
        const auto scale = oracle::row_identity_scale(ps, a, y);
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(ax[i] - ty[i]) / std::max(scale[i], 1e-300));
    }
    return measured(worst, 1e-10, "50 random matrices, finitely supported x, per row");
}

Result mnc_synthetic() {
    std::string detail;
    bool ok = true;

    const std::size_t big = 64;
    const auto ps64 = unit_params(big);
    const auto diag = mnc_to_c0(ps64, scaled_ab(ps64, halving(big)), 2.0);
    ok = ok && diag.point && *diag.point <= 1e-7 && diag.verdict == Compactness::compact;
    detail += "diagonal point " + (diag.point ? format_double(*diag.point) : "none") + " " +
              std::string(to_string(diag.verdict));

    const std::size_t n = 32;
    const auto ps = unit_params(n);
    const auto ident = mnc_to_c0(ps, scaled_ab(ps, std::vector<double>(n, 1.0)), 2.0);
    ok = ok && ident.point && std::abs(*ident.point - 1.0) <= 1e-9 &&
         ident.verdict == Compactness::noncompact;
    detail += "; identity point " + (ident.point ? format_double(*ident.point) : "none") + " " +
              std::string(to_string(ident.verdict));

    double worst = 0.0;
    const auto w = halving(n);
    for (double p : {2.0, 3.0, 1.5}) {
        const double q = conjugate_exponent(p);
        const auto est = mnc_lp_to_l1(ps, scaled_ab(ps, w), p);
        for (std::size_t m = 0; m < est.sequence.size(); ++m) {
            double tail = 0.0;
            for (std::size_t i = m + 1; i < n; ++i) tail += std::pow(w[i], q);
            worst = std::max(worst, std::abs(est.sequence[m] - std::pow(tail, 1.0 / q)));
        }
    }
    ok = ok && worst <= 1e-9;
    detail += "; lp to l1 tail error " + format_double(worst);

    std::mt19937_64 rng(7);
    const auto ab = build_AB(ps).to_dense();
    const auto row = oracle::random_vector(rng, n);
    const auto weights = seqspace::apply(ab.transpose(), std::span<const double>(row));
    DenseMatrix same(n, n);
    for (std::size_t i = 0; i < n; ++i) std::copy(weights.begin(), weights.end(), same.row(i).begin());
    const auto bv = mnc_lp_to_bv(ps, same, 2.0);
    ok = ok && bv.verdict == Compactness::compact;
    detail += "; bv " + std::string(to_string(bv.verdict));
    return {ok, detail};
}

DenseMatrix lower_ones(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) m(i, k) = 1.0;
    }
    return m;
}

DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Result condition_battery() {
    bool ok = true;
    std::string detail;
    std::size_t zero_fail = 0, unstable = 0;
    bool ones_growing = true, identity_holds = true;
    const std::function<DenseMatrix(std::size_t)> makers[] = {
        [](std::size_t n) { return DenseMatrix(n, n); }, lower_ones, identity};
    for (std::size_t which = 0; which < 3; ++which) {
        for (Condition c : all_conditions()) {
            std::vector<Verdict> verdicts;
            for (std::size_t n : {16, 32, 64}) {
                const auto r = eval_condition(c, makers[which](n), ExponentSeq::constant(2.0, n), default_schedule(n));
                verdicts.push_back(r.verdict);
                if (which == 0 && !r.holds) ++zero_fail;
                if (which == 1 && c == Condition::column_subset_all && r.verdict != Verdict::growing) ones_growing = false;
                if (which == 2 && c == Condition::column_null && !r.holds) identity_holds = false;
            }
            if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) != verdicts.end()) {
                ++unstable;
                detail += " [" + std::string(condition_id(c)) + " on matrix " + std::to_string(which) + " unstable]";
            }
        }
    }
    ok = zero_fail == 0 && ones_growing && identity_holds && unstable == 0;
    return {ok, "zero failures " + std::to_string(zero_fail) + ", all-ones growing " +
                    (ones_growing ? "yes" : "no") + ", identity column limits vanish " +
                    (identity_holds ? "yes" : "no") + ", unstable verdicts " +
                    std::to_string(unstable) + detail};
}

Result young_sanity(std::mt19937_64& rng) {
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto v = oracle::random_vector(rng, 3, -10.0, 10.0);
        const double T = std::abs(v[2]) + 1e-3;
        if (!young_bound(v[0], v[1], T, 2.0).holds()) ++violations;
    }
    return {violations == 0, std::to_string(violations) + " violations in 1000 triples, p = 2"};
}

} // namespace

int main() {
    std::mt19937_64 rng(20240611);
    const std::pair<const char*, std::function<Result()>> criteria[] = {
        {"inverse identity", [&] { return inverse_identity(rng); }},
        {"D-coefficient oracle", [&] { return d_coefficients(rng); }},
        {"transform round trip", [&] { return round_trip(rng); }},
        {"paranorm identity", [&] { return paranorm_identity(rng); }},
        {"basis correctness", [&] { return basis_correctness(rng); }},
        {"E-kernel identity", [&] { return e_kernel_identity(rng); }},
        {"A-tilde identity", [&] { return tilde_identity(rng); }},
        {"MNC synthetic operators", mnc_synthetic},
        {"condition battery sanity", condition_battery},
        {"Young inequality sanity", [&] { return young_sanity(rng); }},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, body] : criteria) {
        Result r{false, ""};
        try {
            r = body();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << index++ << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << name << ": "
                  << r.detail << '\n';
        failed += r.passed ? 0 : 1;
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
