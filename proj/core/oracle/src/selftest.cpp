#include "seqspace/selftest.hpp"

#include "seqspace/basis.hpp"
#include "seqspace/duality.hpp"
#include "seqspace/error.hpp"
#include "seqspace/io.hpp"
#include "seqspace/mnc.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/oracle.hpp"
#include "seqspace/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace seqspace {

bool SelftestReport::all_passed() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

namespace {

struct ItemResult {
    bool passed;
    std::string detail;
};

ItemResult check(bool ok, const std::string& what, double err = 0.0) {
    std::string detail = what;
    if (err != 0.0) detail += " (max error " + format_double(err) + ")";
    return {ok, detail};
}

ParamSet unit_params(std::size_t n) {
    const std::vector<double> ones(n, 1.0);
    std::vector<double> s(n, 0.0);
    s[0] = 1.0;
    return make_paramset(ones, s, ones, 1.0, -1.0, n);
}

double matrix_abs_max(const DenseMatrix& m) { return max_abs(m.data()); }

/// A = diag(w) (A(r,s,t) B) so that Ã = diag(w).
DenseMatrix scaled_ab(const ParamSet& params, std::span<const double> w) {
    DenseMatrix a = build_AB(params).to_dense();
    for (std::size_t n = 0; n < a.rows(); ++n) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(n, k) *= w[n];
    }
    return a;
}

class Suite {
public:
    Suite(std::size_t n, const SelftestHooks& hooks, std::uint64_t seed)
        : n_(n), hooks_(hooks), rng_(seed) {}

    template <class F>
    void run(const std::string& name, F&& body) {
        SelftestItem item;
        item.name = name;
        try {
            const ItemResult o = body();
            item.passed = o.passed;
            item.detail = o.detail;
        } catch (const std::exception& e) {
            item.passed = false;
            item.detail = std::string("exception: ") + e.what();
        }
        report_.items.push_back(std::move(item));
    }

    SelftestReport finish() {
        report_.n = n_;
        return std::move(report_);
    }

    DCoeffs d(std::span<const double> s, std::size_t n) const {
        return hooks_.d_coeffs ? hooks_.d_coeffs(s, n) : d_coeffs(s, n);
    }

    std::size_t n_;
    const SelftestHooks& hooks_;
    std::mt19937_64 rng_;
    SelftestReport report_;
};

} // namespace

SelftestReport run_selftest(std::size_t n, const SelftestHooks& hooks, std::uint64_t seed) {
    if (n < 4) throw Error(ErrorCode::invalid_argument, "selftest needs N >= 4");
    Suite suite(n, hooks, seed);
    auto& rng = suite.rng_;

    suite.run("d_coeffs matches the determinant formula", [&] {
        double worst = 0.0;
        const std::size_t len = std::min<std::size_t>(9, n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto ps = oracle::random_paramset(rng, len);
            const auto d = suite.d(ps.s(), len);
            for (std::size_t k = 0; k < len; ++k) {
                const double ref = oracle::d_by_determinant(ps.s(), k);
                worst = std::max(worst, std::abs(d.d[k] - ref) / std::abs(ref));
            }
        }
        return check(worst <= 1e-10, "20 random s, n <= 8", worst);
    });

    suite.run("d_coeffs of s = e", [&] {
        const std::vector<double> ones(n, 1.0);
        const auto d = suite.d(ones, n);
        bool ok = d.d[0] == 1.0 && d.d[1] == 1.0;
        for (std::size_t k = 2; k < n; ++k) ok = ok && d.d[k] == 0.0;
        return check(ok, "D_0 = D_1 = 1, D_n = 0 beyond");
    });

    suite.run("euler preset values", [&] {
        const auto ps = make_preset({PresetKind::euler, 0.5, {}, {}}, 4);
        const std::vector<double> r{1, 1, 0.5, 1.0 / 6}, t{1, 0.5, 0.125, 1.0 / 48};
        double worst = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max({worst, std::abs(ps.r()[k] - r[k]), std::abs(ps.t()[k] - t[k]),
                              std::abs(ps.s()[k] - t[k])});
        }
        return check(worst <= 1e-15, "euler(0.5), N = 4", worst);
    });

    suite.run("A(r,s,t;B) equals the product of its factors", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::random_paramset(rng, n);
            const auto ab = build_AB(ps).to_dense();
            const auto ref = oracle::ab_by_product(ps);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    worst = std::max(worst, std::abs(ab(i, k) - ref(i, k)) /
                                                std::max(1.0, std::abs(ref(i, k))));
                }
            }
        }
        return check(worst <= 1e-14, "10 random parameter sets", worst);
    });

    suite.run("A(r,s,t) times its explicit inverse is the identity", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::random_paramset(rng, n);
            const auto a = build_A(ps);
            const auto inv = invert_A(ps);
            const auto prod = multiply(a, inv);
            const double scale = inf_norm(a) * inf_norm(inv);
            worst = std::max(worst, max_abs_diff(prod, Triangle::identity(n)) / scale);
        }
        return check(worst <= 1e-10, "10 random parameter sets, scaled by row norms", worst);
    });

    suite.run("explicit inverse of A(r,s,t;B) matches forward substitution", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            const auto inv = invert_AB(ps).to_dense();
            const auto ref = oracle::invert_lower(oracle::ab_by_product(ps));
            worst = std::max(worst, max_abs_diff(inv, ref) / matrix_abs_max(ref));
        }
        return check(worst <= 1e-10, "10 well-conditioned parameter sets", worst);
    });

    suite.run("forward transform matches the matrix product", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::random_paramset(rng, n);
            const auto x = oracle::random_vector(rng, n);
            const auto y = forward(ps, x);
            const auto ref = oracle::forward_by_matrix(ps, x);
            const double scale = inf_norm(oracle::ab_by_product(ps)) * max_abs(x);
            for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(y[k] - ref[k]) / scale);
        }
        return check(worst <= 1e-14, "10 random cases", worst);
    });

    suite.run("inverse transform matches the double sum", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            const auto y = oracle::random_vector(rng, n);
            const auto x = inverse(ps, y);
            const auto ref = oracle::inverse_direct(ps, y);
            const double scale = max_abs(ref) + max_abs(y);
            for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(x[k] - ref[k]) / scale);
        }
        return check(worst <= 1e-10, "10 random cases", worst);
    });

    suite.run("transform round trip", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            const auto x = oracle::random_vector(rng, n);
            const auto back = inverse(ps, forward(ps, x));
            for (std::size_t k = 0; k < n; ++k) {
                worst = std::max(worst, std::abs(back[k] - x[k]) / max_abs(x));
            }
        }
        return check(worst <= 1e-9, "10 random cases with |v/u| <= 1", worst);
    });

    suite.run("paranorm through the transform equals the gauge of y", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            const auto x = oracle::random_vector(rng, n);
            const auto p = ExponentSeq(oracle::random_vector(rng, n, 0.5, 3.0), n);
            const double h = paranorm_lp(ps, p, x);
            const double g = maddox_sum_gauge(seqspace::apply(build_AB(ps), x), p);
            worst = std::max(worst, std::abs(h - g) / std::max(g, 1e-300));
        }
        return check(worst <= 1e-14, "10 random cases", worst);
    });

    suite.run("paranorm triangle inequality", [&] {
        int violations = 0;
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto p = ExponentSeq(oracle::random_vector(rng, n, 0.3, 3.0), n);
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = oracle::random_vector(rng, n);
            const auto z = oracle::random_vector(rng, n);
            std::vector<double> xz(n);
            for (std::size_t k = 0; k < n; ++k) xz[k] = x[k] + z[k];
            const double lhs = paranorm_lp(ps, p, xz);
            const double rhs = paranorm_lp(ps, p, x) + paranorm_lp(ps, p, z);
            if (lhs > rhs * (1.0 + 1e-12)) ++violations;
        }
        return check(violations == 0, std::to_string(violations) + " violations in 100 pairs");
    });

    suite.run("sup paranorm matches the direct sup", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto p = ExponentSeq(oracle::random_vector(rng, n, 0.5, 3.0), n);
        const auto x = oracle::random_vector(rng, n);
        const auto y = oracle::forward_by_matrix(ps, x);
        double ref = 0.0;
        for (std::size_t k = 0; k < n; ++k) ref = std::max(ref, std::pow(std::abs(y[k]), p[k] / p.M()));
        const double got = paranorm_sup(ps, p, x).value;
        const double err = std::abs(got - ref) / std::max(ref, 1e-300);
        return check(err <= 1e-12, "random exponents", err);
    });

    suite.run("norm is homogeneous", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = oracle::random_vector(rng, n);
            const double a = oracle::random_vector(rng, 1, -5.0, 5.0)[0];
            std::vector<double> ax(n);
            for (std::size_t k = 0; k < n; ++k) ax[k] = a * x[k];
            const double lhs = norm_lp(ps, 2.0, ax);
            const double rhs = std::abs(a) * norm_lp(ps, 2.0, x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
        }
        return check(worst <= 1e-13, "p = 2", worst);
    });

    suite.run("basis vectors map to unit vectors", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            for (std::size_t j = 0; j < n; ++j) {
                const auto y = forward(ps, basis_vector(ps, static_cast<int>(j)).values);
                for (std::size_t k = 0; k < n; ++k) {
                    worst = std::max(worst, std::abs(y[k] - (k == j ? 1.0 : 0.0)));
                }
            }
        }
        return check(worst <= 1e-10, "3 parameter sets, every j", worst);
    });

    suite.run("b^(-1) equals its double sum", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto b = basis_vector(ps, -1).values;
        const auto ref = oracle::basis_minus_one_direct(ps);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(b[k] - ref[k]));
        worst /= std::max(1.0, max_abs(ref));
        return check(worst <= 1e-12, "well-conditioned parameters", worst);
    });

    suite.run("basis closed form for s = e", [&] {
        const auto rp = oracle::random_vector(rng, n, 0.5, 2.0);
        const auto sp = oracle::random_vector(rng, n, 0.5, 2.0);
        const double u = 1.5, v = -0.75;
        const auto ps = make_preset({PresetKind::basarir_kara, 0.5, rp, sp}, n, u, v);
        double worst = 0.0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const auto b = basis_vector(ps, static_cast<int>(j)).values;
            const auto ref = oracle::basis_closed_form(rp, sp, u, v, j, n);
            for (std::size_t k = 0; k < n; ++k) {
                worst = std::max(worst, std::abs(b[k] - ref[k]) / std::max(1.0, std::abs(ref[k])));
            }
        }
        return check(worst <= 1e-12, "every j < N - 1", worst);
    });

    suite.run("full basis reconstruction", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto x = oracle::random_vector(rng, n);
        const auto exp = expand(ps, x);
        const auto rec = reconstruct(ps, exp, n - 1);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(rec[k] - x[k]));
        return check(worst <= 1e-9 * max_abs(x), "m = N - 1", worst);
    });

    suite.run("limit estimate in c-mode", [&] {
        const std::size_t len = std::max<std::size_t>(n, 64);
        const auto ps = make_preset({PresetKind::cesaro_alpha, 0.5, {}, {}}, len);
        std::vector<double> y(len);
        for (std::size_t k = 0; k < len; ++k) y[k] = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
        const auto x = inverse(ps, y);
        const auto exp = expand(ps, x, ExpansionMode::c);
        const double err = std::abs(*exp.limit - 1.0);
        return check(err <= 1e-6, "forward(x)_n = 1 - 2^-n", err);
    });

    suite.run("E kernel reproduces partial sums", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            const auto a = oracle::random_vector(rng, n);
            const auto y = oracle::random_vector(rng, n);
            const auto x = oracle::solve_lower(oracle::ab_by_product(ps), y);
            const auto e = build_E(ps, a).matrix;
            const auto ey = seqspace::apply(e, y);
            const auto scale = oracle::partial_sum_scale(ps, a, y);
            double partial = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                partial += a[k] * x[k];
                worst = std::max(worst, std::abs(partial - ey[k]) / std::max(scale[k], 1e-300));
            }
        }
        return check(worst <= 1e-10, "10 random cases", worst);
    });

    suite.run("E kernel matches its three-part display", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto a = oracle::random_vector(rng, n);
        const auto e = build_E(ps, a).matrix;
        const auto ref = oracle::e_kernel_direct(ps, a);
        const double err = max_abs_diff(e, ref) / std::max(1.0, matrix_abs_max(ref));
        return check(err <= 1e-10, "random a", err);
    });

    suite.run("E-tilde reproduces full row sums", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const auto ps = oracle::well_conditioned_paramset(rng, n);
            DenseMatrix a(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto row = oracle::random_vector(rng, n);
                std::copy(row.begin(), row.end(), a.row(i).begin());
            }
            std::vector<double> x(n, 0.0);
            const auto head = oracle::random_vector(rng, n / 2);
            std::copy(head.begin(), head.end(), x.begin());
            const auto y = oracle::forward_by_matrix(ps, x);
            const auto ax = seqspace::apply(a, x);
            const auto ey = seqspace::apply(build_E_tilde(ps, a).matrix, y);
            const auto scale = oracle::row_identity_scale(ps, a, y);
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, std::abs(ax[i] - ey[i]) / std::max(scale[i], 1e-300));
            }
        }
        return check(worst <= 1e-10, "5 random matrices, finitely supported x", worst);
    });

    suite.run("all-ones triangle grows under the column-subset condition", [&] {
        DenseMatrix ones(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k <= i; ++k) ones(i, k) = 1.0;
        }
        const auto p = ExponentSeq::constant(2.0, n);
        const auto r = eval_condition(Condition::column_subset_all, ones, p, default_schedule(n));
        return check(r.verdict == Verdict::growing, std::string("verdict ") +
                                                        std::string(to_string(r.verdict)));
    });

    suite.run("e_0 is in the beta-dual of l_2", [&] {
        const auto ps = unit_params(n);
        std::vector<double> a(n, 0.0);
        a[0] = 1.0;
        const auto r = dual_membership(ps, a, DualKind::beta, ExponentSeq::constant(2.0, n));
        return check(r.outcome == Outcome::pass,
                     std::string("outcome ") + std::string(to_string(r.outcome)));
    });

    suite.run("factorial sequence fails the gamma-dual of euler l_2", [&] {
        const auto ps = make_preset({PresetKind::euler, 0.5, {}, {}}, n);
        std::vector<double> a(n);
        double f = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0) f *= static_cast<double>(k);
            a[k] = f;
        }
        const auto r = dual_membership(ps, a, DualKind::gamma, ExponentSeq::constant(2.0, n));
        const auto& c = r.checks.front();
        return check(c.verdict == Verdict::growing,
                     "condition " + c.condition_id + " verdict " +
                         std::string(to_string(c.verdict)));
    });

    suite.run("A-tilde row matches the direct single-row formula", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        const auto a = oracle::random_vector(rng, n);
        const auto got = tilde_sequence(ps, a);
        const auto ref = oracle::tilde_direct(ps, a);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(got[k] - ref[k]));
        worst /= std::max(1.0, max_abs(ref));
        return check(worst <= 1e-10, "random a", worst);
    });

    suite.run("A-tilde matches A times the generic inverse", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        DenseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = oracle::random_vector(rng, n);
            std::copy(row.begin(), row.end(), a.row(i).begin());
        }
        const auto got = build_tilde(ps, a).matrix;
        const auto ref = oracle::tilde_by_product(ps, a);
        const double err = max_abs_diff(got, ref) / std::max(1.0, matrix_abs_max(ref));
        return check(err <= 1e-10, "random matrix", err);
    });

    suite.run("diagonal A-tilde is compact into c0", [&] {
        const auto ps = unit_params(n);
        std::vector<double> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k));
        const auto est = mnc_to_c0(ps, scaled_ab(ps, w), 2.0);
        const std::size_t window = std::min(n, std::max<std::size_t>(8, n / 8));
        const double bound = std::ldexp(1.0, -static_cast<int>(n - window));
        return check(*est.point <= bound * (1.0 + 1e-9) &&
                         (n < 32 || est.verdict == Compactness::compact),
                     "point " + format_double(*est.point));
    });

    suite.run("identity A-tilde is not compact into c0", [&] {
        const auto ps = unit_params(n);
        const std::vector<double> w(n, 1.0);
        const auto est = mnc_to_c0(ps, scaled_ab(ps, w), 2.0);
        return check(std::abs(*est.point - 1.0) <= 1e-9 && est.verdict == Compactness::noncompact,
                     "point " + format_double(*est.point));
    });

    suite.run("l_p to l_1 trace matches the geometric tail", [&] {
        const auto ps = unit_params(n);
        std::vector<double> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k));
        const double p = 2.0, q = 2.0;
        const auto est = mnc_lp_to_l1(ps, scaled_ab(ps, w), p);
        double worst = 0.0;
        for (std::size_t m = 0; m < est.sequence.size(); ++m) {
            double tail = 0.0;
            for (std::size_t i = m + 1; i < n; ++i) tail += std::pow(w[i], q);
            worst = std::max(worst, std::abs(est.sequence[m] - std::pow(tail, 1.0 / q)));
        }
        return check(worst <= 1e-9, "p = 2", worst);
    });

    suite.run("l_1 to l_p trace of a diagonal", [&] {
        const auto ps = unit_params(n);
        std::vector<double> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k));
        const auto est = mnc_l1_to_lp(ps, scaled_ab(ps, w), 2.0);
        double worst = 0.0;
        for (std::size_t m = 0; m < est.sequence.size(); ++m) {
            worst = std::max(worst, std::abs(est.sequence[m] - w[m + 1]));
        }
        return check(worst <= 1e-12, "trace 2^-(m+1)", worst);
    });

    suite.run("identical rows are compact into bv", [&] {
        const auto ps = unit_params(n);
        const auto ab = build_AB(ps).to_dense();
        const auto row = oracle::random_vector(rng, n);
        const auto weights = seqspace::apply(ab.transpose(), row);
        DenseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) std::copy(weights.begin(), weights.end(), a.row(i).begin());
        const auto est = mnc_lp_to_bv(ps, a, 2.0);
        return check(est.verdict == Compactness::compact, "upper " + format_double(est.upper));
    });

    suite.run("estimates agree on an explicitly built A-tilde", [&] {
        const auto ps = oracle::well_conditioned_paramset(rng, n);
        DenseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = oracle::random_vector(rng, n);
            std::copy(row.begin(), row.end(), a.row(i).begin());
        }
        const auto ref = oracle::tilde_by_product(ps, a);
        double worst = 0.0;
        auto compare = [&](const MncEstimate& x, const MncEstimate& y) {
            for (std::size_t i = 0; i < x.sequence.size(); ++i) {
                worst = std::max(worst, std::abs(x.sequence[i] - y.sequence[i]) /
                                            std::max(1.0, std::abs(y.sequence[i])));
            }
        };
        compare(mnc_to_c0(ps, a, 2.0), mnc_to_c0_from_tilde(ref, 2.0));
        compare(mnc_l1_to_lp(ps, a, 2.0), mnc_l1_to_lp_from_tilde(ref, 2.0));
        compare(mnc_lp_to_l1(ps, a, 2.0), mnc_lp_to_l1_from_tilde(ref, 2.0));
        return check(worst <= 1e-10, "c0, l1-lp and lp-l1 traces", worst);
    });

    suite.run("measure of a scaled unit-vector set", [&] {
        std::vector<std::vector<double>> pts;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> x(n, 0.0);
            x[j] = std::ldexp(1.0, -static_cast<int>(j));
            pts.push_back(std::move(x));
        }
        const auto chi = chi_of_set(pts, ChiSpace::lp, 2.0);
        double worst = 0.0;
        for (std::size_t m = 0; m < chi.sequence.size(); ++m) {
            worst = std::max(worst, std::abs(chi.sequence[m] - std::ldexp(1.0, -static_cast<int>(m + 1))));
        }
        return check(worst <= 1e-15, "tail sup 2^-(m+1)", worst);
    });

    suite.run("Young inequality", [&] {
        int violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto v = oracle::random_vector(rng, 3, -10.0, 10.0);
            const double T = std::abs(v[2]) + 1e-3;
            if (!young_bound(v[0], v[1], T, 2.0).holds()) ++violations;
        }
        return check(violations == 0, std::to_string(violations) + " violations in 1000 triples");
    });

    return suite.finish();
}

} // namespace seqspace
