#include "seqspace/mnc.hpp"

#include "seqspace/duality.hpp"
#include "seqspace/error.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/subset_search.hpp"
#include "seqspace/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

namespace {

std::size_t half_range(std::size_t n) { return std::max<std::size_t>(1, n / 2); }

void require_above_one(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw Error(ErrorCode::exponent_regime, "estimator needs 1 < p < inf");
    }
}

void require_at_least_one(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw Error(ErrorCode::exponent_regime, "estimator needs 1 <= p < inf");
    }
}

void finish(MncEstimate& est, double tail, const Tolerances& tol) {
    est.verdict = classify_compactness(tail, tol);
    if (est.trace.trend != Trend::converged) {
        est.notes.push_back("tail window has not converged (trend " +
                            std::string(to_string(est.trace.trend)) + ")");
    }
}

MncEstimate point_estimate(std::vector<double> seq, const Tolerances& tol) {
    MncEstimate est;
    est.trace = estimate_limsup(seq, tol, tol.tol_zero);
    est.sequence = std::move(seq);
    est.point = est.trace.value;
    est.lower = est.upper = est.trace.value;
    finish(est, est.trace.value, tol);
    return est;
}

std::vector<double> row_norms(const DenseMatrix& m, double q, std::span<const double> shift = {}) {
    std::vector<double> out(m.rows());
    std::vector<double> buf(m.cols());
    for (std::size_t n = 0; n < m.rows(); ++n) {
        const auto row = m.row(n);
        for (std::size_t k = 0; k < buf.size(); ++k) {
            buf[k] = shift.empty() ? row[k] : row[k] - shift[k];
        }
        out[n] = lp_norm(buf, q);
    }
    return out;
}

} // namespace

TildeMatrix build_tilde(const ParamSet& params, const DenseMatrix& a, const Tolerances& tol) {
    TildeMatrix out;
    out.matrix = build_E_tilde(params, a).matrix;
    out.alpha_tilde = column_limits(out.matrix, out.matrix.rows(), out.matrix.cols(), tol);

    const std::size_t n = params.size();
    if (n == 0) return out;
    const auto inv = invert_AB(params);
    for (std::size_t row = 0; row < a.rows(); ++row) {
        const double last = a(row, n - 1);
        if (last == 0.0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            const double term = std::abs(last * inv(n - 1, k));
            if (term == 0.0) continue;
            const double entry = std::abs(out.matrix(row, k));
            const double ratio = entry > 0.0 ? term / entry : INFINITY;
            out.max_tail_ratio = std::max(out.max_tail_ratio, ratio);
            if (ratio > tol.tail_ratio_warn) ++out.tail_warnings;
        }
    }
    return out;
}

std::vector<double> tilde_sequence(const ParamSet& params, std::span<const double> a) {
    const std::size_t n = params.size();
    if (a.size() < n) throw Error(ErrorCode::length_mismatch, "sequence a shorter than N");
    DenseMatrix row(1, n);
    std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), row.row(0).begin());
    const auto tilde = build_E_tilde(params, row).matrix;
    return {tilde.row(0).begin(), tilde.row(0).end()};
}

double dual_norm(const ParamSet& params, std::span<const double> a, double p) {
    if (!(p >= 1.0)) throw Error(ErrorCode::exponent_regime, "dual norm needs p >= 1");
    const auto tilde = tilde_sequence(params, a);
    if (p == 1.0) return max_abs(tilde);
    return lp_norm(tilde, conjugate_exponent(p));
}

std::string_view to_string(Compactness c) {
    switch (c) {
    case Compactness::compact: return "compact";
    case Compactness::noncompact: return "noncompact";
    case Compactness::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Compactness classify_compactness(double tail, const Tolerances& tol) {
    if (!std::isfinite(tail)) return Compactness::noncompact;
    if (tail <= tol.tol_zero) return Compactness::compact;
    if (tail >= 10.0 * tol.tol_zero) return Compactness::noncompact;
    return Compactness::inconclusive;
}

std::string_view to_string(MncTarget target) {
    switch (target) {
    case MncTarget::c0: return "c0";
    case MncTarget::linf: return "linf";
    case MncTarget::c: return "c";
    case MncTarget::l1_lp: return "l1-lp";
    case MncTarget::lp_l1: return "lp-l1";
    case MncTarget::lp_bv: return "lp-bv";
    }
    return "unknown";
}

std::optional<MncTarget> parse_mnc_target(std::string_view name) {
    for (auto t : {MncTarget::c0, MncTarget::linf, MncTarget::c, MncTarget::l1_lp,
                   MncTarget::lp_l1, MncTarget::lp_bv}) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

MncEstimate mnc_to_c0_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    require_above_one(p);
    return point_estimate(row_norms(tilde, conjugate_exponent(p)), tol);
}

MncEstimate mnc_to_linf_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    auto est = mnc_to_c0_from_tilde(tilde, p, tol);
    est.point.reset();
    est.lower = 0.0;
    return est;
}

MncEstimate mnc_to_c_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    require_above_one(p);
    const auto limits = column_limits(tilde, tilde.rows(), tilde.cols(), tol);
    MncEstimate est;
    est.sequence = row_norms(tilde, conjugate_exponent(p), limits.alpha);
    est.trace = estimate_limsup(est.sequence, tol, tol.tol_zero);
    const double u = est.trace.value;
    est.lower = 0.5 * u;
    est.upper = u;
    finish(est, u, tol);

    std::size_t unstable = 0;
    for (std::size_t k = 0; k < half_range(tilde.cols()) && k < limits.stable.size(); ++k) {
        if (!limits.stable[k]) ++unstable;
    }
    if (unstable > 0) {
        est.verdict = Compactness::inconclusive;
        est.notes.push_back("column limits unstable in " + std::to_string(unstable) +
                            " leading column(s)");
    }
    return est;
}

MncEstimate mnc_l1_to_lp_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    require_at_least_one(p);
    const std::size_t rows = tilde.rows();
    const std::size_t h = half_range(rows);
    std::vector<double> acc(tilde.cols(), 0.0);
    std::vector<double> seq(h, 0.0);
    // Accumulate column tails from the bottom; after adding row n, acc holds sum_{i>=n}.
    for (std::size_t n = rows; n-- > 1;) {
        const auto row = tilde.row(n);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += abs_pow(row[k], p);
        if (n - 1 < h) {
            double best = 0.0;
            for (double s : acc) best = std::max(best, s);
            seq[n - 1] = p == 1.0 ? best : std::pow(best, 1.0 / p);
        }
    }
    return point_estimate(std::move(seq), tol);
}

MncEstimate mnc_lp_to_l1_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    require_above_one(p);
    const double q = conjugate_exponent(p);
    const std::size_t rows = tilde.rows();
    const std::size_t h = half_range(rows);
    const SubsetFunctional phi = [q](std::span<const double> v) {
        double s = 0.0;
        for (double x : v) s += abs_pow(x, q);
        return s;
    };

    auto best = best_interval_by_start(tilde, 0, rows, phi);
    for (std::size_t i = best.size(); i-- > 1;) best[i - 1] = std::max(best[i - 1], best[i]);

    std::vector<double> seq(h, 0.0);
    for (std::size_t m = 0; m < h; ++m) {
        const std::size_t start = m + 1;
        if (start >= rows) break;
        const double window =
            exhaustive_window_sup(tilde, start, start + tol.subset_window, phi);
        seq[m] = std::pow(std::max(best[start], window), 1.0 / q);
    }

    MncEstimate est;
    est.trace = estimate_limsup(seq, tol, tol.tol_zero);
    est.sequence = std::move(seq);
    est.lower = est.trace.value;
    est.upper = 4.0 * est.trace.value;
    finish(est, est.lower, tol);
    return est;
}

DenseMatrix row_differences(const DenseMatrix& m) {
    DenseMatrix out(m.rows(), m.cols());
    for (std::size_t n = 0; n < m.rows(); ++n) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            out(n, k) = n == 0 ? m(n, k) : m(n, k) - m(n - 1, k);
        }
    }
    return out;
}

MncEstimate mnc_lp_to_bv_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol) {
    return mnc_lp_to_l1_from_tilde(row_differences(tilde), p, tol);
}

MncEstimate mnc_to_c0(const ParamSet& params, const DenseMatrix& a, double p,
                      const Tolerances& tol) {
    return mnc_to_c0_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_to_linf(const ParamSet& params, const DenseMatrix& a, double p,
                        const Tolerances& tol) {
    return mnc_to_linf_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_to_c(const ParamSet& params, const DenseMatrix& a, double p,
                     const Tolerances& tol) {
    return mnc_to_c_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_l1_to_lp(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol) {
    return mnc_l1_to_lp_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_lp_to_l1(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol) {
    return mnc_lp_to_l1_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_lp_to_bv(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol) {
    return mnc_lp_to_bv_from_tilde(build_tilde(params, a, tol).matrix, p, tol);
}

MncEstimate mnc_estimate(MncTarget target, const ParamSet& params, const DenseMatrix& a,
                         double p, const Tolerances& tol) {
    const auto tilde = build_tilde(params, a, tol);
    MncEstimate est;
    switch (target) {
    case MncTarget::c0: est = mnc_to_c0_from_tilde(tilde.matrix, p, tol); break;
    case MncTarget::linf: est = mnc_to_linf_from_tilde(tilde.matrix, p, tol); break;
    case MncTarget::c: est = mnc_to_c_from_tilde(tilde.matrix, p, tol); break;
    case MncTarget::l1_lp: est = mnc_l1_to_lp_from_tilde(tilde.matrix, p, tol); break;
    case MncTarget::lp_l1: est = mnc_lp_to_l1_from_tilde(tilde.matrix, p, tol); break;
    case MncTarget::lp_bv: est = mnc_lp_to_bv_from_tilde(tilde.matrix, p, tol); break;
    }
    if (tilde.tail_warnings > 0) {
        est.notes.push_back(std::to_string(tilde.tail_warnings) +
                            " entries of the tilde matrix are sensitive to truncation");
    }
    return est;
}

ChiEstimate chi_of_set(std::span<const std::vector<double>> points, ChiSpace space, double p,
                       const Tolerances& tol) {
    ChiEstimate out;
    if (points.empty()) return out;
    const std::size_t n = points.front().size();
    for (const auto& x : points) {
        if (x.size() != n) throw Error(ErrorCode::dimension_mismatch, "points differ in length");
    }
    if (space == ChiSpace::lp) require_at_least_one(p);

    std::vector<double> limits(points.size(), 0.0);
    if (space == ChiSpace::c) {
        const std::size_t w = std::min(tol.basis_limit_window, n);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto tail = std::span<const double>(points[i]).last(w);
            const double mean = w == 0 ? 0.0 : sum(tail) / static_cast<double>(w);
            const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
            if (w > 0 && *hi - *lo > tol.basis_limit_spread * (1.0 + std::abs(mean))) {
                out.notes.push_back("point " + std::to_string(i) + " has no stable limit");
            }
            limits[i] = mean;
        }
    }

    const std::size_t h = half_range(n);
    out.sequence.assign(h, 0.0);
    for (std::size_t m = 0; m < h; ++m) {
        double best = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& x = points[i];
            double v = 0.0;
            for (std::size_t j = m + 1; j < n; ++j) {
                const double d = x[j] - limits[i];
                if (space == ChiSpace::lp) {
                    v += abs_pow(d, p);
                } else {
                    v = std::max(v, std::abs(d));
                }
            }
            if (space == ChiSpace::lp && p != 1.0) v = std::pow(v, 1.0 / p);
            best = std::max(best, v);
        }
        out.sequence[m] = best;
    }
    out.trace = estimate_limsup(out.sequence, tol, tol.tol_zero);
    out.upper = out.trace.value;
    out.lower = space == ChiSpace::c ? 0.5 * out.upper : out.upper;
    return out;
}

} // namespace seqspace
