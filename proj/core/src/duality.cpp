#include "seqspace/duality.hpp"

#include "seqspace/error.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/subset_search.hpp"
#include "seqspace/triangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace seqspace {

namespace {

constexpr std::array<Condition, 21> kConditions = {
    Condition::row_subset_pow,      Condition::row_subset_conj,    Condition::column_null,
    Condition::entry_scaled_all,    Condition::row_conj_all,       Condition::entry_pow,
    Condition::column_limit,        Condition::entry_dev_all,      Condition::row_dev_conj_all,
    Condition::entry_scaled_some,   Condition::column_subset_some, Condition::row_sum_series,
    Condition::column_subset_all,   Condition::row_weighted_some,  Condition::row_sum_sup,
    Condition::row_weighted_all,    Condition::row_dev_weighted_some, Condition::row_sum_limit,
    Condition::row_weighted_all_c,  Condition::row_dev_weighted_null, Condition::row_conj_some,
};

constexpr std::array<std::string_view, 21> kIds = {
    "4.4",  "4.5",  "4.6",  "4.7",  "4.8",  "4.9",  "4.10", "4.11", "4.12", "4.13", "4.14",
    "4.15", "4.16", "4.17", "4.18", "4.19", "4.20", "4.21", "4.22", "4.23", "4.24",
};

enum class Quantifier { none, some_L, all_L };

Quantifier quantifier(Condition c) {
    switch (c) {
    case Condition::row_subset_conj:
    case Condition::entry_scaled_some:
    case Condition::column_subset_some:
    case Condition::row_weighted_some:
    case Condition::row_dev_weighted_some:
    case Condition::row_conj_some:
        return Quantifier::some_L;
    case Condition::entry_scaled_all:
    case Condition::row_conj_all:
    case Condition::entry_dev_all:
    case Condition::row_dev_conj_all:
    case Condition::column_subset_all:
    case Condition::row_weighted_all:
    case Condition::row_weighted_all_c:
    case Condition::row_dev_weighted_null:
        return Quantifier::all_L;
    default:
        return Quantifier::none;
    }
}

bool is_limit_type(Condition c) {
    return c == Condition::column_null || c == Condition::column_limit ||
           c == Condition::row_sum_limit || c == Condition::row_dev_weighted_null;
}

bool uses_alpha(Condition c) {
    return c == Condition::entry_dev_all || c == Condition::row_dev_conj_all ||
           c == Condition::row_dev_weighted_some || c == Condition::row_dev_weighted_null;
}

std::vector<double> some_L_values() {
    std::vector<double> out;
    for (int e = 0; e <= 12; ++e) out.push_back(std::ldexp(1.0, e));
    return out;
}

const std::vector<double> kAllL = {1.0, 4.0, 16.0};

struct Context {
    const DenseMatrix& m;
    const ExponentSeq& p;
    std::vector<double> conj;
    std::size_t limit_cols = 1;
    std::size_t lim_window = 1;
    const Tolerances& tol;
};

/// alpha_k at truncation order `rows`: the column value in the last row of the block.
double alpha_at(const DenseMatrix& a, std::size_t rows, std::size_t k) { return a(rows - 1, k); }

double spread(double lo, double hi) { return hi - lo; }

/// Governing quantity of condition c on the leading block of order `order` at scale L.
/// For lim-type conditions `ref` receives the scale used by the zero test.
double quantity(Condition c, const Context& ctx, std::size_t order, double L, double& ref) {
    const DenseMatrix& a = ctx.m;
    const std::size_t rows = std::min(order, a.rows());
    const std::size_t cols = std::min(order, a.cols());
    const auto& p = ctx.p;
    ref = 0.0;
    if (rows == 0 || cols == 0) return 0.0;

    switch (c) {
    case Condition::row_subset_pow: {
        double best = 0.0;
        for (std::size_t k = 0; k < cols; ++k) {
            double pos = 0.0, neg = 0.0;
            for (std::size_t n = 0; n < rows; ++n) {
                const double x = a(n, k);
                (x > 0 ? pos : neg) += x;
            }
            best = std::max(best, abs_pow(std::max(pos, -neg), p[k]));
        }
        return best;
    }
    case Condition::row_subset_conj: {
        const DenseMatrix block = a.block(rows, cols);
        const auto& q = ctx.conj;
        const SubsetFunctional phi = [&](std::span<const double> v) {
            double s = 0.0;
            for (std::size_t k = 0; k < v.size(); ++k) s += abs_pow(v[k] / L, q[k]);
            return s;
        };
        const std::size_t w = std::min(ctx.tol.subset_window, rows);
        return subset_sup(block, 0, rows, rows - w, w, phi);
    }
    case Condition::column_subset_some:
    case Condition::column_subset_all: {
        const double sign = c == Condition::column_subset_some ? -1.0 : 1.0;
        DenseMatrix cand(cols, rows);
        for (std::size_t k = 0; k < cols; ++k) {
            const double w = std::pow(L, sign / p[k]);
            for (std::size_t n = 0; n < rows; ++n) cand(k, n) = a(n, k) * w;
        }
        const SubsetFunctional phi = [](std::span<const double> v) {
            double s = 0.0;
            for (double x : v) s += std::abs(x);
            return s;
        };
        return subset_sup(cand, 0, cols, 0, ctx.tol.subset_window, phi);
    }
    case Condition::entry_scaled_all:
    case Condition::entry_pow:
    case Condition::entry_scaled_some:
    case Condition::entry_dev_all: {
        double scale = 1.0;
        if (c == Condition::entry_scaled_all || c == Condition::entry_dev_all) scale = L;
        if (c == Condition::entry_scaled_some) scale = 1.0 / L;
        double best = 0.0;
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t k = 0; k < cols; ++k) {
                const double x = c == Condition::entry_dev_all ? a(n, k) - alpha_at(a, rows, k) : a(n, k);
                best = std::max(best, abs_pow(x * scale, p[k]));
            }
        }
        return best;
    }
    case Condition::row_conj_all:
    case Condition::row_conj_some:
    case Condition::row_dev_conj_all: {
        const double scale = c == Condition::row_conj_some ? 1.0 / L : L;
        double best = 0.0;
        for (std::size_t n = 0; n < rows; ++n) {
            double s = 0.0;
            for (std::size_t k = 0; k < cols; ++k) {
                const double x = c == Condition::row_dev_conj_all ? a(n, k) - alpha_at(a, rows, k) : a(n, k);
                s += abs_pow(x * scale, ctx.conj[k]);
            }
            best = std::max(best, s);
        }
        return best;
    }
    case Condition::row_weighted_some:
    case Condition::row_weighted_all:
    case Condition::row_weighted_all_c:
    case Condition::row_dev_weighted_some: {
        const double sign =
            (c == Condition::row_weighted_some || c == Condition::row_dev_weighted_some) ? -1.0
                                                                                         : 1.0;
        std::vector<double> w(cols);
        for (std::size_t k = 0; k < cols; ++k) w[k] = std::pow(L, sign / p[k]);
        double best = 0.0;
        for (std::size_t n = 0; n < rows; ++n) {
            double s = 0.0;
            for (std::size_t k = 0; k < cols; ++k) {
                const double x =
                    c == Condition::row_dev_weighted_some ? a(n, k) - alpha_at(a, rows, k) : a(n, k);
                s += std::abs(x) * w[k];
            }
            best = std::max(best, s);
        }
        return best;
    }
    case Condition::row_sum_series:
    case Condition::row_sum_sup: {
        double total = 0.0, best = 0.0;
        for (std::size_t n = 0; n < rows; ++n) {
            const double s = std::abs(sum(a.row(n).first(cols)));
            total += s;
            best = std::max(best, s);
        }
        return c == Condition::row_sum_series ? total : best;
    }
    case Condition::column_null:
    case Condition::column_limit: {
        const std::size_t w = std::min(ctx.lim_window, rows);
        const std::size_t kc = std::min(ctx.limit_cols, cols);
        double worst = 0.0;
        for (std::size_t k = 0; k < kc; ++k) {
            double lo = a(rows - 1, k), hi = lo, mx = 0.0;
            for (std::size_t n = rows - w; n < rows; ++n) {
                lo = std::min(lo, a(n, k));
                hi = std::max(hi, a(n, k));
                mx = std::max(mx, std::abs(a(n, k)));
            }
            if (c == Condition::column_null) {
                worst = std::max(worst, mx);
                for (std::size_t n = 0; n < rows; ++n) ref = std::max(ref, std::abs(a(n, k)));
            } else {
                worst = std::max(worst, spread(lo, hi));
                ref = std::max(ref, std::abs(a(rows - 1, k)));
            }
        }
        return worst;
    }
    case Condition::row_sum_limit: {
        const std::size_t w = std::min(ctx.lim_window, rows);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t n = rows - w; n < rows; ++n) {
            const double s = sum(a.row(n).first(cols));
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        ref = std::abs(sum(a.row(rows - 1).first(cols)));
        return spread(lo, hi);
    }
    case Condition::row_dev_weighted_null: {
        const std::size_t w = std::min(ctx.lim_window, rows);
        std::vector<double> wt(cols);
        for (std::size_t k = 0; k < cols; ++k) {
            wt[k] = std::pow(L, 1.0 / p[k]);
            ref += std::abs(alpha_at(a, rows, k)) * wt[k];
        }
        double worst = 0.0;
        for (std::size_t n = rows - w; n < rows; ++n) {
            double s = 0.0;
            for (std::size_t k = 0; k < cols; ++k) s += std::abs(a(n, k) - alpha_at(a, rows, k)) * wt[k];
            worst = std::max(worst, s);
        }
        return worst;
    }
    }
    throw Error(ErrorCode::unknown_condition, "unhandled condition");
}

struct Trace {
    std::vector<double> values;
    Verdict verdict = Verdict::inconclusive;
    bool holds = false;
};

/// Some-L traces shrink with L, so they are classified relative to their largest entry.
Verdict classify_scale_free(std::span<const double> values, const Tolerances& tol) {
    double top = 0.0;
    for (double v : values) top = std::max(top, std::abs(v));
    if (!(top > 0.0) || !std::isfinite(top)) return classify_trace(values, tol);
    std::vector<double> scaled(values.begin(), values.end());
    for (double& v : scaled) v /= top;
    return classify_trace(scaled, tol);
}

Trace run_trace(Condition c, const Context& ctx, std::span<const std::size_t> schedule, double L,
                bool scale_free = false) {
    Trace tr;
    const bool lim = is_limit_type(c);
    const bool running_max = !lim && c != Condition::row_sum_series;
    double ref = 0.0;
    for (std::size_t m : schedule) {
        double q = quantity(c, ctx, m, L, ref);
        if (running_max && !tr.values.empty()) q = std::max(q, tr.values.back());
        tr.values.push_back(q);
    }
    if (lim) {
        const double last = tr.values.empty() ? 0.0 : tr.values.back();
        tr.holds = std::isfinite(last) && last <= ctx.tol.bounded_rel * (1.0 + ref);
        tr.verdict = tr.holds ? Verdict::bounded : classify_trace(tr.values, ctx.tol);
    } else {
        tr.verdict = scale_free ? classify_scale_free(tr.values, ctx.tol)
                                : classify_trace(tr.values, ctx.tol);
        tr.holds = tr.verdict == Verdict::bounded;
    }
    return tr;
}

std::string format_L(double L) { return std::to_string(static_cast<long long>(L)); }

void check_schedule(std::span<const std::size_t> schedule) {
    if (schedule.empty()) throw Error(ErrorCode::invalid_argument, "empty truncation schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] == 0 || (i > 0 && schedule[i] <= schedule[i - 1])) {
            throw Error(ErrorCode::invalid_argument,
                        "truncation schedule must be positive and strictly increasing");
        }
    }
}

Outcome combine(std::span<const FinitenessReport> checks) {
    bool all = true, failed = false;
    for (const auto& r : checks) {
        if (r.holds) continue;
        all = false;
        if (r.verdict != Verdict::inconclusive) failed = true;
    }
    if (all) return Outcome::pass;
    return failed ? Outcome::fail : Outcome::inconclusive;
}

FinitenessReport lim_report(std::string id, std::span<const std::size_t> schedule,
                            std::vector<double> trace, const Tolerances& tol) {
    FinitenessReport r;
    r.condition_id = std::move(id);
    r.truncations.assign(schedule.begin(), schedule.end());
    r.verdict = classify_trace(trace, tol);
    r.holds = r.verdict == Verdict::bounded;
    r.value_trace = std::move(trace);
    return r;
}

/// Convergence of sum_l (-v/u)^l a_l.
FinitenessReport check_band_series(const ParamSet& params, std::span<const double> a,
                                   std::span<const std::size_t> schedule, const Tolerances& tol) {
    const double ratio = -params.v() / params.u();
    std::vector<double> trace;
    double partial = 0.0, power = 1.0;
    std::size_t l = 0;
    for (std::size_t m : schedule) {
        for (; l < m; ++l) {
            partial += power * a[l];
            power *= ratio;
        }
        trace.push_back(partial);
    }
    return lim_report("B1", schedule, std::move(trace), tol);
}

/// Convergence of sum_{j>=k+2} c_{j-k}/t_j sum_{l>=j} g_{l-j} a_l for the leading k.
FinitenessReport check_nested_series(const ParamSet& params, std::span<const double> a,
                                     std::span<const std::size_t> schedule,
                                     const Tolerances& tol) {
    const std::size_t n = params.size();
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);
    const auto t = params.t();
    std::vector<double> tails(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = j; l < n; ++l) s += g[l - j] * a[l];
        tails[j] = s / t[j];
    }
    std::vector<double> worst;
    double worst_delta = -1.0;
    for (std::size_t k = 0; k < std::min<std::size_t>(4, n); ++k) {
        std::vector<double> trace;
        double partial = 0.0;
        std::size_t j = k + 2;
        for (std::size_t m : schedule) {
            for (; j < m; ++j) partial += d.signed_coeff(j - k) * tails[j];
            trace.push_back(partial);
        }
        const double delta =
            trace.size() < 2 ? 0.0 : std::abs(trace.back() - trace[trace.size() - 2]);
        if (!(delta <= worst_delta)) {
            worst_delta = delta;
            worst = std::move(trace);
        }
    }
    if (worst.empty()) worst.assign(schedule.size(), 0.0);
    return lim_report("B2", schedule, std::move(worst), tol);
}

/// sup_k |r_k a_k / t_k|^{p_k}.
FinitenessReport check_scaled_sup(const ParamSet& params, std::span<const double> a,
                                  const ExponentSeq& p, std::span<const std::size_t> schedule,
                                  const Tolerances& tol) {
    const auto r = params.r();
    const auto t = params.t();
    std::vector<double> trace;
    double best = 0.0;
    std::size_t k = 0;
    for (std::size_t m : schedule) {
        for (; k < m; ++k) best = std::max(best, abs_pow(r[k] * a[k] / t[k], p[k]));
        trace.push_back(best);
    }
    return lim_report("B3", schedule, std::move(trace), tol);
}

std::vector<Condition> dual_conditions(DualKind which, SpaceKind space, bool above_one) {
    using C = Condition;
    switch (which) {
    case DualKind::alpha:
        switch (space) {
        case SpaceKind::l: return {above_one ? C::row_subset_conj : C::row_subset_pow};
        case SpaceKind::c0: return {C::column_subset_some};
        case SpaceKind::c: return {C::column_subset_some, C::row_sum_series};
        case SpaceKind::linf: return {C::column_subset_all};
        }
        break;
    case DualKind::gamma:
        switch (space) {
        case SpaceKind::l: return {above_one ? C::row_conj_some : C::entry_scaled_some};
        case SpaceKind::c0: return {C::row_weighted_some};
        case SpaceKind::c: return {C::row_weighted_some, C::row_sum_sup};
        case SpaceKind::linf: return {C::row_weighted_all};
        }
        break;
    case DualKind::beta:
        switch (space) {
        case SpaceKind::l:
            if (above_one) return {C::row_conj_some, C::column_limit, C::row_dev_conj_all};
            return {C::entry_pow, C::column_limit, C::entry_dev_all};
        case SpaceKind::c0:
            return {C::column_limit, C::row_dev_weighted_some, C::row_weighted_some};
        case SpaceKind::c:
            return {C::column_limit, C::row_dev_weighted_some, C::row_weighted_some,
                    C::row_sum_limit};
        case SpaceKind::linf: return {C::row_weighted_all_c, C::row_dev_weighted_null};
        }
        break;
    }
    return {};
}

/// Inner sums sum_{l=j}^{N-1} g_{l-j} row_l divided by t_j, then the c-convolution.
void tilde_row(std::span<const double> row, std::span<const double> g,
               const DCoeffs& d, std::span<const double> r, std::span<const double> t,
               std::span<double> out) {
    const std::size_t n = row.size();
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = j; l < n; ++l) s += g[l - j] * row[l];
        w[j] = s / t[j];
    }
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t j = k; j < n; ++j) s += d.signed_coeff(j - k) * w[j];
        out[k] = r[k] * s;
    }
}

} // namespace

std::span<const Condition> all_conditions() { return kConditions; }

std::string_view condition_id(Condition c) {
    for (std::size_t i = 0; i < kConditions.size(); ++i) {
        if (kConditions[i] == c) return kIds[i];
    }
    return "unknown";
}

Condition parse_condition(std::string_view id) {
    for (std::size_t i = 0; i < kIds.size(); ++i) {
        if (kIds[i] == id) return kConditions[i];
    }
    throw Error(ErrorCode::unknown_condition, "unknown condition '" + std::string(id) + "'");
}

bool needs_conjugate(Condition c) {
    return c == Condition::row_subset_conj || c == Condition::row_conj_all ||
           c == Condition::row_dev_conj_all || c == Condition::row_conj_some;
}

std::vector<std::size_t> default_schedule(std::size_t n) {
    if (n == 0) return {};
    if (n < 8) {
        if (n / 2 == 0) return {n};
        return {n / 2, n};
    }
    std::vector<std::size_t> out;
    for (std::size_t m = 8; m < n; m *= 2) out.push_back(m);
    out.push_back(n);
    return out;
}

FinitenessReport eval_condition(Condition c, const DenseMatrix& m, const ExponentSeq& p,
                                std::span<const std::size_t> schedule, const Tolerances& tol) {
    std::vector<std::size_t> fallback;
    if (schedule.empty()) {
        fallback = default_schedule(std::max(m.rows(), m.cols()));
        schedule = fallback;
    }
    check_schedule(schedule);
    if (p.size() < m.cols()) {
        throw Error(ErrorCode::dimension_mismatch, "exponent sequence shorter than matrix width");
    }

    Context ctx{m, p, {}, 1, 1, tol};
    if (needs_conjugate(c)) ctx.conj = p.conjugates();
    ctx.limit_cols = std::max<std::size_t>(1, schedule.front() / 2);
    ctx.lim_window = std::max<std::size_t>(1, std::min(tol.stability_window, schedule.front() / 2));

    FinitenessReport report;
    report.condition_id = std::string(condition_id(c));
    report.truncations.assign(schedule.begin(), schedule.end());

    if (uses_alpha(c)) {
        const std::size_t rows = std::min(schedule.back(), m.rows());
        const std::size_t cols = std::min(schedule.back(), m.cols());
        const auto limits = column_limits(m, rows, cols, tol);
        std::size_t unstable = 0;
        for (std::size_t k = 0; k < std::min(ctx.limit_cols, cols); ++k) {
            if (!limits.stable[k]) ++unstable;
        }
        if (unstable > 0) {
            report.notes.push_back("column limits unstable in " + std::to_string(unstable) +
                                   " leading column(s)");
        }
    }

    switch (quantifier(c)) {
    case Quantifier::none: {
        auto tr = run_trace(c, ctx, schedule, 1.0);
        report.value_trace = std::move(tr.values);
        report.verdict = tr.verdict;
        report.holds = tr.holds;
        break;
    }
    case Quantifier::some_L: {
        Trace last;
        for (double L : some_L_values()) {
            last = run_trace(c, ctx, schedule, L, true);
            if (last.holds) {
                report.witness_L = static_cast<int>(L);
                break;
            }
        }
        if (!report.witness_L) report.notes.push_back("no L up to 4096 gives a bounded trace");
        report.value_trace = std::move(last.values);
        report.verdict = last.verdict;
        report.holds = last.holds;
        break;
    }
    case Quantifier::all_L: {
        // Report the worst L: growing before inconclusive before holding.
        Trace chosen;
        int rank = -1;
        for (double L : kAllL) {
            auto tr = run_trace(c, ctx, schedule, L);
            const int r = tr.holds ? 0 : (tr.verdict == Verdict::growing ? 2 : 1);
            if (!tr.holds) report.notes.push_back("fails at L = " + format_L(L));
            if (r > rank) {
                chosen = std::move(tr);
                rank = r;
            }
        }
        report.value_trace = std::move(chosen.values);
        report.verdict = chosen.verdict;
        report.holds = chosen.holds;
        break;
    }
    }
    return report;
}

DualKernel build_E(const ParamSet& params, std::span<const double> a) {
    const std::size_t n = params.size();
    if (a.size() < n) throw Error(ErrorCode::length_mismatch, "sequence a shorter than N");
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);
    const auto r = params.r();
    const auto t = params.t();

    DualKernel kernel{KernelKind::E_of_a, DenseMatrix(n, n)};
    // tails[j] = sum_{l=j}^{row} g_{l-j} a_l, extended by one term per row.
    std::vector<double> tails(n, 0.0);
    std::vector<double> w(n, 0.0);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t j = 0; j <= row; ++j) {
            tails[j] += g[row - j] * a[row];
            w[j] = tails[j] / t[j];
        }
        auto out = kernel.matrix.row(row);
        for (std::size_t k = 0; k <= row; ++k) {
            double s = 0.0;
            for (std::size_t j = k; j <= row; ++j) s += d.signed_coeff(j - k) * w[j];
            out[k] = r[k] * s;
        }
    }
    return kernel;
}

DualKernel build_E_tilde(const ParamSet& params, const DenseMatrix& a) {
    const std::size_t n = params.size();
    if (a.cols() != n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "matrix has " + std::to_string(a.cols()) + " columns, expected " +
                        std::to_string(n));
    }
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);
    DualKernel kernel{KernelKind::E_tilde_of_A, DenseMatrix(a.rows(), n)};
    for (std::size_t row = 0; row < a.rows(); ++row) {
        tilde_row(a.row(row), g, d, params.r(), params.t(), kernel.matrix.row(row));
    }
    return kernel;
}

DualKernel build_C(const ParamSet& params, std::span<const double> a) {
    const std::size_t n = params.size();
    if (a.size() < n) throw Error(ErrorCode::length_mismatch, "sequence a shorter than N");
    const auto inv = invert_AB(params);
    DualKernel kernel{KernelKind::C_of_a, DenseMatrix(n, n)};
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= row; ++k) kernel.matrix(row, k) = inv(row, k) * a[row];
    }
    return kernel;
}

std::string_view to_string(DualKind kind) {
    switch (kind) {
    case DualKind::alpha: return "alpha";
    case DualKind::beta: return "beta";
    case DualKind::gamma: return "gamma";
    }
    return "unknown";
}

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::l: return "l";
    case SpaceKind::c0: return "c0";
    case SpaceKind::c: return "c";
    case SpaceKind::linf: return "linf";
    }
    return "unknown";
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::optional<DualKind> parse_dual_kind(std::string_view name) {
    for (auto k : {DualKind::alpha, DualKind::beta, DualKind::gamma}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::optional<SpaceKind> parse_space_kind(std::string_view name) {
    for (auto k : {SpaceKind::l, SpaceKind::c0, SpaceKind::c, SpaceKind::linf}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

DualReport dual_membership(const ParamSet& params, std::span<const double> a, DualKind which,
                           const ExponentSeq& p, SpaceKind space,
                           std::span<const std::size_t> schedule, const Tolerances& tol) {
    const std::size_t n = params.size();
    if (a.size() < n) throw Error(ErrorCode::length_mismatch, "sequence a shorter than N");
    if (p.size() < n) throw Error(ErrorCode::length_mismatch, "exponent sequence shorter than N");
    std::vector<std::size_t> fallback;
    if (schedule.empty()) {
        fallback = default_schedule(n);
        schedule = fallback;
    }
    check_schedule(schedule);
    if (schedule.back() > n) {
        throw Error(ErrorCode::invalid_argument, "truncation schedule exceeds N");
    }

    const auto regime = p.regime();
    if (space == SpaceKind::l && regime == ExponentRegime::mixed) {
        throw Error(ErrorCode::exponent_regime,
                    "mixed exponent regime: some p_k <= 1 while others exceed 1");
    }
    const bool above_one = regime == ExponentRegime::above_one;

    const auto kernel = which == DualKind::alpha ? build_C(params, a) : build_E(params, a);

    DualReport report;
    report.which = which;
    report.space = space;
    if (which == DualKind::beta) {
        report.checks.push_back(check_band_series(params, a, schedule, tol));
        report.checks.push_back(check_nested_series(params, a, schedule, tol));
        report.checks.push_back(check_scaled_sup(params, a, p, schedule, tol));
    }
    for (Condition c : dual_conditions(which, space, above_one)) {
        report.checks.push_back(eval_condition(c, kernel.matrix, p, schedule, tol));
    }
    report.outcome = combine(report.checks);
    return report;
}

std::string_view to_string(MappingTarget target) {
    return target == MappingTarget::linf ? "linf" : "l1";
}

std::optional<MappingTarget> parse_mapping_target(std::string_view name) {
    if (name == "linf") return MappingTarget::linf;
    if (name == "l1") return MappingTarget::l1;
    return std::nullopt;
}

MappingReport mapping_check(const ParamSet& params, const DenseMatrix& a, MappingTarget target,
                            const ExponentSeq& p, std::span<const std::size_t> schedule,
                            const Tolerances& tol) {
    const auto regime = p.regime();
    if (regime == ExponentRegime::mixed) {
        throw Error(ErrorCode::exponent_regime,
                    "mixed exponent regime: some p_k <= 1 while others exceed 1");
    }
    const bool above_one = regime == ExponentRegime::above_one;
    const auto kernel = build_E_tilde(params, a);

    std::vector<std::size_t> fallback;
    if (schedule.empty()) {
        fallback = default_schedule(params.size());
        schedule = fallback;
    }

    Condition c;
    if (target == MappingTarget::linf) {
        c = above_one ? Condition::row_conj_some : Condition::entry_scaled_some;
    } else {
        c = above_one ? Condition::row_subset_conj : Condition::row_subset_pow;
    }

    MappingReport report;
    report.target = target;
    report.kernel_check = eval_condition(c, kernel.matrix, p, schedule, tol);

    std::vector<FinitenessReport> summary{report.kernel_check};
    for (std::size_t row = 0; row < a.rows(); ++row) {
        const auto r = dual_membership(params, a.row(row), DualKind::beta, p, SpaceKind::l,
                                       schedule, tol);
        report.row_outcomes.push_back(r.outcome);
    }
    // Rows from the next-to-last truncation on are seen at one truncation only, so their
    // inconclusive verdicts do not count against the outcome.
    const std::size_t observed = schedule.size() > 1 ? schedule[schedule.size() - 2] : a.rows();
    Outcome rows = Outcome::pass;
    for (std::size_t n = 0; n < report.row_outcomes.size(); ++n) {
        const auto o = report.row_outcomes[n];
        if (o == Outcome::fail) rows = Outcome::fail;
        else if (o == Outcome::inconclusive && n < observed && rows == Outcome::pass) rows = Outcome::inconclusive;
    }
    const Outcome kernel_outcome = combine(summary);
    if (kernel_outcome == Outcome::fail || rows == Outcome::fail) {
        report.outcome = Outcome::fail;
    } else if (kernel_outcome == Outcome::pass && rows == Outcome::pass) {
        report.outcome = Outcome::pass;
    } else {
        report.outcome = Outcome::inconclusive;
    }
    return report;
}

YoungCheck young_bound(double a, double b, double T, double p) {
    if (!(T > 0.0)) throw Error(ErrorCode::invalid_argument, "T must be positive");
    if (!(p > 1.0)) throw Error(ErrorCode::exponent_regime, "Young bound needs p > 1");
    const double q = conjugate_exponent(p);
    YoungCheck out;
    out.lhs = std::abs(a * b);
    out.rhs = T * (abs_pow(a / T, q) + abs_pow(b, p));
    return out;
}

} // namespace seqspace
