#include "seqspace/limits.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

std::string_view to_string(Trend trend) {
    switch (trend) {
    case Trend::converged: return "converged";
    case Trend::growing: return "growing";
    case Trend::decaying: return "decaying";
    case Trend::oscillating: return "oscillating";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::bounded: return "bounded";
    case Verdict::growing: return "growing";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

struct Window {
    std::size_t begin, end;
    double max;
};

Window tail_window(std::span<const double> seq, std::size_t n) {
    const std::size_t w = std::min(n, std::max<std::size_t>(8, n / 8));
    Window out{n - w, n, -INFINITY};
    for (std::size_t i = out.begin; i < out.end; ++i) out.max = std::max(out.max, seq[i]);
    return out;
}

} // namespace

LimitEstimate estimate_limsup(std::span<const double> seq, const Tolerances& tol,
                              double abs_floor) {
    LimitEstimate est;
    const std::size_t n = seq.size();
    if (n == 0) return est;
    const auto full = tail_window(seq, n);
    est.value = full.max;
    est.window_begin = full.begin;
    est.window_end = full.end;
    const std::size_t h = std::max<std::size_t>(1, n / 2);
    est.half_value = tail_window(seq, h).max;

    const double diff = est.value - est.half_value;
    const double scale = std::max(std::abs(est.value), std::abs(est.half_value));
    if (!std::isfinite(est.value)) {
        est.trend = Trend::growing;
        return est;
    }
    if (std::abs(diff) <= tol.limsup_rel * scale + abs_floor) {
        est.trend = Trend::converged;
        return est;
    }
    const auto window = seq.subspan(full.begin, full.end - full.begin);
    const bool nondecreasing = std::is_sorted(window.begin(), window.end());
    const bool nonincreasing = std::is_sorted(window.begin(), window.end(), std::greater<>());
    if (diff > 0 && nondecreasing) {
        est.trend = Trend::growing;
    } else if (diff < 0 && nonincreasing) {
        est.trend = Trend::decaying;
    } else {
        est.trend = Trend::oscillating;
    }
    return est;
}

bool ColumnLimits::all_stable() const {
    return std::all_of(stable.begin(), stable.end(), [](bool b) { return b; });
}

ColumnLimits column_limits(const DenseMatrix& m, std::size_t rows, std::size_t cols,
                           const Tolerances& tol) {
    ColumnLimits out;
    out.alpha.assign(cols, 0.0);
    out.stable.assign(cols, false);
    if (rows == 0) return out;
    const std::size_t w = std::min(tol.stability_window, rows);
    for (std::size_t k = 0; k < cols; ++k) {
        const double alpha = m(rows - 1, k);
        double lo = alpha, hi = alpha;
        for (std::size_t n = rows - w; n < rows; ++n) {
            lo = std::min(lo, m(n, k));
            hi = std::max(hi, m(n, k));
        }
        out.alpha[k] = alpha;
        out.stable[k] = (hi - lo) <= tol.stability_rel * (1.0 + std::abs(alpha));
    }
    return out;
}

Verdict classify_trace(std::span<const double> trace, const Tolerances& tol) {
    const std::size_t n = trace.size();
    if (n == 0) return Verdict::inconclusive;
    for (double v : trace) {
        if (!std::isfinite(v)) return Verdict::growing;
    }
    if (n < 2) return Verdict::inconclusive;

    const double a = trace[n - 2];
    const double b = trace[n - 1];
    const double mean = 0.5 * (a + b);
    if (std::abs(b - a) <= tol.bounded_rel * (1.0 + std::abs(mean))) return Verdict::bounded;

    const std::size_t tail = std::min<std::size_t>(3, n);
    bool growing = true;
    for (std::size_t i = n - tail; i + 1 < n; ++i) {
        const double prev = std::abs(trace[i]);
        const double next = std::abs(trace[i + 1]);
        if (!(next > prev) || (prev > 0.0 && next < prev * (1.0 + tol.growth_delta))) {
            growing = false;
            break;
        }
    }
    return growing ? Verdict::growing : Verdict::inconclusive;
}

} // namespace seqspace
