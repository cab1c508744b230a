#pragma once

#include "seqspace/matrix.hpp"
#include "seqspace/tolerances.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace seqspace {

enum class Trend { converged, growing, decaying, oscillating };
std::string_view to_string(Trend trend);

/// Finite-truncation estimate of a limit / limsup.
///
/// Rule: for a sequence of length n the tail window is the last max(8, n/8) entries and the
/// estimate is the window maximum. The same rule applied to the first n/2 entries gives
/// `half_value`; the two agreeing to `limsup_rel` (relative, with an absolute floor) means
/// converged.
struct LimitEstimate {
    double value = 0.0;
    double half_value = 0.0;
    Trend trend = Trend::converged;
    std::size_t window_begin = 0;
    std::size_t window_end = 0;
};

LimitEstimate estimate_limsup(std::span<const double> seq, const Tolerances& tol = {},
                              double abs_floor = 0.0);

/// Column-limit estimates alpha_k = last row value, flagged stable when the last
/// `stability_window` rows of column k lie within stability_rel * (1 + |alpha_k|).
struct ColumnLimits {
    std::vector<double> alpha;
    std::vector<bool> stable;
    bool all_stable() const;
};

ColumnLimits column_limits(const DenseMatrix& m, std::size_t rows, std::size_t cols,
                           const Tolerances& tol = {});

enum class Verdict { bounded, growing, inconclusive };
std::string_view to_string(Verdict verdict);

/// Classifies a trace sampled over a growing truncation schedule.
/// bounded: the last two entries agree to bounded_rel * (1 + |mean|).
/// growing: the last (up to three) entries strictly increase with every ratio >= 1 + delta,
///          or the trace is non-finite.
Verdict classify_trace(std::span<const double> trace, const Tolerances& tol = {});

} // namespace seqspace
