#pragma once

#include <cstddef>

namespace seqspace {

/// Every threshold used to turn truncated traces into verdicts. All fields are
/// overridable from a run config.
struct Tolerances {
    /// Compactness: trace tail at or below this is "zero"; at or above 10x is not.
    double tol_zero = 1e-7;
    /// Condition traces: tail spread <= bounded_rel * (1 + |tail mean|) is bounded.
    double bounded_rel = 1e-6;
    /// Condition traces: tail ratios >= 1 + growth_delta count as growth.
    double growth_delta = 0.05;
    /// Column-limit stability: last `stability_window` rows within this relative spread.
    double stability_rel = 1e-6;
    std::size_t stability_window = 8;
    /// limsup rule: window max at N/2 vs N agree to this relative tolerance.
    double limsup_rel = 1e-3;
    /// c-space limit rule for basis expansions (mean of the last 8 transform values).
    double basis_limit_spread = 1e-8;
    std::size_t basis_limit_window = 8;
    /// Exhaustive subset-search window width for sup over finite sets F.
    std::size_t subset_window = 12;
    /// ã entries whose truncation-sensitivity ratio exceeds this are reported.
    double tail_ratio_warn = 1e-6;
};

} // namespace seqspace
