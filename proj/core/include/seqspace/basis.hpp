#pragma once

#include "seqspace/params.hpp"
#include "seqspace/tolerances.hpp"

#include <optional>
#include <span>
#include <vector>

namespace seqspace {

/// Schauder basis element b^(j), j >= 0, or b^(-1) for j = -1.
/// For j >= 0, forward(b^(j)) = e_j and values_n = 0 for n < j.
struct BasisVector {
    int j = 0;
    std::vector<double> values;
};

/// Throws IndexOutOfRange unless -1 <= j < N.
BasisVector basis_vector(const ParamSet& params, int j);

enum class ExpansionMode { c0_lp, c };

/// Coordinates nu_k = (A(r,s,t;B) x)_k, plus the limit ell in c-mode.
struct Expansion {
    ExpansionMode mode = ExpansionMode::c0_lp;
    std::vector<double> coeffs;
    std::optional<double> limit;
    double limit_spread = 0.0;
};

/// In c-mode, ell is the mean of the last `basis_limit_window` coefficients; throws
/// NoLimitDetected when their spread exceeds basis_limit_spread * (1 + |mean|).
Expansion expand(const ParamSet& params, std::span<const double> x,
                 ExpansionMode mode = ExpansionMode::c0_lp, const Tolerances& tol = {});

/// Partial sum of order m: sum_{j<=m} nu_j b^(j), or in c-mode
/// ell b^(-1) + sum_{j<=m} (nu_j - ell) b^(j).
std::vector<double> reconstruct(const ParamSet& params, const Expansion& expansion, std::size_t m);

} // namespace seqspace
