#pragma once

#include "seqspace/numeric.hpp"
#include "seqspace/params.hpp"

#include <span>
#include <vector>

namespace seqspace {

/// y = A(r, s, t; B) x evaluated row by row from the generating sequences:
/// y_n = (1/r_n) ( sum_{k<n} (s_{n-k} t_k u + s_{n-k-1} t_{k+1} v) x_k + s_0 t_n u x_n ).
/// Only the first N entries of x are read. Throws LengthMismatch if x is shorter than N.
std::vector<double> forward(const ParamSet& params, std::span<const double> x,
                            Summation mode = Summation::plain);

/// x = A(r, s, t; B)^{-1} y, x_n = sum_{j<=n} sum_{k=j}^n (-1)^(k-j) g_{n-k} D_{k-j} r_j y_j / t_k,
/// with g_d = (-v)^d / u^(d+1).
std::vector<double> inverse(const ParamSet& params, std::span<const double> y,
                            Summation mode = Summation::plain);

/// (sum_n |y_n|^{p_n})^{1/M}: the paranorm of l(p) applied to y directly.
double maddox_sum_gauge(std::span<const double> y, const ExponentSeq& p);
/// sup_n |y_n|^{p_n/M}: the paranorm of l_inf(p), c(p), c_0(p).
double maddox_sup_gauge(std::span<const double> y, const ExponentSeq& p);

/// Paranorm of l(r, s, t, p; B). Evaluates the transform inline, not through forward().
double paranorm_lp(const ParamSet& params, const ExponentSeq& p, std::span<const double> x);

struct SupParanorm {
    double value = 0.0;
    /// Set when min p_k < 1e-6: the value is well defined but the space is not complete.
    bool completeness_warning = false;
};

SupParanorm paranorm_sup(const ParamSet& params, const ExponentSeq& p, std::span<const double> x);

/// ||x||_{l_p(r,s,t;B)} = ||A(r,s,t;B) x||_p for constant p >= 1.
double norm_lp(const ParamSet& params, double p, std::span<const double> x);

} // namespace seqspace
