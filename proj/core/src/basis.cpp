#include "seqspace/basis.hpp"

#include "seqspace/error.hpp"
#include "seqspace/transform.hpp"
#include "seqspace/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

namespace {

// Column j of A(r,s,t;B)^{-1}.
std::vector<double> basis_column(std::size_t j, const DCoeffs& d, std::span<const double> g,
                                 const ParamSet& params) {
    const std::size_t n = params.size();
    const auto r = params.r();
    const auto t = params.t();
    std::vector<double> z(n, 0.0);
    for (std::size_t k = j; k < n; ++k) z[k] = d.signed_coeff(k - j) * r[j] / t[k];
    std::vector<double> b(n, 0.0);
    for (std::size_t i = j; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = j; k <= i; ++k) acc += g[i - k] * z[k];
        b[i] = acc;
    }
    return b;
}

} // namespace

BasisVector basis_vector(const ParamSet& params, int j) {
    const auto n = static_cast<int>(params.size());
    if (j < -1 || j >= n) {
        throw Error(ErrorCode::index_out_of_range,
                    "basis index " + std::to_string(j) + " outside [-1, " + std::to_string(n) + ")");
    }
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), params.size());

    BasisVector out{j, {}};
    if (j >= 0) {
        out.values = basis_column(static_cast<std::size_t>(j), d, g, params);
        return out;
    }
    // b^(-1) is the sum of all columns.
    out.values.assign(params.size(), 0.0);
    for (std::size_t col = 0; col < params.size(); ++col) {
        const auto b = basis_column(col, d, g, params);
        for (std::size_t i = col; i < b.size(); ++i) out.values[i] += b[i];
    }
    return out;
}

Expansion expand(const ParamSet& params, std::span<const double> x, ExpansionMode mode,
                 const Tolerances& tol) {
    Expansion e;
    e.mode = mode;
    e.coeffs = forward(params, x);
    if (mode == ExpansionMode::c0_lp) return e;

    const std::size_t n = e.coeffs.size();
    const std::size_t w = std::min(tol.basis_limit_window, n);
    const auto tail = std::span<const double>(e.coeffs).last(w);
    const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
    double mean = 0.0;
    for (double v : tail) mean += v;
    mean /= static_cast<double>(w);
    e.limit_spread = *hi - *lo;
    if (!(e.limit_spread <= tol.basis_limit_spread * (1.0 + std::abs(mean)))) {
        throw Error(ErrorCode::no_limit_detected,
                    "transform tail spread " + std::to_string(e.limit_spread) +
                        " exceeds the limit tolerance");
    }
    e.limit = mean;
    return e;
}

std::vector<double> reconstruct(const ParamSet& params, const Expansion& expansion, std::size_t m) {
    const std::size_t n = params.size();
    if (expansion.coeffs.size() != n) {
        throw Error(ErrorCode::dimension_mismatch, "expansion length differs from N");
    }
    const std::size_t last = std::min(m, n - 1);
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);

    const bool c_mode = expansion.mode == ExpansionMode::c && expansion.limit.has_value();
    const double ell = c_mode ? *expansion.limit : 0.0;

    std::vector<double> x(n, 0.0);
    if (c_mode) {
        const auto bm1 = basis_vector(params, -1).values;
        for (std::size_t i = 0; i < n; ++i) x[i] = ell * bm1[i];
    }
    for (std::size_t j = 0; j <= last; ++j) {
        const double coeff = expansion.coeffs[j] - ell;
        if (coeff == 0.0) continue;
        const auto b = basis_column(j, d, g, params);
        for (std::size_t i = j; i < n; ++i) x[i] += coeff * b[i];
    }
    return x;
}

} // namespace seqspace
