#include "seqspace/transform.hpp"

#include "seqspace/error.hpp"
#include "seqspace/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

namespace {

void require_input(const ParamSet& params, std::span<const double> x, const char* name) {
    if (x.size() < params.size()) {
        throw Error(ErrorCode::length_mismatch, std::string(name) + " has " +
                                                    std::to_string(x.size()) + " terms, need " +
                                                    std::to_string(params.size()));
    }
}

double transform_row(const ParamSet& params, std::span<const double> x, std::size_t n,
                     Summation mode) {
    const auto r = params.r();
    const auto s = params.s();
    const auto t = params.t();
    const double u = params.u();
    const double v = params.v();
    Accumulator acc(mode);
    for (std::size_t k = 0; k < n; ++k) {
        acc.add((s[n - k] * t[k] * u + s[n - k - 1] * t[k + 1] * v) * x[k]);
    }
    acc.add(s[0] * t[n] * u * x[n]);
    return acc.value() / r[n];
}

} // namespace

std::vector<double> forward(const ParamSet& params, std::span<const double> x, Summation mode) {
    require_input(params, x, "x");
    std::vector<double> y(params.size());
    for (std::size_t n = 0; n < y.size(); ++n) y[n] = transform_row(params, x, n, mode);
    return y;
}

std::vector<double> inverse(const ParamSet& params, std::span<const double> y, Summation mode) {
    require_input(params, y, "y");
    const std::size_t n = params.size();
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);
    const auto r = params.r();
    const auto t = params.t();

    // Inner sum over j first: z_k = (1/t_k) sum_{j<=k} (-1)^(k-j) D_{k-j} r_j y_j,
    // then x_n = sum_{k<=n} g_{n-k} z_k.
    std::vector<double> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        Accumulator acc(mode);
        for (std::size_t j = 0; j <= k; ++j) acc.add(d.signed_coeff(k - j) * r[j] * y[j]);
        z[k] = acc.value() / t[k];
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Accumulator acc(mode);
        for (std::size_t k = 0; k <= i; ++k) acc.add(g[i - k] * z[k]);
        x[i] = acc.value();
    }
    return x;
}

double maddox_sum_gauge(std::span<const double> y, const ExponentSeq& p) {
    if (p.size() < y.size()) throw Error(ErrorCode::length_mismatch, "p shorter than y");
    double acc = 0.0;
    for (std::size_t n = 0; n < y.size(); ++n) acc += abs_pow(y[n], p[n]);
    return p.M() == 1.0 ? acc : std::pow(acc, 1.0 / p.M());
}

double maddox_sup_gauge(std::span<const double> y, const ExponentSeq& p) {
    if (p.size() < y.size()) throw Error(ErrorCode::length_mismatch, "p shorter than y");
    double m = 0.0;
    for (std::size_t n = 0; n < y.size(); ++n) m = std::max(m, abs_pow(y[n], p[n] / p.M()));
    return m;
}

double paranorm_lp(const ParamSet& params, const ExponentSeq& p, std::span<const double> x) {
    require_input(params, x, "x");
    if (p.size() < params.size()) throw Error(ErrorCode::length_mismatch, "p shorter than N");
    double acc = 0.0;
    for (std::size_t n = 0; n < params.size(); ++n) {
        acc += abs_pow(transform_row(params, x, n, Summation::plain), p[n]);
    }
    return p.M() == 1.0 ? acc : std::pow(acc, 1.0 / p.M());
}

SupParanorm paranorm_sup(const ParamSet& params, const ExponentSeq& p, std::span<const double> x) {
    require_input(params, x, "x");
    if (p.size() < params.size()) throw Error(ErrorCode::length_mismatch, "p shorter than N");
    SupParanorm out;
    for (std::size_t n = 0; n < params.size(); ++n) {
        const double yn = transform_row(params, x, n, Summation::plain);
        out.value = std::max(out.value, abs_pow(yn, p[n] / p.M()));
    }
    out.completeness_warning = p.min() < 1e-6;
    return out;
}

double norm_lp(const ParamSet& params, double p, std::span<const double> x) {
    if (!(p >= 1.0)) throw Error(ErrorCode::exponent_regime, "norm_lp requires p >= 1");
    return lp_norm(forward(params, x), p);
}

} // namespace seqspace
