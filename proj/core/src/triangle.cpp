#include "seqspace/triangle.hpp"

#include "seqspace/error.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

Triangle Triangle::identity(std::size_t n) {
    Triangle t(n);
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) = 1.0;
    return t;
}

Triangle Triangle::from_dense(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "triangle must be square");
    Triangle t(m.rows());
    for (std::size_t n = 0; n < m.rows(); ++n) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (k <= n) {
                t.at(n, k) = m(n, k);
            } else if (m(n, k) != 0.0) {
                throw Error(ErrorCode::dimension_mismatch,
                            "nonzero entry above the diagonal at (" + std::to_string(n) + ", " +
                                std::to_string(k) + ")");
            }
        }
    }
    return t;
}

bool Triangle::invertible() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) == 0.0) return false;
    }
    return true;
}

DenseMatrix Triangle::to_dense() const {
    DenseMatrix m(n_, n_);
    for (std::size_t n = 0; n < n_; ++n) {
        for (std::size_t k = 0; k <= n; ++k) m(n, k) = (*this)(n, k);
    }
    return m;
}

DCoeffs d_coeffs(std::span<const double> s, std::size_t n) {
    if (s.size() < n) throw Error(ErrorCode::length_mismatch, "s shorter than requested N");
    if (n == 0) return {};
    if (s[0] == 0.0) throw ZeroEntry(0, "s");
    const double inv0 = 1.0 / s[0];
    std::vector<double> c(n);
    c[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= m; ++j) acc += s[j] * c[m - j];
        c[m] = -inv0 * acc;
    }
    DCoeffs out;
    out.d.resize(n);
    for (std::size_t m = 0; m < n; ++m) out.d[m] = (m % 2 == 0) ? c[m] : -c[m];
    return out;
}

DCoeffs d_coeffs(const ParamSet& params) { return d_coeffs(params.s(), params.size()); }

std::vector<double> band_inverse_factors(double u, double v, std::size_t n) {
    std::vector<double> g(n);
    if (n == 0) return g;
    const double ratio = -v / u;
    g[0] = 1.0 / u;
    for (std::size_t d = 1; d < n; ++d) g[d] = g[d - 1] * ratio;
    return g;
}

std::vector<double> Bidiagonal::apply(std::span<const double> x) const {
    if (x.size() != n) throw Error(ErrorCode::dimension_mismatch, "B(u,v) apply: length mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = u * x[i] + (i > 0 ? v * x[i - 1] : 0.0);
    return y;
}

std::vector<double> Bidiagonal::solve(std::span<const double> y) const {
    if (y.size() != n) throw Error(ErrorCode::dimension_mismatch, "B(u,v) solve: length mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (y[i] - (i > 0 ? v * x[i - 1] : 0.0)) / u;
    return x;
}

Triangle Bidiagonal::to_triangle() const {
    Triangle t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.at(i, i) = u;
        if (i > 0) t.at(i, i - 1) = v;
    }
    return t;
}

Triangle Bidiagonal::inverse() const {
    const auto g = band_inverse_factors(u, v, n);
    Triangle t(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) t.at(i, k) = g[i - k];
    }
    return t;
}

Bidiagonal bidiagonal(const ParamSet& params) {
    return Bidiagonal{params.u(), params.v(), params.size()};
}

Triangle build_A(const ParamSet& params) {
    const std::size_t n = params.size();
    const auto r = params.r();
    const auto s = params.s();
    const auto t = params.t();
    Triangle a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) a.at(i, k) = s[i - k] * t[k] / r[i];
    }
    return a;
}

Triangle build_B(const ParamSet& params) { return bidiagonal(params).to_triangle(); }

Triangle build_AB(const ParamSet& params) {
    const std::size_t n = params.size();
    const auto r = params.r();
    const auto s = params.s();
    const auto t = params.t();
    const double u = params.u();
    const double v = params.v();
    Triangle ab(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            ab.at(i, k) = (s[i - k] * t[k] * u + s[i - k - 1] * t[k + 1] * v) / r[i];
        }
        ab.at(i, i) = s[0] * t[i] * u / r[i];
    }
    return ab;
}

namespace {

void require_invertible_A(const ParamSet& params) {
    const auto r = params.r();
    const auto t = params.t();
    const double s0 = params.s()[0];
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double diag = s0 * t[i] / r[i];
        if (diag == 0.0 || !std::isfinite(diag) || !std::isfinite(r[i] / t[i])) {
            throw Error(ErrorCode::not_invertible,
                        "diagonal of A(r,s,t) vanishes or overflows at row " + std::to_string(i));
        }
    }
}

} // namespace

Triangle invert_A(const ParamSet& params) {
    require_invertible_A(params);
    const std::size_t n = params.size();
    const auto d = d_coeffs(params);
    const auto r = params.r();
    const auto t = params.t();
    Triangle inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) inv.at(i, k) = d.signed_coeff(i - k) * r[k] / t[i];
    }
    return inv;
}

Triangle invert_AB(const ParamSet& params) {
    require_invertible_A(params);
    const std::size_t n = params.size();
    const auto d = d_coeffs(params);
    const auto g = band_inverse_factors(params.u(), params.v(), n);
    const auto r = params.r();
    const auto t = params.t();
    Triangle inv(n);
    // Column j: z_k = (-1)^(k-j) D_{k-j} r_j / t_k, then entry (i, j) = sum_k g_{i-k} z_k.
    std::vector<double> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) z[k] = d.signed_coeff(k - j) * r[j] / t[k];
        for (std::size_t i = j; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t k = j; k <= i; ++k) acc += g[i - k] * z[k];
            inv.at(i, j) = acc;
        }
    }
    return inv;
}

Triangle multiply(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "triangle sizes differ");
    const std::size_t n = a.size();
    Triangle out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (std::size_t k = j; k <= i; ++k) acc += a(i, k) * b(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

std::vector<double> apply(const Triangle& t, std::span<const double> x, Summation mode) {
    if (x.size() != t.size()) {
        throw Error(ErrorCode::dimension_mismatch, "triangle apply: vector length mismatch");
    }
    std::vector<double> y(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        Accumulator acc(mode);
        const auto row = t.row(i);
        for (std::size_t k = 0; k <= i; ++k) acc.add(row[k] * x[k]);
        y[i] = acc.value();
    }
    return y;
}

Triangle invert(const Triangle& t) {
    if (!t.invertible()) throw Error(ErrorCode::not_invertible, "zero on the diagonal");
    const std::size_t n = t.size();
    Triangle inv(n);
    for (std::size_t j = 0; j < n; ++j) {
        inv.at(j, j) = 1.0 / t(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t k = j; k < i; ++k) acc += t(i, k) * inv(k, j);
            inv.at(i, j) = -acc / t(i, i);
        }
    }
    return inv;
}

double max_abs_diff(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "triangle sizes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k <= i; ++k) m = std::max(m, std::abs(a(i, k) - b(i, k)));
    }
    return m;
}

double inf_norm(const Triangle& t) {
    double m = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        double s = 0.0;
        for (double v : t.row(i)) s += std::abs(v);
        m = std::max(m, s);
    }
    return m;
}

} // namespace seqspace
