#include "seqspace/oracle.hpp"

#include "seqspace/error.hpp"

#include <cmath>

namespace seqspace::oracle {

namespace {

double signed_pow(double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); }

/// D_0 .. D_{n-1} read off the first column of the generic inverse of the Toeplitz
/// triangle with entries s_{i-j}: that column is (-1)^i D_i.
std::vector<double> d_by_inversion(std::span<const double> s, std::size_t n) {
    DenseMatrix toeplitz(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) toeplitz(i, j) = s[i - j];
    }
    const auto inv = invert_lower(toeplitz);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (i % 2 == 0) ? inv(i, 0) : -inv(i, 0);
    return d;
}

/// (-1)^m D_m.
double sd(const std::vector<double>& d, std::size_t m) { return (m % 2 == 0) ? d[m] : -d[m]; }

double g(double u, double v, std::size_t e) { return signed_pow(-v, e) / signed_pow(u, e + 1); }

double sample_magnitude(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::bernoulli_distribution sign(0.5);
    const double m = mag(rng);
    return sign(rng) ? m : -m;
}

} // namespace

long double cofactor_determinant(const std::vector<std::vector<long double>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1.0L;
    if (n == 1) return m[0][0];
    long double det = 0.0L;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0.0L) continue;
        std::vector<std::vector<long double>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long double> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) row.push_back(m[i][j]);
            }
            minor.push_back(std::move(row));
        }
        const long double sign = (col % 2 == 0) ? 1.0L : -1.0L;
        det += sign * m[0][col] * cofactor_determinant(minor);
    }
    return det;
}

double d_by_determinant(std::span<const double> s, std::size_t n) {
    const long double s0 = s[0];
    if (n == 0) return static_cast<double>(1.0L / s0);
    std::vector<std::vector<long double>> m(n, std::vector<long double>(n, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j <= i + 1) m[i][j] = s[i + 1 - j];
        }
    }
    long double scale = 1.0L;
    for (std::size_t i = 0; i <= n; ++i) scale *= s0;
    return static_cast<double>(cofactor_determinant(m) / scale);
}

DenseMatrix ab_by_product(const ParamSet& params) {
    const std::size_t n = params.size();
    DenseMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            a(i, k) = params.s()[i - k] * params.t()[k] / params.r()[i];
        }
        b(i, i) = params.u();
        if (i > 0) b(i, i - 1) = params.v();
    }
    return multiply(a, b);
}

DenseMatrix invert_lower(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorCode::dimension_mismatch, "matrix is not square");
    DenseMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = col; i < n; ++i) {
            double acc = (i == col) ? 1.0 : 0.0;
            for (std::size_t k = col; k < i; ++k) acc -= m(i, k) * inv(k, col);
            if (m(i, i) == 0.0) throw Error(ErrorCode::not_invertible, "zero diagonal");
            inv(i, col) = acc / m(i, i);
        }
    }
    return inv;
}

std::vector<double> solve_lower(const DenseMatrix& l, std::span<const double> y) {
    const std::size_t n = l.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = y[i];
        for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * x[k];
        x[i] = acc / l(i, i);
    }
    return x;
}

std::vector<double> forward_by_matrix(const ParamSet& params, std::span<const double> x) {
    return apply(ab_by_product(params), x.first(params.size()));
}

std::vector<double> inverse_direct(const ParamSet& params, std::span<const double> y) {
    const std::size_t n = params.size();
    const auto d = d_by_inversion(params.s(), n);
    const double u = params.u(), v = params.v();
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = j; k <= i; ++k) {
                acc += g(u, v, i - k) * sd(d, k - j) / params.t()[k] * params.r()[j] * y[j];
            }
        }
        x[i] = acc;
    }
    return x;
}

std::vector<double> basis_closed_form(std::span<const double> r_prime,
                                      std::span<const double> s_prime, double u, double v,
                                      std::size_t j, std::size_t n) {
    std::vector<double> b(n, 0.0);
    for (std::size_t i = j; i < n; ++i) {
        if (i == j) {
            b[i] = 1.0 / (u * r_prime[i] * s_prime[i]);
            continue;
        }
        const std::size_t e = i - j;
        const double sign = (e % 2 == 0) ? 1.0 : -1.0;
        b[i] = sign / r_prime[j] *
               (signed_pow(v, e) / signed_pow(u, e + 1) / s_prime[j] +
                signed_pow(v, e - 1) / signed_pow(u, e) / s_prime[j + 1]);
    }
    return b;
}

std::vector<double> basis_minus_one_direct(const ParamSet& params) {
    const std::size_t n = params.size();
    const auto d = d_by_inversion(params.s(), n);
    const double u = params.u(), v = params.v();
    std::vector<double> b(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = j; k <= i; ++k) {
                acc += g(u, v, i - k) * sd(d, k - j) / params.t()[k] * params.r()[j];
            }
        }
        b[i] = acc;
    }
    return b;
}

namespace {

/// The bracketed three-part expression for column k with inner sums running to `last`.
double three_part(const ParamSet& params, const std::vector<double>& d, std::span<const double> a,
                  std::size_t k, std::size_t last) {
    const double u = params.u(), v = params.v();
    const auto t = params.t();
    double acc = a[k] / (u * params.s()[0] * t[k]);
    for (std::size_t j = k; j <= k + 1 && j <= last; ++j) {
        double inner = 0.0;
        for (std::size_t l = k + 1; l <= last; ++l) inner += g(u, v, l - j) * a[l];
        acc += sd(d, j - k) / t[j] * inner;
    }
    for (std::size_t j = k + 2; j <= last; ++j) {
        double inner = 0.0;
        for (std::size_t l = j; l <= last; ++l) inner += g(u, v, l - j) * a[l];
        acc += sd(d, j - k) / t[j] * inner;
    }
    return params.r()[k] * acc;
}

} // namespace

DenseMatrix e_kernel_direct(const ParamSet& params, std::span<const double> a) {
    const std::size_t n = params.size();
    const auto d = d_by_inversion(params.s(), n);
    DenseMatrix e(n, n);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= row; ++k) e(row, k) = three_part(params, d, a, k, row);
    }
    return e;
}

std::vector<double> tilde_direct(const ParamSet& params, std::span<const double> a) {
    const std::size_t n = params.size();
    const auto d = d_by_inversion(params.s(), n);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = three_part(params, d, a, k, n - 1);
    return out;
}

DenseMatrix tilde_by_product(const ParamSet& params, const DenseMatrix& a) {
    return multiply(a, invert_lower(ab_by_product(params)));
}

namespace {

DenseMatrix abs_inverse(const ParamSet& params) {
    const std::size_t n = params.size();
    const auto d = d_by_inversion(params.s(), n);
    const double u = params.u(), v = params.v();
    DenseMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
            double acc = 0.0;
            for (std::size_t j = l; j <= k; ++j) {
                acc += std::abs(g(u, v, k - j) * d[j - l] * params.r()[l] / params.t()[j]);
            }
            out(k, l) = acc;
        }
    }
    return out;
}

} // namespace

std::vector<double> partial_sum_scale(const ParamSet& params, std::span<const double> a,
                                      std::span<const double> y) {
    const std::size_t n = params.size();
    const auto inv = abs_inverse(params);
    std::vector<double> out(n);
    double run = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double xk = 0.0;
        for (std::size_t l = 0; l <= k; ++l) xk += inv(k, l) * std::abs(y[l]);
        run += std::abs(a[k]) * xk;
        out[k] = run;
    }
    return out;
}

std::vector<double> row_identity_scale(const ParamSet& params, const DenseMatrix& a,
                                       std::span<const double> y) {
    const std::size_t n = params.size();
    const auto inv = abs_inverse(params);
    std::vector<double> xabs(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l <= k; ++l) xabs[k] += inv(k, l) * std::abs(y[l]);
    }
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t row = 0; row < a.rows(); ++row) {
        for (std::size_t k = 0; k < n; ++k) out[row] += std::abs(a(row, k)) * xabs[k];
    }
    return out;
}

ParamSet random_paramset(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> r(n), s(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = sample_magnitude(rng, 0.1, 2.0);
        s[i] = sample_magnitude(rng, 0.1, 2.0);
        t[i] = sample_magnitude(rng, 0.1, 2.0);
    }
    const double u = sample_magnitude(rng, 0.1, 2.0);
    const double v = sample_magnitude(rng, 0.1, 2.0);
    return make_paramset(r, s, t, u, v, n);
}

ParamSet well_conditioned_paramset(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> r(n), s(n), t(n);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double tail = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        s[i] = unit(rng) * std::pow(0.5, static_cast<double>(i));
        tail += std::abs(s[i]);
    }
    s[0] = sample_magnitude(rng, 2.0 * tail + 0.5, 2.0 * tail + 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = sample_magnitude(rng, 0.5, 2.0);
        t[i] = sample_magnitude(rng, 0.5, 2.0);
    }
    const double u = sample_magnitude(rng, 0.5, 2.0);
    const double v = u * sample_magnitude(rng, 0.1, 1.0);
    return make_paramset(r, s, t, u, v, n);
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (auto& x : out) x = dist(rng);
    return out;
}

} // namespace seqspace::oracle
