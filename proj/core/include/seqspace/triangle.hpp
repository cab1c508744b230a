#pragma once

#include "seqspace/matrix.hpp"
#include "seqspace/numeric.hpp"
#include "seqspace/params.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace seqspace {

/// Truncated N x N lower-triangular matrix, stored densely row by row
/// (row n holds entries k = 0..n). Entries above the diagonal are zero.
class Triangle {
public:
    Triangle() = default;
    explicit Triangle(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

    static Triangle identity(std::size_t n);
    /// Throws DimensionMismatch if the matrix is not square or has nonzeros above the diagonal.
    static Triangle from_dense(const DenseMatrix& m);

    std::size_t size() const { return n_; }

    double operator()(std::size_t n, std::size_t k) const {
        return k > n ? 0.0 : packed_[offset(n) + k];
    }
    /// Mutable access; requires k <= n.
    double& at(std::size_t n, std::size_t k) { return packed_[offset(n) + k]; }

    /// Row n, entries k = 0..n.
    std::span<const double> row(std::size_t n) const { return {packed_.data() + offset(n), n + 1}; }
    std::span<double> row(std::size_t n) { return {packed_.data() + offset(n), n + 1}; }

    /// True when every diagonal entry is nonzero.
    bool invertible() const;

    DenseMatrix to_dense() const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    static std::size_t offset(std::size_t n) { return n * (n + 1) / 2; }

    std::size_t n_ = 0;
    std::vector<double> packed_;
};

/// Coefficients D_n^(s) of the inverse of A(r, s, t).
///
/// Computed from the reciprocal power series c = 1/s: c_0 = 1/s_0,
/// c_n = -(1/s_0) sum_{j=1}^n s_j c_{n-j}, and D_n = (-1)^n c_n.
struct DCoeffs {
    std::vector<double> d;

    std::size_t size() const { return d.size(); }
    /// (-1)^n D_n, i.e. the n-th coefficient of 1/s(z).
    double signed_coeff(std::size_t n) const { return (n % 2 == 0) ? d[n] : -d[n]; }
};

DCoeffs d_coeffs(std::span<const double> s, std::size_t n);
DCoeffs d_coeffs(const ParamSet& params);

/// g_d = (-v)^d / u^(d+1), d = 0..n-1: the entries of B(u, v)^{-1} by distance from the
/// diagonal. Built by a running product.
std::vector<double> band_inverse_factors(double u, double v, std::size_t n);

/// B(u, v): diagonal u, subdiagonal v. Exposes the two-band fast paths.
struct Bidiagonal {
    double u = 1.0;
    double v = -1.0;
    std::size_t n = 0;

    std::vector<double> apply(std::span<const double> x) const;
    /// Solves B x = y by forward substitution.
    std::vector<double> solve(std::span<const double> y) const;
    Triangle to_triangle() const;
    /// Closed-form inverse, entry (n, k) = (-v)^(n-k) / u^(n-k+1).
    Triangle inverse() const;
};

Bidiagonal bidiagonal(const ParamSet& params);

/// A(r, s, t): entry (n, k) = s_{n-k} t_k / r_n.
Triangle build_A(const ParamSet& params);
Triangle build_B(const ParamSet& params);
/// A(r, s, t; B) = A(r, s, t) B(u, v) in closed form.
Triangle build_AB(const ParamSet& params);
/// Inverse of A(r, s, t): entry (n, k) = (-1)^(n-k) D_{n-k} r_k / t_n.
Triangle invert_A(const ParamSet& params);
/// Inverse of A(r, s, t; B): entry (n, j) = sum_{k=j}^n (-1)^(k-j) g_{n-k} D_{k-j} r_j / t_k.
Triangle invert_AB(const ParamSet& params);

Triangle multiply(const Triangle& a, const Triangle& b);
std::vector<double> apply(const Triangle& t, std::span<const double> x,
                          Summation mode = Summation::plain);

/// Generic inversion by forward substitution (column by column). Throws NotInvertible.
Triangle invert(const Triangle& t);

double max_abs_diff(const Triangle& a, const Triangle& b);
/// Max row 1-norm.
double inf_norm(const Triangle& t);

} // namespace seqspace
