#pragma once

#include "seqspace/matrix.hpp"
#include "seqspace/params.hpp"
#include "seqspace/triangle.hpp"

#include <cstddef>
#include <random>
#include <span>
#include <vector>

/// Reference evaluations used to check the production code paths. Each routine evaluates
/// a defining formula literally (std::pow powers, no shared recurrences) or by a generic
/// algorithm, and is intentionally slow.
namespace seqspace::oracle {

/// Cofactor expansion of a square matrix in long double.
long double cofactor_determinant(const std::vector<std::vector<long double>>& m);

/// D_n from the Toeplitz-Hessenberg determinant: det(M_n) / s_0^{n+1} with
/// M_n[i][j] = s_{i-j+1} (zero when i - j + 1 < 0); D_0 = 1/s_0.
double d_by_determinant(std::span<const double> s, std::size_t n);

/// Dense product A(r,s,t) B(u,v) from the entry formulas of each factor.
DenseMatrix ab_by_product(const ParamSet& params);

/// Column-by-column forward substitution on a dense lower-triangular matrix.
DenseMatrix invert_lower(const DenseMatrix& m);

/// Solves L x = y for dense lower-triangular L.
std::vector<double> solve_lower(const DenseMatrix& l, std::span<const double> y);

/// y = (A(r,s,t) B) x by a dense matrix-vector product.
std::vector<double> forward_by_matrix(const ParamSet& params, std::span<const double> x);

/// x_n = sum_{j<=n} sum_{k=j}^n (-1)^{k-j} (-v)^{n-k}/u^{n-k+1} D_{k-j}/t_k r_j y_j, with
/// powers from std::pow.
std::vector<double> inverse_direct(const ParamSet& params, std::span<const double> y);

/// Basis vector b^(j) for s = e, r_n = 1/r'_n, t_n = s'_n in the closed form
/// ((-1)^{n-j}/r'_j)(v^{n-j}/u^{n-j+1}/s'_j + v^{n-j-1}/u^{n-j}/s'_{j+1}) for j < n,
/// 1/(u r'_n s'_n) for j = n.
std::vector<double> basis_closed_form(std::span<const double> r_prime,
                                      std::span<const double> s_prime, double u, double v,
                                      std::size_t j, std::size_t n);

/// b^(-1) by its own double sum.
std::vector<double> basis_minus_one_direct(const ParamSet& params);

/// E from its three-part display: the (1/u) a_k/(s_0 t_k) term, the j in {k, k+1} terms with
/// inner sums from l = k+1, and the j >= k+2 terms with inner sums from l = j.
DenseMatrix e_kernel_direct(const ParamSet& params, std::span<const double> a);

/// ã for a single sequence from the same three-part display with the inner sums running to N-1.
std::vector<double> tilde_direct(const ParamSet& params, std::span<const double> a);

/// Ã = A (A(r,s,t;B))^{-1} with the inverse from generic forward substitution.
DenseMatrix tilde_by_product(const ParamSet& params, const DenseMatrix& a);

/// sum_{k<=n} |a_k| sum_{l<=k} |inverse entry (k,l)|_abs |y_l|, where the absolute inverse
/// entry is sum_j |g_{k-j}| |D_{j-l}| |r_l| / |t_j|. Bounds the magnitude of every term in
/// the partial-sum identity.
std::vector<double> partial_sum_scale(const ParamSet& params, std::span<const double> a,
                                      std::span<const double> y);

/// Row-wise scale of sum_k a_nk x_k: sum_k |a_nk| sum_l |inverse entry (k,l)|_abs |y_l|.
std::vector<double> row_identity_scale(const ParamSet& params, const DenseMatrix& a,
                                       std::span<const double> y);

/// Entries uniform in [-2, 2] with magnitude at least 0.1; u, v from the same law.
ParamSet random_paramset(std::mt19937_64& rng, std::size_t n);

/// Diagonally dominant s (|s_0| >= 2 sum_{j>0} |s_j|), |r_n|, |t_n| in [0.5, 2],
/// and 0.1 <= |v/u| <= 1. The inverse triangles stay well conditioned at N = 64.
ParamSet well_conditioned_paramset(std::mt19937_64& rng, std::size_t n);

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                  double hi = 1.0);

} // namespace seqspace::oracle
