#pragma once

#include "seqspace/limits.hpp"
#include "seqspace/matrix.hpp"
#include "seqspace/params.hpp"
#include "seqspace/tolerances.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqspace {

/// Ã with A x = Ã y for y = A(r,s,t;B) x, together with column-limit estimates of Ã.
struct TildeMatrix {
    DenseMatrix matrix;
    ColumnLimits alpha_tilde;
    /// Largest |a_{n,N-1} (A(r,s,t;B)^{-1})_{N-1,k}| / |ã_nk|: the share of each entry carried
    /// by the last term kept before truncation.
    double max_tail_ratio = 0.0;
    /// Number of entries whose ratio exceeds tail_ratio_warn.
    std::size_t tail_warnings = 0;
};

/// Throws DimensionMismatch unless A has N columns.
TildeMatrix build_tilde(const ParamSet& params, const DenseMatrix& a, const Tolerances& tol = {});

/// ã for a single sequence a, so that sum_k a_k x_k = sum_k ã_k y_k.
std::vector<double> tilde_sequence(const ParamSet& params, std::span<const double> a);

/// ||a||* on l_p(r,s,t;B) = ||ã||_{p'}: the p'-norm for p > 1, the sup norm for p = 1.
/// Throws ExponentRegime for p < 1.
double dual_norm(const ParamSet& params, std::span<const double> a, double p);

enum class Compactness { compact, noncompact, inconclusive };
std::string_view to_string(Compactness c);

/// Verdict for a nonnegative tail value: compact at or below tol_zero, noncompact at or
/// above 10 * tol_zero, inconclusive in between.
Compactness classify_compactness(double tail, const Tolerances& tol = {});

struct MncEstimate {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> point;
    /// Sequence the estimate is read from (row norms or projection tails).
    std::vector<double> sequence;
    LimitEstimate trace;
    Compactness verdict = Compactness::inconclusive;
    std::vector<std::string> notes;
};

enum class MncTarget { c0, linf, c, l1_lp, lp_l1, lp_bv };
std::string_view to_string(MncTarget target);
std::optional<MncTarget> parse_mnc_target(std::string_view name);

/// A : l_p(r,s,t;B) -> c0, 1 < p < inf: ||L_A|| = limsup_n ||ã_n||_{p'}.
MncEstimate mnc_to_c0(const ParamSet& params, const DenseMatrix& a, double p,
                      const Tolerances& tol = {});
/// A : l_p(r,s,t;B) -> l_inf: 0 <= ||L_A|| <= limsup_n ||ã_n||_{p'}.
MncEstimate mnc_to_linf(const ParamSet& params, const DenseMatrix& a, double p,
                        const Tolerances& tol = {});
/// A : l_p(r,s,t;B) -> c: U/2 <= ||L_A|| <= U with U = limsup_n ||ã_n - α̃||_{p'}.
MncEstimate mnc_to_c(const ParamSet& params, const DenseMatrix& a, double p,
                     const Tolerances& tol = {});
/// A : l_1(r,s,t;B) -> l_p, 1 <= p < inf: lim_m sup_k (sum_{n>m} |ã_nk|^p)^{1/p}.
MncEstimate mnc_l1_to_lp(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol = {});
/// A : l_p(r,s,t;B) -> l_1, 1 < p < inf: S <= ||L_A|| <= 4 S with
/// S = lim_m sup_{F, min F > m} (sum_k |sum_{n in F} ã_nk|^{p'})^{1/p'}.
MncEstimate mnc_lp_to_l1(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol = {});
/// A : l_p(r,s,t;B) -> bv: the l_1 estimate applied to the row differences of Ã.
MncEstimate mnc_lp_to_bv(const ParamSet& params, const DenseMatrix& a, double p,
                         const Tolerances& tol = {});

/// Dispatch on target.
MncEstimate mnc_estimate(MncTarget target, const ParamSet& params, const DenseMatrix& a,
                         double p, const Tolerances& tol = {});

/// The same estimators evaluated on an explicit Ã.
MncEstimate mnc_to_c0_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol = {});
MncEstimate mnc_to_linf_from_tilde(const DenseMatrix& tilde, double p,
                                   const Tolerances& tol = {});
MncEstimate mnc_to_c_from_tilde(const DenseMatrix& tilde, double p, const Tolerances& tol = {});
MncEstimate mnc_l1_to_lp_from_tilde(const DenseMatrix& tilde, double p,
                                    const Tolerances& tol = {});
MncEstimate mnc_lp_to_l1_from_tilde(const DenseMatrix& tilde, double p,
                                    const Tolerances& tol = {});
MncEstimate mnc_lp_to_bv_from_tilde(const DenseMatrix& tilde, double p,
                                    const Tolerances& tol = {});

/// Row differences ã_n - ã_{n-1}, with ã_{-1} = 0.
DenseMatrix row_differences(const DenseMatrix& m);

enum class ChiSpace { lp, c0, c };

struct ChiEstimate {
    double lower = 0.0;
    double upper = 0.0;
    /// sup over the set of ||(I - P_m) x|| for m = 0 .. N/2 - 1.
    std::vector<double> sequence;
    LimitEstimate trace;
    std::vector<std::string> notes;
};

/// Hausdorff measure of a finite set through projection tails. For c the limit of each
/// point is the mean of its last basis_limit_window entries and the interval is [U/2, U].
ChiEstimate chi_of_set(std::span<const std::vector<double>> points, ChiSpace space, double p = 2.0,
                       const Tolerances& tol = {});

} // namespace seqspace
