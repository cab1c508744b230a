#pragma once

#include "seqspace/limits.hpp"
#include "seqspace/matrix.hpp"
#include "seqspace/params.hpp"
#include "seqspace/tolerances.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqspace {

/// The Grosse-Erdmann condition battery for matrix classes between Maddox spaces.
/// Each condition has a canonical label "4.4" ... "4.24" (see `condition_id`).
/// Quantifiers: F is a nonempty finite index set, L a positive integer, p' the conjugate of p.
enum class Condition {
    row_subset_pow,          // sup_F sup_k |sum_{n in F} a_nk|^p_k
    row_subset_conj,         // sup_F sum_k |sum_{n in F} a_nk / L|^p'_k, some L
    column_null,             // lim_n a_nk = 0 for every k
    entry_scaled_all,        // sup_{n,k} |a_nk L|^p_k, all L
    row_conj_all,            // sup_n sum_k |a_nk L|^p'_k, all L
    entry_pow,               // sup_{n,k} |a_nk|^p_k
    column_limit,            // lim_n a_nk = alpha_k exists for every k
    entry_dev_all,           // sup_{n,k} (|a_nk - alpha_k| L)^p_k, all L
    row_dev_conj_all,        // sup_n sum_k (|a_nk - alpha_k| L)^p'_k, all L
    entry_scaled_some,       // sup_{n,k} |a_nk / L|^p_k, some L
    column_subset_some,      // sup_F sum_n |sum_{k in F} a_nk L^(-1/p_k)|, some L
    row_sum_series,          // sum_n |sum_k a_nk|
    column_subset_all,       // sup_F sum_n |sum_{k in F} a_nk L^(1/p_k)|, all L
    row_weighted_some,       // sup_n sum_k |a_nk| L^(-1/p_k), some L
    row_sum_sup,             // sup_n |sum_k a_nk|
    row_weighted_all,        // sup_n sum_k |a_nk| L^(1/p_k), all L
    row_dev_weighted_some,   // sup_n sum_k |a_nk - alpha_k| L^(-1/p_k), some L
    row_sum_limit,           // lim_n sum_k a_nk = alpha exists
    row_weighted_all_c,      // sup_n sum_k |a_nk| L^(1/p_k), all L (l_inf -> c form)
    row_dev_weighted_null,   // lim_n sum_k |a_nk - alpha_k| L^(1/p_k) = 0, all L
    row_conj_some,           // sup_n sum_k |a_nk / L|^p'_k, some L
};

/// All 21 conditions in label order.
std::span<const Condition> all_conditions();
std::string_view condition_id(Condition c);
/// Throws UnknownCondition.
Condition parse_condition(std::string_view id);
/// True for conditions involving p'_k, which need p_k > 1 for every k.
bool needs_conjugate(Condition c);

/// Growing truncation schedule: powers of two from 8 below n, then n. For n < 8: {n/2, n}.
std::vector<std::size_t> default_schedule(std::size_t n);

/// One condition (or existence check) evaluated over a truncation schedule.
struct FinitenessReport {
    std::string condition_id;
    std::vector<std::size_t> truncations;
    std::vector<double> value_trace;
    Verdict verdict = Verdict::inconclusive;
    std::optional<int> witness_L;
    /// Verdict bounded for sup-type conditions; tail within tolerance of the required limit
    /// for lim-type conditions.
    bool holds = false;
    std::vector<std::string> notes;
};

FinitenessReport eval_condition(Condition c, const DenseMatrix& m, const ExponentSeq& p,
                                std::span<const std::size_t> schedule,
                                const Tolerances& tol = {});

enum class KernelKind { E_of_a, E_tilde_of_A, C_of_a };

struct DualKernel {
    KernelKind kind = KernelKind::E_of_a;
    DenseMatrix matrix;
};

/// E of the partial-sum identity sum_{k<=n} a_k x_k = (E y)_n with y = A(r,s,t;B) x:
/// e_nk = r_k sum_{j=k}^n c_{j-k} / t_j sum_{l=j}^n g_{l-j} a_l, with c = 1/s and
/// g_d = (-v)^d/u^(d+1). Throws LengthMismatch if a is shorter than N.
DualKernel build_E(const ParamSet& params, std::span<const double> a);

/// Row n is the same construction applied to row n of A with the inner sums running to N-1,
/// so sum_k a_nk x_k = sum_k e~_nk y_k. Throws DimensionMismatch unless A has N columns.
DualKernel build_E_tilde(const ParamSet& params, const DenseMatrix& a);

/// C with c_nk = (A(r,s,t;B)^{-1})_nk a_n, so a_n x_n = (C y)_n.
DualKernel build_C(const ParamSet& params, std::span<const double> a);

enum class DualKind { alpha, beta, gamma };
enum class SpaceKind { l, c0, c, linf };
enum class Outcome { pass, fail, inconclusive };

std::string_view to_string(DualKind kind);
std::string_view to_string(SpaceKind kind);
std::string_view to_string(Outcome outcome);
std::optional<DualKind> parse_dual_kind(std::string_view name);
std::optional<SpaceKind> parse_space_kind(std::string_view name);

struct DualReport {
    DualKind which = DualKind::beta;
    SpaceKind space = SpaceKind::l;
    std::vector<FinitenessReport> checks;
    /// pass when every check holds, fail when some check fails with a conclusive verdict.
    Outcome outcome = Outcome::inconclusive;
};

/// Membership of a in the alpha-, beta- or gamma-dual of X(r,s,t,p;B), X in {l, c0, c, linf}.
/// For X = l, a mixed exponent regime (some p_k <= 1 < others) throws ExponentRegime.
DualReport dual_membership(const ParamSet& params, std::span<const double> a, DualKind which,
                           const ExponentSeq& p, SpaceKind space = SpaceKind::l,
                           std::span<const std::size_t> schedule = {},
                           const Tolerances& tol = {});

enum class MappingTarget { linf, l1 };
std::string_view to_string(MappingTarget target);
std::optional<MappingTarget> parse_mapping_target(std::string_view name);

struct MappingReport {
    MappingTarget target = MappingTarget::linf;
    FinitenessReport kernel_check;
    /// Beta-membership outcome of each row (a_nk)_k.
    std::vector<Outcome> row_outcomes;
    Outcome outcome = Outcome::inconclusive;
};

/// A in (l(r,s,t,p;B), Y) for Y = l_inf or l_1, decided on the kernel E~ plus the
/// beta-membership of every row of A. Rows at or beyond the next-to-last truncation affect
/// the outcome only when they fail.
MappingReport mapping_check(const ParamSet& params, const DenseMatrix& a, MappingTarget target,
                            const ExponentSeq& p, std::span<const std::size_t> schedule = {},
                            const Tolerances& tol = {});

struct YoungCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds() const { return lhs <= rhs; }
};

/// |ab| against T (|a/T|^p' + |b|^p) for T > 0 and p > 1.
YoungCheck young_bound(double a, double b, double T, double p);

} // namespace seqspace
