#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqspace {

/// Generating data (r, s, t, u, v) of the space X(r, s, t, p; B), truncated to N terms.
///
/// Invariants, checked at construction: r_n != 0 and t_n != 0 for n < N,
/// s_0 != 0, u != 0, v != 0.
class ParamSet {
public:
    std::size_t size() const { return r_.size(); }
    std::span<const double> r() const { return r_; }
    std::span<const double> s() const { return s_; }
    std::span<const double> t() const { return t_; }
    double u() const { return u_; }
    double v() const { return v_; }

    /// Same generating data truncated to fewer terms.
    ParamSet truncated(std::size_t n) const;

private:
    friend ParamSet make_paramset(std::span<const double>, std::span<const double>,
                                  std::span<const double>, double, double, std::size_t);
    ParamSet() = default;

    std::vector<double> r_, s_, t_;
    double u_ = 1.0;
    double v_ = -1.0;
};

/// Validates and copies the first N terms of r, s, t.
/// Throws LengthMismatch for short sequences, ZeroEntry for any invariant violation.
ParamSet make_paramset(std::span<const double> r, std::span<const double> s,
                       std::span<const double> t, double u, double v, std::size_t n);

enum class PresetKind { euler, riesz, lambda_seq, cesaro_alpha, basarir_kara, identity_like };

std::string_view to_string(PresetKind kind);
std::optional<PresetKind> parse_preset_kind(std::string_view name);

/// Descriptor for the named instantiations of the generalized-means family.
///
///  - euler(alpha):        r_n = 1/n!, t_n = alpha^n/n!, s_n = (1-alpha)^n/n!, 0 < alpha < 1
///  - riesz(q):            t = q, s = e, r_n = sum_{k<=n} q_k (q defaults to e)
///  - lambda_seq(lambda):  r_n = lambda_n, t_n = lambda_n - lambda_{n-1}, s = e.
///                         lambda must be strictly increasing and positive; the convention
///                         lambda_{-1} = 0 is used, so t_0 = lambda_0.
///  - cesaro_alpha(alpha): r_n = n + 1, t_n = 1 + alpha^n, s = e, 0 < alpha < 1
///  - basarir_kara(r', s'): r_n = 1/r'_n, t_n = s'_n, s = e
///  - identity_like:       r = t = e, s = e_0, so A(r, s, t) = I
struct Preset {
    PresetKind kind = PresetKind::identity_like;
    double alpha = 0.5;
    std::vector<double> seq1;  // q (riesz), lambda (lambda_seq), r' (basarir_kara)
    std::vector<double> seq2;  // s' (basarir_kara)
};

/// Builds the ParamSet of a preset. Throws InvalidPresetParam on out-of-range parameters.
ParamSet make_preset(const Preset& preset, std::size_t n, double u = 1.0, double v = -1.0);

/// Just the (r, s, t) sequences of a preset, without u, v validation.
struct GeneratingSequences {
    std::vector<double> r, s, t;
};
GeneratingSequences preset_sequences(const Preset& preset, std::size_t n);

enum class ExponentRegime { above_one, at_most_one, mixed };

/// Maddox exponent sequence p = (p_k) with H = sup p_k, M = max(1, H).
class ExponentSeq {
public:
    /// Throws InvalidArgument unless every p_k > 0 and finite; LengthMismatch if shorter than n.
    ExponentSeq(std::span<const double> p, std::size_t n);
    static ExponentSeq constant(double p, std::size_t n);

    std::size_t size() const { return p_.size(); }
    std::span<const double> values() const { return p_; }
    double operator[](std::size_t k) const { return p_[k]; }
    double H() const { return h_; }
    double M() const { return m_; }
    double min() const { return min_; }

    /// p_k/(p_k-1) for p_k > 1, +inf for p_k == 1, nullopt (undefined) for p_k < 1.
    std::optional<double> conjugate(std::size_t k) const;
    /// All conjugates; throws ExponentRegime unless every p_k > 1.
    std::vector<double> conjugates() const;

    ExponentRegime regime() const;
    bool is_constant() const;

private:
    std::vector<double> p_;
    double h_ = 0.0;
    double m_ = 1.0;
    double min_ = 0.0;
};

} // namespace seqspace
