#include "seqspace/params.hpp"

#include "seqspace/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace seqspace {

namespace {

void require_length(std::span<const double> xs, std::size_t n, const char* which) {
    if (xs.size() < n) {
        throw Error(ErrorCode::length_mismatch,
                    std::string("sequence '") + which + "' has " + std::to_string(xs.size()) +
                        " terms, need " + std::to_string(n));
    }
}

void require_nonzero(std::span<const double> xs, std::size_t n, const char* which) {
    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i] == 0.0 || !std::isfinite(xs[i])) throw ZeroEntry(i, which);
    }
}

[[noreturn]] void bad_preset(const std::string& msg) {
    throw Error(ErrorCode::invalid_preset_param, msg);
}

} // namespace

ParamSet make_paramset(std::span<const double> r, std::span<const double> s,
                       std::span<const double> t, double u, double v, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::length_mismatch, "truncation length must be positive");
    require_length(r, n, "r");
    require_length(s, n, "s");
    require_length(t, n, "t");
    require_nonzero(r, n, "r");
    require_nonzero(t, n, "t");
    if (s[0] == 0.0) throw ZeroEntry(0, "s");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(s[i])) {
            throw Error(ErrorCode::invalid_argument, "s contains a non-finite entry");
        }
    }
    if (u == 0.0) throw ZeroEntry(0, "u");
    if (v == 0.0) throw ZeroEntry(0, "v");

    ParamSet ps;
    ps.r_.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    ps.s_.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
    ps.t_.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n));
    ps.u_ = u;
    ps.v_ = v;
    return ps;
}

ParamSet ParamSet::truncated(std::size_t n) const {
    return make_paramset(r_, s_, t_, u_, v_, n);
}

std::string_view to_string(PresetKind kind) {
    switch (kind) {
    case PresetKind::euler: return "euler";
    case PresetKind::riesz: return "riesz";
    case PresetKind::lambda_seq: return "lambda_seq";
    case PresetKind::cesaro_alpha: return "cesaro_alpha";
    case PresetKind::basarir_kara: return "basarir_kara";
    case PresetKind::identity_like: return "identity_like";
    }
    return "unknown";
}

std::optional<PresetKind> parse_preset_kind(std::string_view name) {
    for (auto k : {PresetKind::euler, PresetKind::riesz, PresetKind::lambda_seq,
                   PresetKind::cesaro_alpha, PresetKind::basarir_kara,
                   PresetKind::identity_like}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

GeneratingSequences preset_sequences(const Preset& preset, std::size_t n) {
    GeneratingSequences g;
    g.r.resize(n);
    g.s.assign(n, 1.0);
    g.t.resize(n);

    switch (preset.kind) {
    case PresetKind::euler: {
        const double a = preset.alpha;
        if (!(a > 0.0 && a < 1.0)) bad_preset("euler requires 0 < alpha < 1");
        double factorial = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0) factorial *= static_cast<double>(k);
            const double kk = static_cast<double>(k);
            g.r[k] = 1.0 / factorial;
            g.t[k] = std::pow(a, kk) / factorial;
            g.s[k] = std::pow(1.0 - a, kk) / factorial;
        }
        break;
    }
    case PresetKind::riesz: {
        std::vector<double> q = preset.seq1;
        if (q.empty()) q.assign(n, 1.0);
        if (q.size() < n) bad_preset("riesz weights shorter than N");
        double run = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (q[k] == 0.0) bad_preset("riesz weights must be nonzero");
            run += q[k];
            if (run == 0.0) bad_preset("riesz partial sums must be nonzero");
            g.t[k] = q[k];
            g.r[k] = run;
        }
        break;
    }
    case PresetKind::lambda_seq: {
        const auto& lam = preset.seq1;
        if (lam.size() < n) bad_preset("lambda sequence shorter than N");
        double prev = 0.0;  // lambda_{-1} = 0 by convention
        for (std::size_t k = 0; k < n; ++k) {
            if (!(lam[k] > prev)) bad_preset("lambda must be positive and strictly increasing");
            g.r[k] = lam[k];
            g.t[k] = lam[k] - prev;
            prev = lam[k];
        }
        break;
    }
    case PresetKind::cesaro_alpha: {
        const double a = preset.alpha;
        if (!(a > 0.0 && a < 1.0)) bad_preset("cesaro_alpha requires 0 < alpha < 1");
        double pw = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            g.r[k] = static_cast<double>(k + 1);
            g.t[k] = 1.0 + pw;
            pw *= a;
        }
        break;
    }
    case PresetKind::basarir_kara: {
        const auto& rp = preset.seq1;
        const auto& sp = preset.seq2;
        if (rp.size() < n || sp.size() < n) bad_preset("basarir_kara needs r' and s' of length N");
        for (std::size_t k = 0; k < n; ++k) {
            if (rp[k] == 0.0 || sp[k] == 0.0) bad_preset("basarir_kara needs nonzero r', s'");
            g.r[k] = 1.0 / rp[k];
            g.t[k] = sp[k];
        }
        break;
    }
    case PresetKind::identity_like: {
        std::fill(g.r.begin(), g.r.end(), 1.0);
        std::fill(g.t.begin(), g.t.end(), 1.0);
        std::fill(g.s.begin(), g.s.end(), 0.0);
        if (n > 0) g.s[0] = 1.0;
        break;
    }
    }
    return g;
}

ParamSet make_preset(const Preset& preset, std::size_t n, double u, double v) {
    auto g = preset_sequences(preset, n);
    return make_paramset(g.r, g.s, g.t, u, v, n);
}

ExponentSeq::ExponentSeq(std::span<const double> p, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::length_mismatch, "exponent sequence must be nonempty");
    if (p.size() < n) {
        throw Error(ErrorCode::length_mismatch,
                    "exponent sequence has " + std::to_string(p.size()) + " terms, need " +
                        std::to_string(n));
    }
    p_.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
    min_ = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(p_[k] > 0.0) || !std::isfinite(p_[k])) {
            throw Error(ErrorCode::invalid_argument,
                        "p_" + std::to_string(k) + " must be finite and strictly positive");
        }
        h_ = std::max(h_, p_[k]);
        min_ = std::min(min_, p_[k]);
    }
    m_ = std::max(1.0, h_);
}

ExponentSeq ExponentSeq::constant(double p, std::size_t n) {
    std::vector<double> v(n, p);
    return ExponentSeq(v, n);
}

std::optional<double> ExponentSeq::conjugate(std::size_t k) const {
    const double pk = p_[k];
    if (pk > 1.0) return pk / (pk - 1.0);
    if (pk == 1.0) return std::numeric_limits<double>::infinity();
    return std::nullopt;
}

std::vector<double> ExponentSeq::conjugates() const {
    std::vector<double> out(p_.size());
    for (std::size_t k = 0; k < p_.size(); ++k) {
        if (!(p_[k] > 1.0)) {
            throw Error(ErrorCode::exponent_regime,
                        "conjugate exponents need p_k > 1; p_" + std::to_string(k) + " = " +
                            std::to_string(p_[k]));
        }
        out[k] = p_[k] / (p_[k] - 1.0);
    }
    return out;
}

ExponentRegime ExponentSeq::regime() const {
    const bool any_above = h_ > 1.0;
    const bool any_at_most = min_ <= 1.0;
    if (any_above && any_at_most) return ExponentRegime::mixed;
    return any_above ? ExponentRegime::above_one : ExponentRegime::at_most_one;
}

bool ExponentSeq::is_constant() const { return h_ == min_; }

} // namespace seqspace
