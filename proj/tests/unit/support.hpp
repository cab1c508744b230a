#pragma once

#include "seqspace/matrix.hpp"
#include "seqspace/params.hpp"
#include "seqspace/triangle.hpp"

#include <cmath>
#include <vector>

namespace seqspace::testing {

/// r = t = e, s = e_0: A(r,s,t) = I, so A(r,s,t;B) = B(u, v).
inline ParamSet unit_params(std::size_t n, double u = 1.0, double v = -1.0) {
    return make_preset({PresetKind::identity_like, 0.5, {}, {}}, n, u, v);
}

inline std::vector<double> geometric(std::size_t n, double ratio = 0.5) {
    std::vector<double> out(n);
    double x = 1.0;
    for (auto& e : out) {
        e = x;
        x *= ratio;
    }
    return out;
}

/// diag(w) A(r,s,t;B), whose Ã is diag(w).
inline DenseMatrix with_tilde_diagonal(const ParamSet& params, const std::vector<double>& w) {
    DenseMatrix a = build_AB(params).to_dense();
    for (std::size_t n = 0; n < a.rows(); ++n) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(n, k) *= w[n];
    }
    return a;
}

inline DenseMatrix lower_ones(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) m(i, k) = 1.0;
    }
    return m;
}

} // namespace seqspace::testing
