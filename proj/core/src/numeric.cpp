#include "seqspace/numeric.hpp"

#include "seqspace/error.hpp"

#include <algorithm>
#include <limits>

namespace seqspace {

double sum(std::span<const double> xs, Summation mode) {
    Accumulator acc(mode);
    for (double x : xs) acc.add(x);
    return acc.value();
}

double dot(std::span<const double> a, std::span<const double> b, Summation mode) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::dimension_mismatch, "dot: operand lengths differ");
    }
    Accumulator acc(mode);
    for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

double lp_norm(std::span<const double> xs, double p) {
    if (std::isinf(p)) return max_abs(xs);
    if (!(p >= 1.0)) throw Error(ErrorCode::exponent_regime, "lp_norm requires p >= 1");
    double acc = 0.0;
    for (double x : xs) acc += abs_pow(x, p);
    if (p == 1.0) return acc;
    if (p == 2.0) return std::sqrt(acc);
    return std::pow(acc, 1.0 / p);
}

double conjugate_exponent(double p) {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (!(p > 1.0)) {
        throw Error(ErrorCode::exponent_regime, "conjugate exponent needs p >= 1");
    }
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

double max_abs(std::span<const double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

} // namespace seqspace
