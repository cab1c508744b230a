#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace seqspace {

enum class Summation { plain, compensated };

/// Running sum with an optional Neumaier compensation term.
class Accumulator {
public:
    explicit Accumulator(Summation mode = Summation::plain) : mode_(mode) {}

    void add(double term) {
        if (mode_ == Summation::plain) {
            sum_ += term;
            return;
        }
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            comp_ += (sum_ - t) + term;
        } else {
            comp_ += (term - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    Summation mode_;
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double sum(std::span<const double> xs, Summation mode = Summation::plain);
double dot(std::span<const double> a, std::span<const double> b,
           Summation mode = Summation::plain);

/// |x|^q with exact fast paths for q = 1 and q = 2.
inline double abs_pow(double x, double q) {
    const double ax = std::abs(x);
    if (q == 1.0) return ax;
    if (q == 2.0) return ax * ax;
    return std::pow(ax, q);
}

/// l_p norm for p >= 1; p = +inf gives the sup norm.
double lp_norm(std::span<const double> xs, double p);

/// Hölder conjugate: p/(p-1) for p > 1, +inf for p = 1. Throws ExponentRegime for p < 1.
double conjugate_exponent(double p);

double max_abs(std::span<const double> xs);

} // namespace seqspace
