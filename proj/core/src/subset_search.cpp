#include "seqspace/subset_search.hpp"

#include "seqspace/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace seqspace {

std::vector<double> best_interval_by_start(const DenseMatrix& vectors, std::size_t begin,
                                           std::size_t end, const SubsetFunctional& phi) {
    end = std::min(end, vectors.rows());
    if (begin >= end) return {};
    std::vector<double> best(end - begin, 0.0);
    std::vector<double> acc(vectors.cols());
    for (std::size_t i = begin; i < end; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        double b = -std::numeric_limits<double>::infinity();
        for (std::size_t j = i; j < end; ++j) {
            const auto row = vectors.row(j);
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += row[c];
            b = std::max(b, phi(acc));
        }
        best[i - begin] = b;
    }
    return best;
}

double exhaustive_window_sup(const DenseMatrix& vectors, std::size_t begin, std::size_t end,
                             const SubsetFunctional& phi) {
    end = std::min(end, vectors.rows());
    if (begin >= end) return 0.0;
    const std::size_t w = end - begin;
    if (w > 20) {
        throw Error(ErrorCode::invalid_argument, "exhaustive subset window wider than 20");
    }
    std::vector<double> acc(vectors.cols(), 0.0);
    std::vector<bool> in(w, false);
    double best = 0.0;
    const std::uint32_t count = std::uint32_t{1} << w;
    for (std::uint32_t step = 1; step < count; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        const auto row = vectors.row(begin + bit);
        const double sign = in[bit] ? -1.0 : 1.0;
        in[bit] = !in[bit];
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += sign * row[c];
        best = std::max(best, phi(acc));
    }
    return best;
}

double subset_sup(const DenseMatrix& vectors, std::size_t begin, std::size_t end,
                  std::size_t window_begin, std::size_t width, const SubsetFunctional& phi) {
    end = std::min(end, vectors.rows());
    if (begin >= end) return 0.0;
    double best = 0.0;
    for (double b : best_interval_by_start(vectors, begin, end, phi)) best = std::max(best, b);
    const std::size_t wb = std::clamp(window_begin, begin, end);
    const std::size_t we = std::min(end, wb + width);
    return std::max(best, exhaustive_window_sup(vectors, wb, we, phi));
}

} // namespace seqspace
