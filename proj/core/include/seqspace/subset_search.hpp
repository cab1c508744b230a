#pragma once

#include "seqspace/matrix.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace seqspace {

/// Functional applied to the aggregated vector sum_{i in F} v_i.
using SubsetFunctional = std::function<double(std::span<const double>)>;

/// For each start index i in [begin, end), the largest value of phi over the contiguous sets
/// {i, ..., j}, j < end. Candidates are the rows of `vectors`.
std::vector<double> best_interval_by_start(const DenseMatrix& vectors, std::size_t begin,
                                           std::size_t end, const SubsetFunctional& phi);

/// Exact maximum of phi over every nonempty subset of the rows [begin, end), enumerated in
/// Gray-code order so each step adds or removes a single row. Requires end - begin <= 20.
double exhaustive_window_sup(const DenseMatrix& vectors, std::size_t begin, std::size_t end,
                             const SubsetFunctional& phi);

/// Lower bound of sup_F phi(sum_{i in F} v_i) over nonempty finite F within [begin, end):
/// the maximum over all contiguous sets and over all subsets of the window
/// [window_begin, window_begin + width) clipped to [begin, end).
double subset_sup(const DenseMatrix& vectors, std::size_t begin, std::size_t end,
                  std::size_t window_begin, std::size_t width, const SubsetFunctional& phi);

} // namespace seqspace
