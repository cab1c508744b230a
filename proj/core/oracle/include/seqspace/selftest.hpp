#pragma once

#include "seqspace/triangle.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace seqspace {

struct SelftestItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::size_t n = 0;
    std::vector<SelftestItem> items;
    bool all_passed() const;
};

/// Replaceable production entry points, so a fixture can check that the suite catches a
/// broken implementation.
struct SelftestHooks {
    std::function<DCoeffs(std::span<const double>, std::size_t)> d_coeffs;
};

/// Runs every oracle comparison at truncation n (at least 4).
SelftestReport run_selftest(std::size_t n = 32, const SelftestHooks& hooks = {},
                            std::uint64_t seed = 20240611);

} // namespace seqspace
