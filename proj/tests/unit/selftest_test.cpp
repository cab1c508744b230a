#include "seqspace/error.hpp"
#include "seqspace/selftest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

using namespace seqspace;

namespace {

const SelftestItem* find_item(const SelftestReport& r, const std::string& name) {
    const auto it = std::find_if(r.items.begin(), r.items.end(),
                                 [&](const SelftestItem& i) { return i.name == name; });
    return it == r.items.end() ? nullptr : &*it;
}

} // namespace

TEST(Selftest, AllItemsPassAtDefaultSize) {
    const auto r = run_selftest();
    EXPECT_EQ(r.n, 32u);
    EXPECT_GE(r.items.size(), 30u);
    for (const auto& item : r.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
    EXPECT_TRUE(r.all_passed());
}

TEST(Selftest, CorruptedCoefficientsAreCaught) {
    SelftestHooks hooks;
    hooks.d_coeffs = [](std::span<const double> s, std::size_t n) {
        auto d = d_coeffs(s, n);
        if (d.d.size() > 2) d.d[2] *= 1.0 + 1e-6;
        return d;
    };
    const auto r = run_selftest(16, hooks);
    EXPECT_FALSE(r.all_passed());
    const auto* item = find_item(r, "d_coeffs matches the determinant formula");
    ASSERT_NE(item, nullptr);
    EXPECT_FALSE(item->passed);
}

TEST(Selftest, SmallestSizeIsFast) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_selftest(4);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_TRUE(r.all_passed());
    EXPECT_LT(elapsed, std::chrono::seconds(1));
}

TEST(Selftest, RejectsTinySize) {
    try {
        run_selftest(3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
}
