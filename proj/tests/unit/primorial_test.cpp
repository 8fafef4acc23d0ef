#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "psirh/arith.hpp"
#include "psirh/constants.hpp"
#include "psirh/criteria.hpp"
#include "psirh/errors.hpp"
#include "psirh/primorial.hpp"

using namespace psirh;

namespace {

PrimorialStats stats_at(std::uint64_t n) {
    const std::uint64_t idx[] = {n};
    return stats_stream(n, idx).at(0);
}

} // namespace

TEST(PrimorialStatsTest, IndexTen) {
    const auto s = stats_at(10);
    EXPECT_EQ(s.prime, 29u);
    EXPECT_NEAR(s.theta.value(), 22.5903945301156562, 1e-14);
    EXPECT_NEAR(s.f_value, -1.675651, 1e-6);
    EXPECT_NEAR(s.psi_ratio(), 3.87688638523, 1e-10);
    EXPECT_NEAR(s.loglogN, std::log(s.theta.value()), 1e-15);
    EXPECT_NEAR(s.mertens_ratio, 1.151335, 1e-6);
}

TEST(PrimorialStatsTest, TableTwoValues) {
    const std::uint64_t idx[] = {3, 10, 100, 1000, 10'000, 100'000};
    const double printed[] = {0.22, -1.67, -4.24, -6.23, -8.06, -9.83};
    const double oracle_f[] = {0.219740, -1.675651, -4.237629, -6.232399, -8.062546, -9.827964};
    const auto s = stats_stream(100'000, idx);
    ASSERT_EQ(s.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(s[i].index, idx[i]);
        EXPECT_NEAR(s[i].f_value, printed[i], 0.01) << idx[i];
        EXPECT_NEAR(s[i].f_value, oracle_f[i], 1e-6) << idx[i];
    }
}

TEST(PrimorialStatsTest, LogSpaceMatchesExactRatio) {
    std::uint64_t primorial = 1;
    std::uint64_t k = 0;
    for_each_primorial(14, [&](const PrimorialStats& s) {
        primorial *= s.prime;
        ++k;
        const u128 psi = dedekind_psi(primorial);
        const long double exact = static_cast<long double>(psi) / static_cast<long double>(primorial);
        EXPECT_NEAR(s.psi_ratio() / static_cast<double>(exact), 1.0, 1e-14) << k;
        EXPECT_NEAR(s.f_value, dedekind_f(primorial).value, 1e-10) << k;
        EXPECT_NEAR(s.f_value, robin_g(primorial).value, 1e-10) << k;
    });
    EXPECT_EQ(k, 14u);
}

TEST(Mertens, ValuesAndConvergence) {
    EXPECT_NEAR(mertens_ratio(10), 1.15133524969955, 1e-12);
    double prev = 1.0;
    for (std::uint64_t n : {10u, 100u, 1000u, 10'000u, 100'000u}) {
        const double dev = std::abs(mertens_ratio(n) - Constants::e_gamma_over_zeta2);
        EXPECT_LT(dev, prev) << n;
        prev = dev;
    }
    EXPECT_THROW(mertens_ratio(1), DomainError);
}

TEST(FtildeRatio, DeviationMatchesOracle) {
    EXPECT_NEAR(ftilde_ratio_deviation(10) / -0.0125631546955, 1.0, 1e-3);
    EXPECT_NEAR(ftilde_ratio_deviation(1000) / -1.98672097232e-6, 1.0, 1e-3);
    EXPECT_NEAR(ftilde_ratio_deviation(100'000) / -7.86961015292e-10, 1.0, 1e-3);
    EXPECT_THROW(ftilde_ratio_deviation(1), DomainError);
}

TEST(KRatio, Examples) {
    EXPECT_NEAR(k_ratio(10, EngineConfig{}), 0.938791, 1e-6);
    EXPECT_NEAR(k_ratio(100, EngineConfig{}), 1.002305, 1e-6);
    EXPECT_NEAR(k_ratio(1000, EngineConfig{}), 1.0037825, 1e-7);
    EXPECT_NEAR(k_ratio(100'000, EngineConfig{}), 1.00044694, 1e-8);
    EXPECT_EQ(k_ratio(29, 31), k_ratio(10, EngineConfig{}));
    EXPECT_THROW(k_ratio(6, EngineConfig{}), DomainError);
}

TEST(Bounds, ThresholdIndexAndRhs) {
    EXPECT_EQ(first_bound_index(), 2263u);
    EXPECT_NEAR(f_primorial_bound_rhs(20011), -6.89, 0.01);
    EXPECT_NEAR(Constants::e_gamma * (1.0 / Constants::zeta2 - 1.0), -0.698, 0.001);
}

TEST(Bounds, PassOnModestRange) {
    const auto [lower, upper] = check_primorial_bounds(2263, 20'000);
    EXPECT_TRUE(lower.pass);
    EXPECT_TRUE(upper.pass);
    EXPECT_EQ(lower.cases_checked, 20'000u - 2263u + 1u);
    EXPECT_GT(lower.worst_margin, 0.0);
    EXPECT_EQ(check_loglogN_lower_bound(2263, 5000).pass, true);
    EXPECT_EQ(check_f_primorial_bound(2263, 5000).pass, true);
}

TEST(Bounds, RejectSmallPrimes) {
    EXPECT_THROW(check_loglogN_lower_bound(2262, 3000), DomainError);
    EXPECT_THROW(check_f_primorial_bound(10, 3000), DomainError);
    EXPECT_THROW(check_primorial_bounds(3000, 2999), DomainError);
}

TEST(Tables, FormatFixedIsHalfEven) {
    EXPECT_EQ(format_fixed(0.125, 2), "0.12");
    EXPECT_EQ(format_fixed(0.375, 2), "0.38");
    EXPECT_EQ(format_fixed(-0.001, 2), "0.00");
    EXPECT_EQ(format_fixed(-1.675651, 2), "-1.68");
}

TEST(Tables, TableTwo) {
    const std::uint64_t idx[] = {3, 10, 100};
    const auto t = table2(idx);
    const auto& row = t.row("f_value");
    ASSERT_EQ(row.cells.size(), 3u);
    EXPECT_EQ(row.cells[0].printed, "0.22");
    EXPECT_EQ(row.cells[2].printed, "-4.24");
    EXPECT_THROW(t.row("nope"), std::out_of_range);
}

TEST(Tables, TableOneSmall) {
    const std::uint64_t idx[] = {10, 1000};
    const auto t = table1(idx);
    EXPECT_EQ(t.row("theta_over_p").cells[0].printed, "0.779");
    EXPECT_NEAR(t.row("ftilde_ratio").cells[1].value, 0.99999801327903, 1e-14);
    EXPECT_EQ(t.row("k_ratio").cells[1].printed, "1.00378");
    EXPECT_EQ(table1_decimals(0, 100'000, 6), 5);
    EXPECT_EQ(table1_decimals(1, 10'000'000, 6), 14);
    EXPECT_EQ(table1_decimals(0, 77, 6), 6);
    const std::uint64_t bad[] = {6};
    EXPECT_THROW(table1(bad), DomainError);
}
