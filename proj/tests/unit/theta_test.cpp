#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "psirh/errors.hpp"
#include "psirh/theta.hpp"

using namespace psirh;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("psirh_theta_" + name + "_" + std::to_string(::getpid()));
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST(Theta, AtTen) {
    const auto t = theta_at(10);
    EXPECT_EQ(t.prime, 29u);
    EXPECT_NEAR(t.value(), 22.590394, 1e-6);
    EXPECT_NEAR(t.value(), 22.5903945301156562, 1e-14);
    EXPECT_NEAR(t.value() / 29.0, 0.779, 5e-4);
}

TEST(Theta, AgreesWithExactLogsAtTenThousand) {
    const auto primes = first_primes(10'000);
    oracle::Mp mp(256);
    const auto exact = mp.log_sum(primes, 50);
    const auto t = theta_at(10'000);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17e", t.value());
    EXPECT_LT(oracle::relative_difference(buf, exact), 1e-15) << buf << " vs " << exact;
}

TEST(Theta, PairHoldsThirtyDigitsOfTermSum) {
    // The accumulated pair reproduces the exact sum of the binary64 log terms.
    const auto primes = first_primes(100'000);
    std::vector<double> terms;
    terms.reserve(primes.size());
    for (auto p : primes) terms.push_back(std::log(static_cast<double>(p)));
    oracle::Mp mp;
    const auto exact = mp.sum_doubles(terms, 45);
    const auto t = theta_at(100'000);
    const auto ours = mp.sum_doubles({t.theta_hi, t.theta_lo}, 45);
    EXPECT_LT(oracle::relative_difference(ours, exact), 1e-30) << ours << " vs " << exact;
}

TEST(Theta, MonotoneAndBelowPrime) {
    double prev = 0.0;
    std::uint64_t count = 0;
    for_each_theta(1'000'000, [&](const ThetaPoint& t) {
        ASSERT_GT(t.value(), prev);
        ASSERT_LT(t.value(), static_cast<double>(t.prime));
        ASSERT_LE(std::abs(t.theta_lo), std::ldexp(std::abs(t.theta_hi), -52));
        prev = t.value();
        ++count;
    });
    EXPECT_EQ(count, 1'000'000u);
}

TEST(ThetaStream, StrideAndExtraIndices) {
    const auto pts = theta_stream(2000, 500);
    std::vector<std::uint64_t> idx;
    for (const auto& p : pts) idx.push_back(p.index);
    EXPECT_EQ(idx, (std::vector<std::uint64_t>{10, 500, 1000, 1500, 2000}));
    EXPECT_EQ(pts[0], theta_at(10));
    EXPECT_EQ(pts[2].prime, 7919u);
}

TEST(ThetaCacheFile, RoundTripIsBitExact) {
    const auto cache = build_theta_cache(3000, 1000);
    ASSERT_EQ(cache.points.size(), 3u);
    const auto path = temp_file("rt");
    cache_save(cache, path);
    const auto loaded = cache_load(path);
    EXPECT_EQ(loaded, cache);
    fs::remove(path);
}

TEST(ThetaCacheFile, ResumeMatchesStreaming) {
    const auto cache = build_theta_cache(20'000, 5'000);
    for (std::uint64_t n : {4'999u, 5'000u, 5'001u, 17'777u, 20'000u, 26'000u}) {
        EXPECT_EQ(theta_at(n, &cache), theta_at(n)) << n;
    }
}

TEST(ThetaCacheFile, RejectsOtherVersion) {
    const auto path = temp_file("v99");
    write_text(path, "psicache v99 stride=10\n");
    EXPECT_THROW(cache_load(path), IncompatibleCacheError);
    fs::remove(path);
}

TEST(ThetaCacheFile, TruncatedLineReportsLineNumber) {
    const auto cache = build_theta_cache(30, 10);
    const auto path = temp_file("trunc");
    cache_save(cache, path);
    std::string text;
    {
        std::ifstream in(path, std::ios::binary);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    write_text(path, text.substr(0, text.size() - 5));
    try {
        cache_load(path);
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    fs::remove(path);
}

TEST(ThetaCacheFile, MalformedRows) {
    const auto path = temp_file("bad");
    write_text(path, "psicache v1 stride=10\n10 29 0x1.6972p+4 zz\n");
    try {
        cache_load(path);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    write_text(path, "psicache v1 stride=10\n15 47 0x1p+4 0x0p+0\n");
    EXPECT_THROW(cache_load(path), ParseError);
    write_text(path, "psicache v1 stride=10\n20 71 0x1p+4 0x0p+0\n10 29 0x1p+4 0x0p+0\n");
    EXPECT_THROW(cache_load(path), ParseError);
    fs::remove(path);
}

TEST(HexFloat, RoundTrip) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int i = 0; i < 20000; ++i) {
        double x;
        const std::uint64_t b = bits(rng);
        std::memcpy(&x, &b, sizeof x);
        if (!std::isfinite(x)) continue;
        double y = 1.0;
        ASSERT_TRUE(parse_hex_float(format_hex_float(x), y)) << format_hex_float(x);
        ASSERT_EQ(std::memcmp(&x, &y, sizeof x), 0);
    }
    EXPECT_EQ(format_hex_float(3.0), "0x1.8p+1");
    double z;
    EXPECT_FALSE(parse_hex_float("1.5", z));
    EXPECT_FALSE(parse_hex_float("0x1.8p+1junk", z));
}
