#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "psirh/errors.hpp"
#include "psirh/sieve.hpp"

using namespace psirh;

namespace {

std::vector<std::uint64_t> naive_window(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n < hi; ++n) {
        if (oracle::is_prime_trial(n)) out.push_back(n);
    }
    return out;
}

} // namespace

TEST(SieveRange, PrimesBelowThirty) {
    const auto r = sieve_range(0, 30);
    const std::vector<std::uint64_t> want{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    EXPECT_EQ(r.primes, want);
    EXPECT_EQ(r.lo, 0u);
    EXPECT_EQ(r.hi, 30u);
}

TEST(SieveRange, EmptyWindow) {
    EXPECT_TRUE(sieve_range(30, 31).primes.empty());
    EXPECT_TRUE(sieve_range(24, 29).primes.empty());
    EXPECT_EQ(sieve_range(29, 30).primes, std::vector<std::uint64_t>{29});
}

TEST(SieveRange, WindowNearMillion) {
    EXPECT_EQ(sieve_range(1'000'000, 1'000'100).primes, naive_window(1'000'000, 1'000'100));
    EXPECT_EQ(sieve_range(999'900, 1'000'000).primes.back(), 999'983u);
}

TEST(SieveRange, RejectsBadWindows) {
    EXPECT_THROW(sieve_range(10, 10), DomainError);
    EXPECT_THROW(sieve_range(11, 10), DomainError);
    EXPECT_THROW(sieve_range(0, (std::uint64_t{1} << 63) + 1), DomainError);
    EXPECT_THROW(sieve_range(0, 1'000'000'000'001ULL), ResourceError);
    EngineConfig cfg;
    cfg.sieve_ceiling = 1000;
    EXPECT_THROW(sieve_range(0, 1001, cfg), ResourceError);
    EXPECT_NO_THROW(sieve_range(0, 1000, cfg));
}

TEST(SieveRange, MatchesEratosthenesOnRandomWindows) {
    const auto all = oracle::eratosthenes(2'000'000);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> start(0, 1'990'000), len(1, 9'000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t lo = start(rng), hi = lo + len(rng);
        std::vector<std::uint64_t> want;
        for (auto it = std::lower_bound(all.begin(), all.end(), lo); it != all.end() && *it < hi; ++it) {
            want.push_back(*it);
        }
        ASSERT_EQ(sieve_range(lo, hi).primes, want) << "[" << lo << ", " << hi << ")";
    }
}

TEST(SieveRange, SmallSegmentsCrossBoundaries) {
    EngineConfig cfg;
    cfg.segment_entries = 37;
    const auto all = oracle::eratosthenes(200'000);
    EXPECT_EQ(sieve_range(0, 200'001, cfg).primes, all);
    std::vector<std::uint64_t> want;
    for (auto p : all) if (p >= 12'345 && p < 150'000) want.push_back(p);
    EXPECT_EQ(sieve_range(12'345, 150'000, cfg).primes, want);
}

TEST(SieveRange, LargeWindowMatchesTrialDivision) {
    const std::uint64_t lo = 1'000'000'000'000ULL - 2000;
    EXPECT_EQ(sieve_range(lo, lo + 2000).primes, naive_window(lo, lo + 2000));
}

TEST(PrimeStream, ConcatenationEqualsSieve) {
    EngineConfig cfg;
    cfg.segment_entries = 1000;
    PrimeStream stream(0, 100'000, cfg);
    std::vector<std::uint64_t> got;
    for (auto b = stream.next_batch(); !b.empty(); b = stream.next_batch()) {
        ASSERT_FALSE(b.empty());
        if (!got.empty()) ASSERT_LT(got.back(), b.front());
        got.insert(got.end(), b.begin(), b.end());
    }
    EXPECT_EQ(got, oracle::eratosthenes(99'999));
}

TEST(ForEachPrime, EarlyStop) {
    std::vector<std::uint64_t> seen;
    for_each_prime(0, 1000, [&](std::uint64_t p) {
        seen.push_back(p);
        return seen.size() < 5;
    });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
}

TEST(NthPrime, KnownValues) {
    EXPECT_EQ(nth_prime(1), 2u);
    EXPECT_EQ(nth_prime(2), 3u);
    EXPECT_EQ(nth_prime(10), 29u);
    EXPECT_EQ(nth_prime(100), 541u);
    EXPECT_EQ(nth_prime(100'000), 1'299'709u);
    EXPECT_THROW(nth_prime(0), DomainError);
    EXPECT_THROW(nth_prime(10'500'001), ResourceError);
}

TEST(NthPrime, ConsistentWithIndexedStream) {
    const auto first = first_primes(5000);
    const auto all = oracle::eratosthenes(50'000);
    ASSERT_EQ(first.size(), 5000u);
    for (std::size_t i = 0; i < first.size(); ++i) ASSERT_EQ(first[i], all[i]);
    for (std::uint64_t n : {1u, 7u, 168u, 169u, 1229u, 5000u}) EXPECT_EQ(nth_prime(n), all[n - 1]);
}

TEST(NthPrime, UpperBoundHolds) {
    const auto all = oracle::eratosthenes(2'000'000);
    for (std::size_t n = 1; n <= all.size(); n += 97) EXPECT_GE(nth_prime_upper_bound(n), all[n - 1]) << n;
}

TEST(NextPrime, AfterKnownPrimes) {
    EXPECT_EQ(next_prime_after(2), 3u);
    EXPECT_EQ(next_prime_after(29), 31u);
    EXPECT_EQ(next_prime_after(1'299'709), 1'299'721u);
    EXPECT_EQ(next_prime_after(179'424'673), 179'424'691u);
}
