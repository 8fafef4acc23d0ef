#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace psirh {

// Ceilings shared by every prime-enumerating operation.
struct EngineConfig {
    // sieve_range / for_each_prime refuse hi above this (keeps base primes <= 10^6).
    std::uint64_t sieve_ceiling = 1'000'000'000'000ULL;
    // nth_prime / theta / primorial streams refuse indices above this.
    // 1.05e7 keeps p_{10^7} and its successor reachable.
    std::uint64_t max_prime_index = 10'500'000ULL;
    // Odd-number entries per sieve segment.
    std::size_t segment_entries = std::size_t{1} << 20;
};

struct PrimeRange {
    std::uint64_t lo = 0; // inclusive
    std::uint64_t hi = 0; // exclusive
    std::vector<std::uint64_t> primes;
};

// All primes p with lo <= p < hi, by segmented sieve.
// Throws DomainError if hi <= lo or hi > 2^63, ResourceError if hi > cfg.sieve_ceiling.
PrimeRange sieve_range(std::uint64_t lo, std::uint64_t hi, const EngineConfig& cfg = {});

// Primes up to and including limit by a plain (unsegmented) sieve. For small limits only.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

// Rosser-Schoenfeld style upper bound: p_n < n (ln n + ln ln n) for n >= 6.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

// Yields the primes in [lo, hi) one segment at a time. Memory is
// O(sqrt(hi) + segment size) regardless of hi - lo.
class PrimeStream {
public:
    PrimeStream(std::uint64_t lo, std::uint64_t hi, const EngineConfig& cfg = {});

    // Next non-empty batch of primes in increasing order; empty span at the end.
    std::span<const std::uint64_t> next_batch();

private:
    void sieve_segment();

    std::uint64_t lo_;
    std::uint64_t hi_;
    std::uint64_t cursor_;        // next odd number not yet sieved
    bool emitted_two_ = false;
    std::size_t segment_entries_;
    std::vector<std::uint32_t> base_primes_; // odd primes <= sqrt(hi)
    std::vector<std::uint64_t> next_multiple_;
    std::vector<std::uint8_t> segment_;
    std::vector<std::uint64_t> batch_;
};

// Calls fn(p) for each prime in [lo, hi), in order. If fn returns bool,
// returning false stops the enumeration.
template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn, const EngineConfig& cfg = {}) {
    PrimeStream stream(lo, hi, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch()) {
        for (const std::uint64_t p : batch) {
            if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::uint64_t>, bool>) {
                if (!fn(p)) {
                    return;
                }
            } else {
                fn(p);
            }
        }
    }
}

// Calls fn(index, p) for p_1 = 2, p_2 = 3, ..., p_{n_max}.
// Throws ResourceError if n_max > cfg.max_prime_index.
template <class Fn>
void for_each_indexed_prime(std::uint64_t n_max, Fn&& fn, const EngineConfig& cfg = {});

// The n-th prime, 1-indexed. Throws DomainError for n == 0 and ResourceError
// above cfg.max_prime_index.
std::uint64_t nth_prime(std::uint64_t n, const EngineConfig& cfg = {});

// Smallest prime strictly greater than p.
std::uint64_t next_prime_after(std::uint64_t p, const EngineConfig& cfg = {});

// The first count primes.
std::vector<std::uint64_t> first_primes(std::size_t count, const EngineConfig& cfg = {});

void check_prime_index(std::uint64_t n, const EngineConfig& cfg);

template <class Fn>
void for_each_indexed_prime(std::uint64_t n_max, Fn&& fn, const EngineConfig& cfg) {
    check_prime_index(n_max, cfg);
    std::uint64_t index = 0;
    for_each_prime(
        0, nth_prime_upper_bound(n_max) + 1,
        [&](std::uint64_t p) {
            ++index;
            fn(index, p);
            return index < n_max;
        },
        cfg);
}

} // namespace psirh
