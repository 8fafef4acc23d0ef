#include "psirh/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psirh/errors.hpp"

namespace psirh {

namespace {

constexpr std::uint64_t kMaxSieveHi = std::uint64_t{1} << 63;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

void validate_bounds(std::uint64_t lo, std::uint64_t hi, const EngineConfig& cfg) {
    if (hi <= lo) {
        throw DomainError("sieve_range: hi (" + std::to_string(hi) + ") must exceed lo (" +
                          std::to_string(lo) + ")");
    }
    if (hi > kMaxSieveHi) {
        throw DomainError("sieve_range: hi exceeds 2^63");
    }
    if (hi > cfg.sieve_ceiling) {
        throw ResourceError("sieve_range: hi " + std::to_string(hi) + " above configured ceiling " +
                            std::to_string(cfg.sieve_ceiling));
    }
}

} // namespace

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return out;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    if (n < 6) {
        return 13;
    }
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x))))) + 1;
}

PrimeStream::PrimeStream(std::uint64_t lo, std::uint64_t hi, const EngineConfig& cfg)
    : lo_(lo), hi_(hi), segment_entries_(std::max<std::size_t>(cfg.segment_entries, 64)) {
    validate_bounds(lo, hi, cfg);
    cursor_ = std::max<std::uint64_t>(lo, 3) | 1; // first odd >= max(lo, 3)
    emitted_two_ = !(lo <= 2 && hi > 2);

    const std::uint64_t root = isqrt(hi - 1);
    for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(root))) {
        if (p != 2) {
            base_primes_.push_back(p);
        }
    }
    next_multiple_.resize(base_primes_.size());
    for (std::size_t i = 0; i < base_primes_.size(); ++i) {
        const std::uint64_t p = base_primes_[i];
        std::uint64_t m = std::max(p * p, (cursor_ + p - 1) / p * p);
        if ((m & 1) == 0) {
            m += p;
        }
        next_multiple_[i] = m;
    }
    segment_.resize(segment_entries_);
}

void PrimeStream::sieve_segment() {
    // segment_[i] represents the odd number cursor_ + 2 i
    const std::uint64_t span_hi = std::min<std::uint64_t>(hi_, cursor_ + 2 * segment_entries_);
    const std::size_t entries = static_cast<std::size_t>((span_hi - cursor_ + 1) / 2);
    std::fill_n(segment_.begin(), entries, std::uint8_t{1});
    for (std::size_t i = 0; i < base_primes_.size(); ++i) {
        const std::uint64_t step = 2 * static_cast<std::uint64_t>(base_primes_[i]);
        std::uint64_t m = next_multiple_[i];
        for (; m < span_hi; m += step) {
            segment_[(m - cursor_) >> 1] = 0;
        }
        next_multiple_[i] = m;
    }
    for (std::size_t i = 0; i < entries; ++i) {
        if (segment_[i]) {
            batch_.push_back(cursor_ + 2 * i);
        }
    }
    cursor_ += 2 * entries;
}

std::span<const std::uint64_t> PrimeStream::next_batch() {
    batch_.clear();
    if (!emitted_two_) {
        emitted_two_ = true;
        batch_.push_back(2);
        return {batch_.data(), batch_.size()};
    }
    while (batch_.empty() && cursor_ < hi_) {
        sieve_segment();
    }
    return {batch_.data(), batch_.size()};
}

PrimeRange sieve_range(std::uint64_t lo, std::uint64_t hi, const EngineConfig& cfg) {
    PrimeRange out{lo, hi, {}};
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.primes.push_back(p); }, cfg);
    return out;
}

void check_prime_index(std::uint64_t n, const EngineConfig& cfg) {
    if (n > cfg.max_prime_index) {
        throw ResourceError("prime index " + std::to_string(n) + " above configured ceiling " +
                            std::to_string(cfg.max_prime_index));
    }
}

std::uint64_t nth_prime(std::uint64_t n, const EngineConfig& cfg) {
    if (n == 0) {
        throw DomainError("nth_prime: n must be >= 1");
    }
    check_prime_index(n, cfg);
    std::uint64_t result = 0;
    for_each_indexed_prime(
        n, [&](std::uint64_t index, std::uint64_t p) {
            if (index == n) {
                result = p;
            }
        },
        cfg);
    return result;
}

std::uint64_t next_prime_after(std::uint64_t p, const EngineConfig& cfg) {
    // prime gaps below 2^63 are far below this window
    std::uint64_t window = 256;
    for (std::uint64_t lo = p + 1;; lo += window, window *= 2) {
        std::uint64_t found = 0;
        for_each_prime(lo, lo + window, [&](std::uint64_t q) {
            found = q;
            return false;
        }, cfg);
        if (found != 0) {
            return found;
        }
    }
}

std::vector<std::uint64_t> first_primes(std::size_t count, const EngineConfig& cfg) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    if (count == 0) {
        return out;
    }
    for_each_indexed_prime(count, [&](std::uint64_t, std::uint64_t p) { out.push_back(p); }, cfg);
    return out;
}

} // namespace psirh
