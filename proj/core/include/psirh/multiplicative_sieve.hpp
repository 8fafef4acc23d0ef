#pragma once

#include <cstdint>
#include <vector>

namespace psirh {

// psi, sigma and d for every n in [lo, lo + size).
struct ArithChunk {
    std::uint64_t lo = 1;
    std::vector<std::uint64_t> psi;
    std::vector<std::uint64_t> sigma;
    std::vector<std::uint32_t> divisors;

    std::size_t size() const noexcept { return psi.size(); }
};

// Bulk evaluation by dividing out every prime <= sqrt(hi) over a window; any
// remaining cofactor is a single large prime. Memory is linear in the window,
// not in hi. sigma(n) < 6 n below kMaxHi, so 64 bits hold every value.
class MultiplicativeSieve {
public:
    static constexpr std::uint64_t kMaxHi = 4'000'000'000ULL;

    // Supports windows with hi <= max_hi. Throws ResourceError above kMaxHi.
    explicit MultiplicativeSieve(std::uint64_t max_hi);

    // Requires 1 <= lo < hi <= max_hi.
    void compute(std::uint64_t lo, std::uint64_t hi, ArithChunk& out) const;

    std::uint64_t max_hi() const noexcept { return max_hi_; }

private:
    std::uint64_t max_hi_;
    std::vector<std::uint32_t> primes_;
};

} // namespace psirh
