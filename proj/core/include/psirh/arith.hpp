#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psirh {

__extension__ typedef unsigned __int128 u128;

std::string to_string(u128 v);

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod prime^exponent, primes strictly increasing; empty iff n == 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Smallest-prime-factor table for 2 <= m <= limit, built by a linear sieve.
class SpfTable {
public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    explicit SpfTable(std::uint64_t limit = kDefaultLimit);

    std::uint64_t limit() const noexcept { return limit_; }
    // Requires 2 <= m <= limit().
    std::uint32_t smallest_factor(std::uint64_t m) const noexcept { return spf_[m]; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

// Exact factorization. Uses accel when n <= accel->limit(), trial division otherwise.
// Throws DomainError for n == 0.
Factorization factorize(std::uint64_t n, const SpfTable* accel = nullptr);

// psi(n) = prod p^(e-1) (p+1). Exact for every 64-bit n.
u128 dedekind_psi(const Factorization& f);
u128 dedekind_psi(std::uint64_t n, const SpfTable* accel = nullptr);

// sigma(n) = prod (p^(e+1) - 1)/(p - 1). sigma(n) < n^2 for n >= 2, so 128 bits suffice.
u128 sigma(const Factorization& f);
u128 sigma(std::uint64_t n, const SpfTable* accel = nullptr);

std::uint64_t num_divisors(const Factorization& f);
std::uint64_t num_divisors(std::uint64_t n, const SpfTable* accel = nullptr);

bool is_squarefree(const Factorization& f);
bool is_squarefree(std::uint64_t n, const SpfTable* accel = nullptr);

} // namespace psirh
