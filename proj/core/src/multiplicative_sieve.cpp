#include "psirh/multiplicative_sieve.hpp"

#include <cmath>
#include <string>

#include "psirh/errors.hpp"
#include "psirh/sieve.hpp"

namespace psirh {

MultiplicativeSieve::MultiplicativeSieve(std::uint64_t max_hi) : max_hi_(max_hi) {
    if (max_hi > kMaxHi) {
        throw ResourceError("MultiplicativeSieve: hi " + std::to_string(max_hi) + " above " +
                            std::to_string(kMaxHi));
    }
    auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(max_hi)));
    while (static_cast<std::uint64_t>(root + 1) * (root + 1) <= max_hi) {
        ++root;
    }
    primes_ = small_primes(root);
}

void MultiplicativeSieve::compute(std::uint64_t lo, std::uint64_t hi, ArithChunk& out) const {
    if (lo == 0 || hi <= lo) {
        throw DomainError("MultiplicativeSieve: need 1 <= lo < hi");
    }
    if (hi > max_hi_) {
        throw ResourceError("MultiplicativeSieve: window end " + std::to_string(hi) + " above " +
                            std::to_string(max_hi_));
    }
    const std::size_t size = static_cast<std::size_t>(hi - lo);
    out.lo = lo;
    out.psi.assign(size, 1);
    out.sigma.assign(size, 1);
    out.divisors.assign(size, 1);
    std::vector<std::uint64_t> residual(size);
    for (std::size_t i = 0; i < size; ++i) {
        residual[i] = lo + i;
    }
    for (const std::uint32_t p32 : primes_) {
        const std::uint64_t p = p32;
        if (p * p >= hi) {
            break;
        }
        for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
            const std::size_t i = static_cast<std::size_t>(m - lo);
            std::uint64_t r = residual[i] / p;
            std::uint64_t pk = p;
            std::uint64_t geometric = 1 + p;
            std::uint32_t e = 1;
            while (r % p == 0) {
                r /= p;
                pk *= p;
                geometric += pk;
                ++e;
            }
            residual[i] = r;
            out.psi[i] *= pk / p * (p + 1);
            out.sigma[i] *= geometric;
            out.divisors[i] *= e + 1;
        }
    }
    for (std::size_t i = 0; i < size; ++i) {
        if (residual[i] > 1) {
            out.psi[i] *= residual[i] + 1;
            out.sigma[i] *= residual[i] + 1;
            out.divisors[i] *= 2;
        }
    }
}

} // namespace psirh
