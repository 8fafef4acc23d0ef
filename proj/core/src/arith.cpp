#include "psirh/arith.hpp"

#include <algorithm>

#include "psirh/errors.hpp"
#include "psirh/sieve.hpp"

namespace psirh {

std::string to_string(u128 v) {
    if (v == 0) {
        return "0";
    }
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

std::uint64_t checked_spf_limit(std::uint64_t limit) {
    if (limit > 0xFFFF'FFFFULL) {
        throw ResourceError("SpfTable: limit above 2^32");
    }
    return limit;
}

} // namespace

SpfTable::SpfTable(std::uint64_t limit) : limit_(checked_spf_limit(limit)), spf_(limit + 1, 0) {
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (p > spf_[i] || m > limit) {
                break;
            }
            spf_[m] = p;
        }
    }
}

namespace {

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = small_primes(65'536);
    return primes;
}

void push_factor(Factorization& f, std::uint64_t p, std::uint32_t e) {
    if (e > 0) {
        f.factors.push_back({p, e});
    }
}

std::uint32_t divide_out(std::uint64_t& m, std::uint64_t p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

} // namespace

Factorization factorize(std::uint64_t n, const SpfTable* accel) {
    if (n == 0) {
        throw DomainError("factorize: n must be >= 1");
    }
    Factorization f{n, {}};
    std::uint64_t m = n;
    if (accel != nullptr && n <= accel->limit()) {
        while (m > 1) {
            const std::uint64_t p = accel->smallest_factor(m);
            push_factor(f, p, divide_out(m, p));
        }
        return f;
    }
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<std::uint64_t>(p) * p > m) {
            break;
        }
        push_factor(f, p, divide_out(m, p));
    }
    // beyond the table: 6k +- 1 wheel
    std::uint64_t d = trial_primes().back() + 2;
    d += (6 - d % 6 + 5) % 6; // first d >= start with d % 6 == 5
    for (; static_cast<u128>(d) * d <= m; d += 6) {
        push_factor(f, d, divide_out(m, d));
        const std::uint64_t d2 = d + 2;
        if (static_cast<u128>(d2) * d2 > m) {
            break;
        }
        push_factor(f, d2, divide_out(m, d2));
    }
    if (m > 1) {
        f.factors.push_back({m, 1});
    }
    return f;
}

u128 dedekind_psi(const Factorization& f) {
    u128 r = 1;
    for (const auto& [p, e] : f.factors) {
        u128 pk = 1;
        for (std::uint32_t i = 1; i < e; ++i) {
            pk *= p;
        }
        r *= pk * (static_cast<u128>(p) + 1);
    }
    return r;
}

u128 sigma(const Factorization& f) {
    u128 r = 1;
    for (const auto& [p, e] : f.factors) {
        // 1 + p + ... + p^e without the (p^(e+1) - 1) overflow risk
        u128 term = 1;
        u128 pk = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        r *= term;
    }
    return r;
}

std::uint64_t num_divisors(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& pe : f.factors) {
        r *= pe.exponent + 1;
    }
    return r;
}

bool is_squarefree(const Factorization& f) {
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pe) { return pe.exponent == 1; });
}

u128 dedekind_psi(std::uint64_t n, const SpfTable* accel) { return dedekind_psi(factorize(n, accel)); }
u128 sigma(std::uint64_t n, const SpfTable* accel) { return sigma(factorize(n, accel)); }
std::uint64_t num_divisors(std::uint64_t n, const SpfTable* accel) { return num_divisors(factorize(n, accel)); }
bool is_squarefree(std::uint64_t n, const SpfTable* accel) { return is_squarefree(factorize(n, accel)); }

} // namespace psirh
