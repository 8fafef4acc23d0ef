#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <mpfr.h>
#include <stdexcept>

namespace oracle {

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> eratosthenes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t divisor_sum(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d) s += n / d;
        }
    }
    return s;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) c += d == n / d ? 1 : 2;
    }
    return c;
}

std::uint64_t psi_rational(std::uint64_t n) {
    // running fraction num/den, reduced each step
    std::uint64_t num = n, den = 1;
    std::uint64_t m = n;
    auto take = [&](std::uint64_t p) {
        num *= p + 1;
        den *= p;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    };
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        take(p);
    }
    if (m > 1) take(m);
    if (den != 1) throw std::logic_error("psi_rational: non-integer");
    return num;
}

Mp::Mp(long bits) : bits_(bits) {}
Mp::~Mp() { mpfr_free_cache(); }

namespace {

struct Num {
    mpfr_t v;
    explicit Num(long bits) { mpfr_init2(v, bits); mpfr_set_ui(v, 0, MPFR_RNDN); }
    ~Num() { mpfr_clear(v); }
    Num(const Num&) = delete;
};

std::string to_text(const mpfr_t v, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

void set_u64(mpfr_t v, std::uint64_t x) {
    mpfr_set_ui(v, static_cast<unsigned long>(x), MPFR_RNDN);
}

void e_gamma_into(mpfr_t out, long bits) {
    Num g(bits);
    mpfr_const_euler(g.v, MPFR_RNDN);
    mpfr_exp(out, g.v, MPFR_RNDN);
}

void zeta2_into(mpfr_t out, long bits) {
    mpfr_const_pi(out, MPFR_RNDN);
    mpfr_sqr(out, out, MPFR_RNDN);
    mpfr_div_ui(out, out, 6, MPFR_RNDN);
}

} // namespace

std::string Mp::log_sum(const std::vector<std::uint64_t>& primes, int digits) const {
    Num acc(bits_), t(bits_);
    for (std::uint64_t p : primes) {
        set_u64(t.v, p);
        mpfr_log(t.v, t.v, MPFR_RNDN);
        mpfr_add(acc.v, acc.v, t.v, MPFR_RNDN);
    }
    return to_text(acc.v, digits);
}

std::string Mp::sum_doubles(const std::vector<double>& terms, int digits) const {
    Num acc(bits_ + 2048); // wide enough to add binary64 values exactly
    for (double x : terms) mpfr_add_d(acc.v, acc.v, x, MPFR_RNDN);
    return to_text(acc.v, digits);
}

double Mp::loglog(std::uint64_t n) const {
    Num t(bits_);
    set_u64(t.v, n);
    mpfr_log(t.v, t.v, MPFR_RNDN);
    mpfr_log(t.v, t.v, MPFR_RNDN);
    return mpfr_get_d(t.v, MPFR_RNDN);
}

double Mp::criterion_value(std::uint64_t ratio_num_hi, std::uint64_t ratio_num_lo, std::uint64_t n) const {
    Num num(bits_), thr(bits_), eg(bits_);
    set_u64(num.v, ratio_num_hi);
    mpfr_mul_2ui(num.v, num.v, 64, MPFR_RNDN);
    mpfr_add_ui(num.v, num.v, static_cast<unsigned long>(ratio_num_lo), MPFR_RNDN);
    mpfr_div_ui(num.v, num.v, static_cast<unsigned long>(n), MPFR_RNDN);
    set_u64(thr.v, n);
    mpfr_log(thr.v, thr.v, MPFR_RNDN);
    mpfr_log(thr.v, thr.v, MPFR_RNDN);
    e_gamma_into(eg.v, bits_);
    mpfr_mul(thr.v, thr.v, eg.v, MPFR_RNDN);
    mpfr_sub(num.v, num.v, thr.v, MPFR_RNDN);
    return mpfr_get_d(num.v, MPFR_RNDN);
}

std::string Mp::e_gamma(int digits) const {
    Num v(bits_);
    e_gamma_into(v.v, bits_);
    return to_text(v.v, digits);
}

std::string Mp::euler(int digits) const {
    Num v(bits_);
    mpfr_const_euler(v.v, MPFR_RNDN);
    return to_text(v.v, digits);
}

std::string Mp::zeta2(int digits) const {
    Num v(bits_);
    zeta2_into(v.v, bits_);
    return to_text(v.v, digits);
}

std::string Mp::e_gamma_over_zeta2(int digits) const {
    Num a(bits_), b(bits_);
    e_gamma_into(a.v, bits_);
    zeta2_into(b.v, bits_);
    mpfr_div(a.v, a.v, b.v, MPFR_RNDN);
    return to_text(a.v, digits);
}

double relative_difference(const std::string& a, const std::string& b) {
    Num x(512), y(512);
    mpfr_set_str(x.v, a.c_str(), 10, MPFR_RNDN);
    mpfr_set_str(y.v, b.c_str(), 10, MPFR_RNDN);
    mpfr_sub(x.v, x.v, y.v, MPFR_RNDN);
    mpfr_div(x.v, x.v, y.v, MPFR_RNDN);
    mpfr_abs(x.v, x.v, MPFR_RNDN);
    return mpfr_get_d(x.v, MPFR_RNDN);
}

} // namespace oracle
