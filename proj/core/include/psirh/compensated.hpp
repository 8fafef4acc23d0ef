#pragma once

#ifdef __FAST_MATH__
#error "compensated summation is meaningless under -ffast-math"
#endif

#include <cmath>

namespace psirh {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2 (double-double).
struct PairedValue {
    double hi = 0.0;
    double lo = 0.0;

    double value() const noexcept { return hi + lo; }

    friend bool operator==(const PairedValue&, const PairedValue&) = default;
};

namespace detail {

// Knuth's TwoSum: s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) noexcept {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// Dekker's FastTwoSum, requires |a| >= |b|.
inline void fast_two_sum(double a, double b, double& s, double& e) noexcept {
    s = a + b;
    e = b - (s - a);
}

} // namespace detail

// Double-double accumulator. Adding a binary64 term costs one TwoSum and one
// renormalisation, and the running error is O(n u^2) instead of O(n u).
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(PairedValue start) : acc_(start) {}

    CompensatedSum& operator+=(double x) noexcept {
        double s, e;
        detail::two_sum(acc_.hi, x, s, e);
        e += acc_.lo;
        detail::fast_two_sum(s, e, acc_.hi, acc_.lo);
        return *this;
    }

    CompensatedSum& operator+=(PairedValue x) noexcept {
        double s, e;
        detail::two_sum(acc_.hi, x.hi, s, e);
        double t, f;
        detail::two_sum(acc_.lo, x.lo, t, f);
        e += t;
        detail::fast_two_sum(s, e, s, e);
        e += f;
        detail::fast_two_sum(s, e, acc_.hi, acc_.lo);
        return *this;
    }

    PairedValue paired() const noexcept { return acc_; }
    double value() const noexcept { return acc_.hi + acc_.lo; }

private:
    PairedValue acc_;
};

// log(hi + lo) to nearly full binary64 precision when |lo| << |hi|.
inline double log_paired(PairedValue v) noexcept {
    return std::log(v.hi) + std::log1p(v.lo / v.hi);
}

} // namespace psirh
