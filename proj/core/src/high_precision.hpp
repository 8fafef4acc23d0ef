#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "psirh/arith.hpp"

namespace psirh::detail {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline const HighPrecision& hp_e_gamma() {
    static const HighPrecision v = exp(boost::math::constants::euler<HighPrecision>());
    return v;
}

inline HighPrecision hp_from(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    HighPrecision r = hi;
    r = ldexp(r, 64);
    r += lo;
    return r;
}

inline HighPrecision hp_loglog(std::uint64_t n) { return log(log(HighPrecision(n))); }

} // namespace psirh::detail
