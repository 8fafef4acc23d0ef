#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psirh/compensated.hpp"
#include "psirh/sieve.hpp"

namespace psirh {

// theta(p_n) = sum_{i <= n} log p_i, carried as an unevaluated pair.
struct ThetaPoint {
    std::uint64_t index = 0;
    std::uint64_t prime = 0;
    double theta_hi = 0.0;
    double theta_lo = 0.0;

    PairedValue theta() const noexcept { return {theta_hi, theta_lo}; }
    double value() const noexcept { return theta_hi + theta_lo; }

    friend bool operator==(const ThetaPoint&, const ThetaPoint&) = default;
};

// Indices that the reporting layer always needs exactly.
inline constexpr std::uint64_t kTable1Indices[] = {10, 1'000, 100'000, 10'000'000};

// Points at stride, 2 stride, ... <= n_max, merged with every index of
// extra_indices that is <= n_max. Sorted by index, no duplicates.
std::vector<ThetaPoint> theta_stream(std::uint64_t n_max, std::uint64_t stride,
                                     std::span<const std::uint64_t> extra_indices = kTable1Indices,
                                     const EngineConfig& cfg = {});

// Calls fn(point) for every index 1..n_max. The accumulation order is fixed, so
// the emitted bits do not depend on how the caller consumes them.
template <class Fn>
void for_each_theta(std::uint64_t n_max, Fn&& fn, const EngineConfig& cfg = {}) {
    CompensatedSum acc;
    for_each_indexed_prime(
        n_max,
        [&](std::uint64_t index, std::uint64_t p) {
            acc += std::log(static_cast<double>(p));
            const PairedValue t = acc.paired();
            fn(ThetaPoint{index, p, t.hi, t.lo});
        },
        cfg);
}

struct ThetaCache {
    static constexpr int kFormatVersion = 1;

    int format_version = kFormatVersion;
    std::uint64_t checkpoint_stride = 1;
    std::vector<ThetaPoint> points; // indices are multiples of checkpoint_stride

    friend bool operator==(const ThetaCache&, const ThetaCache&) = default;
};

// Checkpoints at every multiple of stride up to n_max.
ThetaCache build_theta_cache(std::uint64_t n_max, std::uint64_t stride, const EngineConfig& cfg = {});

// Text format:
//   psicache v1 stride=<k>
//   <index> <p_n> <theta_hi hex-float> <theta_lo hex-float>
// LF line endings, no trailing whitespace.
void cache_save(const ThetaCache& cache, const std::filesystem::path& path);

// Throws IncompatibleCacheError on a version mismatch and ParseError (with the
// 1-based line number) on any malformed or truncated line.
ThetaCache cache_load(const std::filesystem::path& path);

// theta at index n, resuming from the largest cached checkpoint <= n when a
// cache is given (nullptr streams from the start).
ThetaPoint theta_at(std::uint64_t n, const ThetaCache* cache = nullptr, const EngineConfig& cfg = {});

// Lowercase hex-float text ("0x1.8p+1", "-0x1p-60", "0x0p+0") and its inverse.
std::string format_hex_float(double x);
bool parse_hex_float(std::string_view text, double& out);

} // namespace psirh
