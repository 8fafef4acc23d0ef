#pragma once

#include <cstdint>
#include <string_view>

namespace psirh {

enum class BoundKind { loglogN_lower, f_primorial_upper, sigma_upper };

std::string_view to_string(BoundKind kind);

// Outcome of checking an inequality over a range. first/last/witness are
// primorial indices for the primorial bounds and integers n for sigma_upper.
struct BoundCheckResult {
    BoundKind bound = BoundKind::sigma_upper;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    bool pass = true;
    double worst_margin = 0.0;
    std::uint64_t witness = 0;
    std::uint64_t cases_checked = 0;
    std::uint64_t escalations = 0;
};

} // namespace psirh
