#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "psirh/arith.hpp"
#include "psirh/bounds.hpp"

namespace psirh {

enum class CriterionKind { robin_g, dedekind_f };

std::string_view to_string(CriterionKind kind);

// |value| below this is re-evaluated with 50-digit arithmetic.
inline constexpr double kEscalationBand = 1e-9;

// Bulk scans (exception scans, sigma bound) refuse hi above this.
inline constexpr std::uint64_t kScanCeiling = 100'000'000;

inline constexpr double kDefaultSigmaBoundConstant = 0.6483;

struct CriterionValue {
    std::uint64_t n = 0;
    CriterionKind kind = CriterionKind::robin_g;
    double ratio = 0.0;     // sigma(n)/n or psi(n)/n
    double threshold = 0.0; // e^gamma log log n
    double value = 0.0;     // ratio - threshold
    bool precision_escalated = false;
};

// e^gamma log log n, evaluated as log, log, multiply (no rearrangement).
double robin_threshold(std::uint64_t n);

// Criterion value from an exact arithmetic-function value numerator = sigma(n) or psi(n).
// Throws DomainError for n <= 1.
CriterionValue evaluate_criterion(CriterionKind kind, std::uint64_t n, u128 numerator);

// g(n) = sigma(n)/n - e^gamma log log n. Throws DomainError for n <= 1.
CriterionValue robin_g(std::uint64_t n, const SpfTable* accel = nullptr);

// f(n) = psi(n)/n - e^gamma log log n. Throws DomainError for n <= 1.
CriterionValue dedekind_f(std::uint64_t n, const SpfTable* accel = nullptr);

struct ExceptionReport {
    CriterionKind kind = CriterionKind::robin_g;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> exceptions; // strictly increasing
    std::optional<std::uint64_t> largest;
    std::uint64_t escalations = 0;

    friend bool operator==(const ExceptionReport&, const ExceptionReport&) = default;
};

struct ScanOptions {
    std::uint64_t chunk_size = 1 << 16;
    unsigned workers = 1;
};

// Every n in [lo, hi) with value(n) >= 0. The result does not depend on
// chunk_size or workers. Requires 2 <= lo < hi <= kScanCeiling.
ExceptionReport scan_exceptions(CriterionKind kind, std::uint64_t lo, std::uint64_t hi,
                                const ScanOptions& options = {});

// Checks sigma(n)/n <= e^gamma log log n + c / log log n on [lo, hi).
// margin(n) = right side - left side; pass iff the smallest margin is > 0.
// Requires lo >= 3 (DomainError) and hi <= kScanCeiling (ResourceError).
BoundCheckResult check_sigma_upper_bound(std::uint64_t lo, std::uint64_t hi,
                                         double c = kDefaultSigmaBoundConstant,
                                         const ScanOptions& options = {});

} // namespace psirh
