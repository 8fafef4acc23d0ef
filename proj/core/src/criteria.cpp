#include "psirh/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "high_precision.hpp"
#include "psirh/constants.hpp"
#include "psirh/errors.hpp"
#include "psirh/multiplicative_sieve.hpp"

namespace psirh {

std::string_view to_string(CriterionKind kind) {
    return kind == CriterionKind::robin_g ? "g" : "f";
}

std::string_view to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::loglogN_lower:
        return "loglogN_lower";
    case BoundKind::f_primorial_upper:
        return "f_primorial_upper";
    case BoundKind::sigma_upper:
        return "sigma_upper";
    }
    return "unknown";
}

double robin_threshold(std::uint64_t n) {
    const double log_n = std::log(static_cast<double>(n));
    const double loglog_n = std::log(log_n);
    return Constants::e_gamma * loglog_n;
}

namespace {

void require_loglog_defined(std::uint64_t n) {
    if (n <= 1) {
        throw DomainError("log log n undefined for n = " + std::to_string(n));
    }
}

double exact_ratio(u128 numerator, std::uint64_t n) {
    // numerator < 2^53 for every bulk-scan value, so this is one rounding
    return static_cast<double>(numerator) / static_cast<double>(n);
}

} // namespace

CriterionValue evaluate_criterion(CriterionKind kind, std::uint64_t n, u128 numerator) {
    require_loglog_defined(n);
    CriterionValue v;
    v.n = n;
    v.kind = kind;
    v.ratio = exact_ratio(numerator, n);
    v.threshold = robin_threshold(n);
    v.value = v.ratio - v.threshold;
    if (std::fabs(v.value) < kEscalationBand) {
        using detail::HighPrecision;
        const HighPrecision ratio = detail::hp_from(numerator) / HighPrecision(n);
        const HighPrecision threshold = detail::hp_e_gamma() * detail::hp_loglog(n);
        v.ratio = static_cast<double>(ratio);
        v.threshold = static_cast<double>(threshold);
        v.value = static_cast<double>(ratio - threshold);
        v.precision_escalated = true;
    }
    return v;
}

CriterionValue robin_g(std::uint64_t n, const SpfTable* accel) {
    require_loglog_defined(n);
    return evaluate_criterion(CriterionKind::robin_g, n, sigma(n, accel));
}

CriterionValue dedekind_f(std::uint64_t n, const SpfTable* accel) {
    require_loglog_defined(n);
    return evaluate_criterion(CriterionKind::dedekind_f, n, dedekind_psi(n, accel));
}

namespace {

void check_scan_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t min_lo, const char* what) {
    if (lo < min_lo) {
        throw DomainError(std::string(what) + ": lo must be >= " + std::to_string(min_lo));
    }
    if (hi <= lo) {
        throw DomainError(std::string(what) + ": hi must exceed lo");
    }
    if (hi > kScanCeiling) {
        throw ResourceError(std::string(what) + ": hi " + std::to_string(hi) + " above scan ceiling " +
                            std::to_string(kScanCeiling));
    }
}

// Runs body(chunk_index, lo, hi, chunk) over fixed chunk boundaries. Results are
// stored per chunk index by the body, so merge order never depends on scheduling.
template <class Body>
void for_each_chunk(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options, Body&& body) {
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
    const std::uint64_t count = (hi - lo + chunk - 1) / chunk;
    const MultiplicativeSieve sieve(hi);
    auto worker = [&](unsigned id, unsigned stride) {
        ArithChunk values;
        for (std::uint64_t c = id; c < count; c += stride) {
            const std::uint64_t a = lo + c * chunk;
            const std::uint64_t b = std::min(hi, a + chunk);
            sieve.compute(a, b, values);
            body(c, values);
        }
    };
    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1 || count == 1) {
        worker(0, 1);
        return;
    }
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(worker, w, workers);
    }
    for (auto& t : threads) {
        t.join();
    }
}

std::uint64_t chunk_count(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options) {
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
    return (hi - lo + chunk - 1) / chunk;
}

} // namespace

ExceptionReport scan_exceptions(CriterionKind kind, std::uint64_t lo, std::uint64_t hi,
                                const ScanOptions& options) {
    check_scan_range(lo, hi, 2, "scan_exceptions");
    struct Partial {
        std::vector<std::uint64_t> exceptions;
        std::uint64_t escalations = 0;
    };
    std::vector<Partial> partials(chunk_count(lo, hi, options));
    for_each_chunk(lo, hi, options, [&](std::uint64_t c, const ArithChunk& values) {
        Partial& out = partials[c];
        const auto& numerators = kind == CriterionKind::robin_g ? values.sigma : values.psi;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::uint64_t n = values.lo + i;
            const CriterionValue v = evaluate_criterion(kind, n, numerators[i]);
            out.escalations += v.precision_escalated ? 1 : 0;
            if (v.value >= 0.0) {
                out.exceptions.push_back(n);
            }
        }
    });

    ExceptionReport report{kind, lo, hi, {}, std::nullopt, 0};
    for (Partial& p : partials) {
        report.exceptions.insert(report.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
        report.escalations += p.escalations;
    }
    if (!report.exceptions.empty()) {
        report.largest = report.exceptions.back();
    }
    return report;
}

BoundCheckResult check_sigma_upper_bound(std::uint64_t lo, std::uint64_t hi, double c,
                                         const ScanOptions& options) {
    check_scan_range(lo, hi, 3, "check_sigma_upper_bound");
    struct Partial {
        double worst = INFINITY;
        std::uint64_t witness = 0;
        std::uint64_t escalations = 0;
    };
    std::vector<Partial> partials(chunk_count(lo, hi, options));
    for_each_chunk(lo, hi, options, [&](std::uint64_t ci, const ArithChunk& values) {
        Partial& out = partials[ci];
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::uint64_t n = values.lo + i;
            const double loglog_n = std::log(std::log(static_cast<double>(n)));
            const double rhs = Constants::e_gamma * loglog_n + c / loglog_n;
            double margin = rhs - exact_ratio(values.sigma[i], n);
            if (std::fabs(margin) < kEscalationBand) {
                using detail::HighPrecision;
                const HighPrecision ll = detail::hp_loglog(n);
                const HighPrecision hp_rhs = detail::hp_e_gamma() * ll + HighPrecision(c) / ll;
                margin = static_cast<double>(hp_rhs - HighPrecision(values.sigma[i]) / HighPrecision(n));
                ++out.escalations;
            }
            if (margin < out.worst) {
                out.worst = margin;
                out.witness = n;
            }
        }
    });

    BoundCheckResult result;
    result.bound = BoundKind::sigma_upper;
    result.first = lo;
    result.last = hi - 1;
    result.worst_margin = INFINITY;
    result.cases_checked = hi - lo;
    for (const Partial& p : partials) {
        if (p.worst < result.worst_margin) {
            result.worst_margin = p.worst;
            result.witness = p.witness;
        }
        result.escalations += p.escalations;
    }
    result.pass = result.worst_margin > 0.0;
    return result;
}

} // namespace psirh
