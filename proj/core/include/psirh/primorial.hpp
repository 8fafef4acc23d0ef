#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psirh/bounds.hpp"
#include "psirh/compensated.hpp"
#include "psirh/constants.hpp"
#include "psirh/sieve.hpp"
#include "psirh/theta.hpp"

namespace psirh {

// Everything about the primorial N_n = p_1 ... p_n, kept in log space.
// N_n is squarefree, so psi(N_n) = sigma(N_n) and f(N_n) = g(N_n): one value is stored.
struct PrimorialStats {
    std::uint64_t index = 0;
    std::uint64_t prime = 0;
    PairedValue theta;         // log N_n
    double loglogN = 0.0;      // log theta
    PairedValue psi_ratio_log; // R_n = sum log1p(1/p_i) = log(psi(N_n)/N_n)
    double f_value = 0.0;      // exp(R_n) - e^gamma loglogN
    double mertens_ratio = 0.0; // exp(R_n) / log p_n

    double psi_ratio() const noexcept { return std::exp(psi_ratio_log.hi) * (1.0 + psi_ratio_log.lo); }
};

PrimorialStats make_primorial_stats(std::uint64_t index, std::uint64_t prime, PairedValue theta,
                                    PairedValue psi_ratio_log);

// Calls fn(stats) for every primorial index 1..n_max in order.
template <class Fn>
void for_each_primorial(std::uint64_t n_max, Fn&& fn, const EngineConfig& cfg = {}) {
    CompensatedSum theta;
    CompensatedSum psi_ratio_log;
    for_each_indexed_prime(
        n_max,
        [&](std::uint64_t index, std::uint64_t p) {
            const double x = static_cast<double>(p);
            theta += std::log(x);
            psi_ratio_log += std::log1p(1.0 / x);
            fn(make_primorial_stats(index, p, theta.paired(), psi_ratio_log.paired()));
        },
        cfg);
}

// Stats at each of report_indices that is <= n_max, in increasing index order.
std::vector<PrimorialStats> stats_stream(std::uint64_t n_max, std::span<const std::uint64_t> report_indices,
                                         const EngineConfig& cfg = {});

// exp(R_n) / log p_n, tending to e^gamma / zeta(2). DomainError for n < 2.
double mertens_ratio(std::uint64_t n, const EngineConfig& cfg = {});

// delta = ftilde(N_{n+1}) / ftilde(N_n) - 1 with ftilde(m) = psi(m) / (m log log m),
// evaluated as (a L - D) / (L + D), L = log theta(p_n), a = 1/p_{n+1},
// D = log1p(log p_{n+1} / theta(p_n)). The quotient of two ftilde values is never formed.
double ftilde_ratio_deviation(PairedValue theta_n, std::uint64_t next_prime);
// DomainError for n < 2.
double ftilde_ratio_deviation(std::uint64_t n, const ThetaCache* cache = nullptr, const EngineConfig& cfg = {});

// k log k / (p_{n+1} log p_{n+1}) with k = p_n + sqrt(p_n) log log log p_n / 2.
double k_ratio(std::uint64_t prime, std::uint64_t next_prime);
// DomainError for n < 7 (log log log p_n needs p_n > e^e).
double k_ratio(std::uint64_t n, const EngineConfig& cfg);

inline constexpr std::uint64_t kPrimorialBoundMinPrime = 20'000;
inline constexpr double kLogLogNOffset = 0.123;
inline constexpr double kFBoundSlope = -0.698;
inline constexpr double kFBoundOffset = 0.220;

// Smallest index n with p_n >= 20000.
std::uint64_t first_bound_index(const EngineConfig& cfg = {});

// -0.698 log p + 0.220 / log p
double f_primorial_bound_rhs(std::uint64_t prime);

// log log N_n > log p_n - 0.123 / log p_n over first..last.
// DomainError when p_first < 20000 or last < first.
BoundCheckResult check_loglogN_lower_bound(std::uint64_t first, std::uint64_t last, const EngineConfig& cfg = {});

// f(N_n) < -0.698 log p_n + 0.220 / log p_n over first..last.
BoundCheckResult check_f_primorial_bound(std::uint64_t first, std::uint64_t last, const EngineConfig& cfg = {});

// Both primorial bounds from one prime stream: {loglogN_lower, f_primorial_upper}.
std::pair<BoundCheckResult, BoundCheckResult> check_primorial_bounds(std::uint64_t first, std::uint64_t last,
                                                                     const EngineConfig& cfg = {});

struct TableCell {
    std::uint64_t index = 0;
    double value = 0.0; // full precision
    int decimals = 0;
    std::string printed; // value rounded half-even to `decimals`
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
};

struct NumericTable {
    std::string name;
    std::vector<std::uint64_t> indices;
    std::vector<TableRow> rows;

    const TableRow& row(std::string_view label) const;
};

// Decimal digits of the published cell, or fallback when the index is not a published column.
int table1_decimals(std::size_t row, std::uint64_t index, int fallback);
int table2_decimals(std::uint64_t index, int fallback);

// Rows: theta_over_p, ftilde_ratio, k_ratio; companions ftilde_delta, theta_hi, theta_lo.
// Indices must satisfy 7 <= n < ceiling.
NumericTable table1(std::span<const std::uint64_t> indices, const ThetaCache* cache = nullptr,
                    int fallback_decimals = 6, const EngineConfig& cfg = {});

// Rows: f_value; companions psi_ratio, loglogN, theta_hi, theta_lo.
NumericTable table2(std::span<const std::uint64_t> indices, int fallback_decimals = 2, const EngineConfig& cfg = {});

// Fixed-point text rounded half-even on the exact binary value.
std::string format_fixed(double value, int decimals);

} // namespace psirh
