#pragma once

#include <cstdint>
#include <vector>

#include "psirh/arith.hpp"
#include "psirh/bigint.hpp"

namespace psirh {

// l * N_k with N_k the k-th primorial and 1 <= l < p_{k+1}.
struct ChampionNumber {
    std::uint64_t primorial_index = 0;
    std::uint64_t multiplier = 1;
    BigUInt value;
    // sum_{i <= k} log(1 + 1/p_i) = log(psi(value)/value); independent of the multiplier
    double psi_ratio_log = 0.0;
};

// Every l N_k <= limit in increasing order, built from primorials directly.
// Starts at N_1 = 2; limit < 2 gives an empty list.
std::vector<ChampionNumber> generate_s_sequence(const BigUInt& limit);

inline constexpr std::uint64_t kPsiChampionCeiling = 1'000'000;

// Brute force: no m < n has a larger psi ratio, i.e. psi(m) n <= psi(n) m for
// every 1 <= m < n, by exact cross multiplication. The comparison is not
// strict because l N_k has exactly the ratio of N_k; a strict test would admit
// primorials only. Throws DomainError for n < 2 and ResourceError above
// kPsiChampionCeiling.
bool is_psi_champion(std::uint64_t n, const SpfTable* accel = nullptr);

enum class RecordFunction { sigma, psi, divisors };

// strict: ratio above every earlier ratio (superabundant, highly composite).
// weak: no earlier ratio is larger (psi champions, which tie along l N_k).
enum class RecordTies { strict, weak };

// Records of f(n)/n (or d(n) for divisors).
struct RatioRecord {
    std::uint64_t n = 0;
    u128 ratio_num = 0;
    std::uint64_t ratio_den = 1; // n, or 1 for divisors

    friend bool operator==(const RatioRecord&, const RatioRecord&) = default;
};

struct RecordScanResult {
    std::vector<RatioRecord> records;
    std::uint64_t limit = 0;
    RecordTies ties = RecordTies::strict;
};

inline constexpr std::uint64_t kRecordScanCeiling = 100'000'000;

// Exact record scan over 1 <= n <= limit; n = 1 is always the first record.
RecordScanResult record_scan(RecordFunction function, std::uint64_t limit, RecordTies ties = RecordTies::strict);

// Superabundant numbers <= limit (includes 1). ResourceError above kRecordScanCeiling.
RecordScanResult generate_superabundant(std::uint64_t limit);

// Number of S terms that are also superabundant records.
std::size_t count_superabundant(const std::vector<ChampionNumber>& s_terms, const RecordScanResult& superabundant);

enum class PropositionKind { prop1, prop2, psi_multiple_identity };

struct PropositionFailure {
    std::uint64_t primorial_index = 0;
    std::uint64_t multiplier = 0;
    std::uint64_t n = 0; // the number that broke the inequality or identity
    double lhs = 0.0;
    double rhs = 0.0;
};

struct PropositionCheck {
    PropositionKind proposition = PropositionKind::prop1;
    std::uint64_t limit = 0;
    std::uint64_t cases_checked = 0;
    std::vector<PropositionFailure> failures;

    bool pass() const noexcept { return failures.empty(); }
};

inline constexpr std::uint64_t kIdentityMaxK = 14;
inline constexpr std::uint64_t kProp1Ceiling = 100'000'000;
inline constexpr std::uint64_t kProp2Ceiling = 1'000'000;

// psi(l N_k) == l psi(N_k) exactly for 1 <= l < p_{k+1}, k <= k_max.
// ResourceError for k_max > 14 (l N_k must stay within 64 bits).
PropositionCheck psi_multiple_identity_check(std::uint64_t k_max);

// f(l N_k) < f(N_k) for 1 < l with l N_k < min(N_{k+1}, limit).
PropositionCheck verify_prop1(std::uint64_t limit);

// f(m) < f(N_k) for l N_k < m < (l+1) N_k, l >= 1, (l+1) N_k < min(N_{k+1}, limit).
PropositionCheck verify_prop2(std::uint64_t limit);

std::string_view to_string(PropositionKind kind);

} // namespace psirh
