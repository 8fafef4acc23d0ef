#include "psirh/champions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "high_precision.hpp"
#include "psirh/criteria.hpp"
#include "psirh/errors.hpp"
#include "psirh/multiplicative_sieve.hpp"
#include "psirh/sieve.hpp"

namespace psirh {

std::string_view to_string(PropositionKind kind) {
    switch (kind) {
    case PropositionKind::prop1:
        return "prop1";
    case PropositionKind::prop2:
        return "prop2";
    case PropositionKind::psi_multiple_identity:
        return "psi_multiple_identity";
    }
    return "unknown";
}

std::vector<ChampionNumber> generate_s_sequence(const BigUInt& limit) {
    std::vector<ChampionNumber> out;
    if (limit < 2) {
        return out;
    }
    BigUInt primorial = 2;
    std::uint64_t p = 2;
    double psi_ratio_log = std::log1p(0.5);
    for (std::uint64_t k = 1; primorial <= limit; ++k) {
        const std::uint64_t next = next_prime_after(p);
        for (std::uint64_t l = 1; l < next; ++l) {
            BigUInt value = primorial * l;
            if (value > limit) {
                break;
            }
            out.push_back({k, l, std::move(value), psi_ratio_log});
        }
        primorial *= next;
        psi_ratio_log += std::log1p(1.0 / static_cast<double>(next));
        p = next;
    }
    return out;
}

bool is_psi_champion(std::uint64_t n, const SpfTable* accel) {
    if (n < 2) {
        throw DomainError("is_psi_champion: n must be >= 2");
    }
    if (n > kPsiChampionCeiling) {
        throw ResourceError("is_psi_champion: n " + std::to_string(n) + " above " +
                            std::to_string(kPsiChampionCeiling));
    }
    const u128 psi_n = dedekind_psi(n, accel);
    // m = 1 has ratio 1 < psi(n)/n
    for (std::uint64_t m = 2; m < n; ++m) {
        if (dedekind_psi(m, accel) * n > psi_n * m) {
            return false;
        }
    }
    return true;
}

RecordScanResult record_scan(RecordFunction function, std::uint64_t limit, RecordTies ties) {
    if (limit > kRecordScanCeiling) {
        throw ResourceError("record scan limit " + std::to_string(limit) + " above " +
                            std::to_string(kRecordScanCeiling));
    }
    RecordScanResult result;
    result.limit = limit;
    result.ties = ties;
    if (limit == 0) {
        return result;
    }
    const MultiplicativeSieve sieve(limit + 1);
    ArithChunk values;
    constexpr std::uint64_t kChunk = 1 << 18;
    u128 best_num = 0;
    std::uint64_t best_den = 1;
    for (std::uint64_t lo = 1; lo <= limit; lo += kChunk) {
        const std::uint64_t hi = std::min(limit + 1, lo + kChunk);
        sieve.compute(lo, hi, values);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::uint64_t n = lo + i;
            u128 num = 0;
            std::uint64_t den = n;
            switch (function) {
            case RecordFunction::sigma:
                num = values.sigma[i];
                break;
            case RecordFunction::psi:
                num = values.psi[i];
                break;
            case RecordFunction::divisors:
                num = values.divisors[i];
                den = 1;
                break;
            }
            const u128 lhs = num * best_den;
            const u128 rhs = best_num * den;
            if (result.records.empty() || lhs > rhs || (ties == RecordTies::weak && lhs == rhs)) {
                result.records.push_back({n, num, den});
                best_num = num;
                best_den = den;
            }
        }
    }
    return result;
}

RecordScanResult generate_superabundant(std::uint64_t limit) {
    return record_scan(RecordFunction::sigma, limit);
}

std::size_t count_superabundant(const std::vector<ChampionNumber>& s_terms, const RecordScanResult& superabundant) {
    std::size_t count = 0;
    auto it = superabundant.records.begin();
    for (const ChampionNumber& c : s_terms) {
        while (it != superabundant.records.end() && BigUInt(it->n) < c.value) {
            ++it;
        }
        if (it != superabundant.records.end() && BigUInt(it->n) == c.value) {
            ++count;
        }
    }
    return count;
}

namespace {

struct PrimorialStep {
    std::uint64_t k;
    std::uint64_t primorial;      // N_k
    std::uint64_t next_prime;     // p_{k+1}
    std::uint64_t next_primorial; // N_{k+1}, saturated at UINT64_MAX
};

// Primorials N_k <= bound (bound < 2^64).
std::vector<PrimorialStep> primorials_up_to(std::uint64_t bound) {
    std::vector<PrimorialStep> out;
    std::uint64_t p = 2;
    u128 primorial = 2;
    for (std::uint64_t k = 1; primorial <= bound; ++k) {
        const std::uint64_t next = next_prime_after(p);
        const u128 next_primorial = primorial * next;
        out.push_back({k, static_cast<std::uint64_t>(primorial), next,
                       next_primorial > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(next_primorial)});
        primorial = next_primorial;
        p = next;
    }
    return out;
}

// a < b for f-values, re-deciding near-ties with 50 digits from exact numerators.
bool f_less(std::uint64_t m, u128 psi_m, const CriterionValue& fm, std::uint64_t n, u128 psi_n,
            const CriterionValue& fn) {
    if (std::fabs(fm.value - fn.value) >= kEscalationBand) {
        return fm.value < fn.value;
    }
    using detail::HighPrecision;
    const HighPrecision a = detail::hp_from(psi_m) / HighPrecision(m) - detail::hp_e_gamma() * detail::hp_loglog(m);
    const HighPrecision b = detail::hp_from(psi_n) / HighPrecision(n) - detail::hp_e_gamma() * detail::hp_loglog(n);
    return a < b;
}

} // namespace

PropositionCheck psi_multiple_identity_check(std::uint64_t k_max) {
    if (k_max > kIdentityMaxK) {
        throw ResourceError("psi_multiple_identity_check: k_max " + std::to_string(k_max) +
                            " above 14 (l N_k leaves 64 bits)");
    }
    PropositionCheck check{PropositionKind::psi_multiple_identity, k_max, 0, {}};
    std::uint64_t p = 2;
    std::uint64_t primorial = 2;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const std::uint64_t next = next_prime_after(p);
        const u128 psi_primorial = dedekind_psi(primorial);
        for (std::uint64_t l = 1; l < next; ++l) {
            const std::uint64_t n = primorial * l;
            const u128 lhs = dedekind_psi(n);
            const u128 rhs = psi_primorial * l;
            ++check.cases_checked;
            if (lhs != rhs) {
                check.failures.push_back({k, l, n, static_cast<double>(lhs), static_cast<double>(rhs)});
            }
        }
        primorial *= next;
        p = next;
    }
    return check;
}

PropositionCheck verify_prop1(std::uint64_t limit) {
    if (limit > kProp1Ceiling) {
        throw ResourceError("verify_prop1: limit " + std::to_string(limit) + " above " +
                            std::to_string(kProp1Ceiling));
    }
    PropositionCheck check{PropositionKind::prop1, limit, 0, {}};
    for (const PrimorialStep& step : primorials_up_to(limit)) {
        const u128 psi_n = dedekind_psi(step.primorial);
        const CriterionValue f_n = evaluate_criterion(CriterionKind::dedekind_f, step.primorial, psi_n);
        const std::uint64_t bound = std::min(step.next_primorial, limit);
        for (std::uint64_t l = 2; static_cast<u128>(l) * step.primorial < bound; ++l) {
            const std::uint64_t m = l * step.primorial;
            const u128 psi_m = dedekind_psi(m);
            const CriterionValue f_m = evaluate_criterion(CriterionKind::dedekind_f, m, psi_m);
            ++check.cases_checked;
            if (!f_less(m, psi_m, f_m, step.primorial, psi_n, f_n)) {
                check.failures.push_back({step.k, l, m, f_m.value, f_n.value});
            }
        }
    }
    return check;
}

PropositionCheck verify_prop2(std::uint64_t limit) {
    if (limit > kProp2Ceiling) {
        throw ResourceError("verify_prop2: limit " + std::to_string(limit) + " above " +
                            std::to_string(kProp2Ceiling));
    }
    PropositionCheck check{PropositionKind::prop2, limit, 0, {}};
    if (limit < 3) {
        return check;
    }
    const MultiplicativeSieve sieve(limit);
    ArithChunk values;
    sieve.compute(1, limit, values); // psi(m) for 1 <= m < limit
    for (const PrimorialStep& step : primorials_up_to(limit)) {
        const std::uint64_t n = step.primorial;
        const u128 psi_n = dedekind_psi(n);
        const CriterionValue f_n = evaluate_criterion(CriterionKind::dedekind_f, n, psi_n);
        const std::uint64_t bound = std::min(step.next_primorial, limit);
        for (std::uint64_t l = 1; static_cast<u128>(l + 1) * n < bound; ++l) {
            for (std::uint64_t m = l * n + 1; m < (l + 1) * n; ++m) {
                const u128 psi_m = values.psi[m - 1];
                const CriterionValue f_m = evaluate_criterion(CriterionKind::dedekind_f, m, psi_m);
                ++check.cases_checked;
                if (!f_less(m, psi_m, f_m, n, psi_n, f_n)) {
                    check.failures.push_back({step.k, l, m, f_m.value, f_n.value});
                }
            }
        }
    }
    return check;
}

} // namespace psirh
