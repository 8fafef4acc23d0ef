#include "psirh/primorial.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <map>

#include "psirh/errors.hpp"

namespace psirh {

PrimorialStats make_primorial_stats(std::uint64_t index, std::uint64_t prime, PairedValue theta,
                                    PairedValue psi_ratio_log) {
    PrimorialStats s;
    s.index = index;
    s.prime = prime;
    s.theta = theta;
    s.psi_ratio_log = psi_ratio_log;
    s.loglogN = log_paired(theta);
    const double ratio = s.psi_ratio();
    s.f_value = ratio - Constants::e_gamma * s.loglogN;
    s.mertens_ratio = ratio / std::log(static_cast<double>(prime));
    return s;
}

std::vector<PrimorialStats> stats_stream(std::uint64_t n_max, std::span<const std::uint64_t> report_indices,
                                         const EngineConfig& cfg) {
    check_prime_index(n_max, cfg);
    std::vector<std::uint64_t> wanted(report_indices.begin(), report_indices.end());
    std::erase_if(wanted, [&](std::uint64_t i) { return i == 0 || i > n_max; });
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<PrimorialStats> out;
    if (wanted.empty()) {
        return out;
    }
    auto next = wanted.begin();
    for_each_primorial(
        wanted.back(),
        [&](const PrimorialStats& s) {
            if (next != wanted.end() && *next == s.index) {
                out.push_back(s);
                ++next;
            }
        },
        cfg);
    return out;
}

double mertens_ratio(std::uint64_t n, const EngineConfig& cfg) {
    if (n < 2) {
        throw DomainError("mertens_ratio: n must be >= 2");
    }
    const std::uint64_t idx[] = {n};
    return stats_stream(n, idx, cfg).front().mertens_ratio;
}

double ftilde_ratio_deviation(PairedValue theta_n, std::uint64_t next_prime) {
    const double theta = theta_n.value();
    const double L = log_paired(theta_n);
    const double a = 1.0 / static_cast<double>(next_prime);
    const double D = std::log1p(std::log(static_cast<double>(next_prime)) / theta);
    return (a * L - D) / (L + D);
}

double ftilde_ratio_deviation(std::uint64_t n, const ThetaCache* cache, const EngineConfig& cfg) {
    if (n < 2) {
        throw DomainError("ftilde_ratio_deviation: n must be >= 2 (log log N_1 < 0)");
    }
    check_prime_index(n + 1, cfg);
    const ThetaPoint pt = theta_at(n, cache, cfg);
    return ftilde_ratio_deviation(pt.theta(), next_prime_after(pt.prime, cfg));
}

double k_ratio(std::uint64_t prime, std::uint64_t next_prime) {
    const double p = static_cast<double>(prime);
    const double q = static_cast<double>(next_prime);
    const double k = p + 0.5 * std::sqrt(p) * std::log(std::log(std::log(p)));
    return k * std::log(k) / (q * std::log(q));
}

double k_ratio(std::uint64_t n, const EngineConfig& cfg) {
    if (n < 7) {
        throw DomainError("k_ratio: n must be >= 7 (p_n > e^e)");
    }
    check_prime_index(n + 1, cfg);
    const std::uint64_t p = nth_prime(n, cfg);
    return k_ratio(p, next_prime_after(p, cfg));
}

std::uint64_t first_bound_index(const EngineConfig& cfg) {
    std::uint64_t index = 0;
    for_each_prime(
        0, 2 * kPrimorialBoundMinPrime,
        [&](std::uint64_t p) {
            ++index;
            return p < kPrimorialBoundMinPrime;
        },
        cfg);
    return index;
}

double f_primorial_bound_rhs(std::uint64_t prime) {
    const double lp = std::log(static_cast<double>(prime));
    return kFBoundSlope * lp + kFBoundOffset / lp;
}

namespace {

struct BoundTracker {
    BoundCheckResult result;

    BoundTracker(BoundKind kind, std::uint64_t first, std::uint64_t last) {
        result.bound = kind;
        result.first = first;
        result.last = last;
        result.worst_margin = std::numeric_limits<double>::infinity();
    }

    void add(std::uint64_t index, double margin) {
        ++result.cases_checked;
        if (margin < result.worst_margin) {
            result.worst_margin = margin;
            result.witness = index;
        }
    }

    BoundCheckResult finish() {
        result.pass = result.worst_margin > 0.0;
        return result;
    }
};

void check_bound_range(std::uint64_t first, std::uint64_t last, const EngineConfig& cfg) {
    if (first == 0 || last < first) {
        throw DomainError("bound check: need 1 <= first <= last");
    }
    check_prime_index(last, cfg);
    if (const std::uint64_t p = nth_prime(first, cfg); p < kPrimorialBoundMinPrime) {
        throw DomainError("bound check: p_first = " + std::to_string(p) +
                          " < 20000, the bound is not claimed there");
    }
}

} // namespace

std::pair<BoundCheckResult, BoundCheckResult> check_primorial_bounds(std::uint64_t first, std::uint64_t last,
                                                                     const EngineConfig& cfg) {
    check_bound_range(first, last, cfg);
    BoundTracker loglog(BoundKind::loglogN_lower, first, last);
    BoundTracker fbound(BoundKind::f_primorial_upper, first, last);
    for_each_primorial(
        last,
        [&](const PrimorialStats& s) {
            if (s.index < first) {
                return;
            }
            const double lp = std::log(static_cast<double>(s.prime));
            loglog.add(s.index, s.loglogN - (lp - kLogLogNOffset / lp));
            fbound.add(s.index, (kFBoundSlope * lp + kFBoundOffset / lp) - s.f_value);
        },
        cfg);
    return {loglog.finish(), fbound.finish()};
}

BoundCheckResult check_loglogN_lower_bound(std::uint64_t first, std::uint64_t last, const EngineConfig& cfg) {
    return check_primorial_bounds(first, last, cfg).first;
}

BoundCheckResult check_f_primorial_bound(std::uint64_t first, std::uint64_t last, const EngineConfig& cfg) {
    return check_primorial_bounds(first, last, cfg).second;
}

std::string format_fixed(double value, int decimals) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    // "-0.00" reads as a sign error in a table
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

const TableRow& NumericTable::row(std::string_view label) const {
    for (const TableRow& r : rows) {
        if (r.label == label) {
            return r;
        }
    }
    throw std::out_of_range("no table row " + std::string(label));
}

int table1_decimals(std::size_t row, std::uint64_t index, int fallback) {
    static const std::map<std::uint64_t, std::array<int, 3>> published = {
        {10, {3, 3, 3}},
        {1'000, {3, 7, 5}},
        {100'000, {5, 11, 6}},
        {10'000'000, {6, 14, 7}},
    };
    const auto it = published.find(index);
    return it == published.end() || row > 2 ? fallback : it->second[row];
}

int table2_decimals(std::uint64_t index, int fallback) {
    switch (index) {
    case 3:
    case 10:
    case 100:
    case 1'000:
    case 10'000:
    case 100'000:
        return 2;
    default:
        return fallback;
    }
}

namespace {

TableCell make_cell(std::uint64_t index, double value, int decimals) {
    return {index, value, decimals, format_fixed(value, decimals)};
}

} // namespace

NumericTable table1(std::span<const std::uint64_t> indices, const ThetaCache* cache, int fallback_decimals,
                    const EngineConfig& cfg) {
    NumericTable t;
    t.name = "table1";
    t.indices.assign(indices.begin(), indices.end());
    for (std::uint64_t n : indices) {
        if (n < 7) {
            throw DomainError("table1: index " + std::to_string(n) + " below 7");
        }
        check_prime_index(n + 1, cfg);
    }

    // theta(p_n) and p_{n+1} for every requested n
    std::map<std::uint64_t, std::pair<ThetaPoint, std::uint64_t>> points;
    if (cache != nullptr) {
        for (std::uint64_t n : indices) {
            const ThetaPoint pt = theta_at(n, cache, cfg);
            points[n] = {pt, next_prime_after(pt.prime, cfg)};
        }
    } else if (!indices.empty()) {
        std::vector<std::uint64_t> wanted;
        for (std::uint64_t n : indices) {
            wanted.push_back(n);
            wanted.push_back(n + 1);
        }
        const std::uint64_t n_max = *std::max_element(wanted.begin(), wanted.end());
        std::map<std::uint64_t, ThetaPoint> by_index;
        for (const ThetaPoint& pt : theta_stream(n_max, n_max + 1, wanted, cfg)) {
            by_index[pt.index] = pt;
        }
        for (std::uint64_t n : indices) {
            points[n] = {by_index.at(n), by_index.at(n + 1).prime};
        }
    }

    TableRow theta_over_p{"theta_over_p", {}};
    TableRow ratio{"ftilde_ratio", {}};
    TableRow kr{"k_ratio", {}};
    TableRow delta_row{"ftilde_delta", {}};
    TableRow hi_row{"theta_hi", {}};
    TableRow lo_row{"theta_lo", {}};
    for (std::uint64_t n : indices) {
        const auto& [pt, next] = points.at(n);
        const double delta = ftilde_ratio_deviation(pt.theta(), next);
        theta_over_p.cells.push_back(
            make_cell(n, pt.value() / static_cast<double>(pt.prime), table1_decimals(0, n, fallback_decimals)));
        ratio.cells.push_back(make_cell(n, 1.0 + delta, table1_decimals(1, n, fallback_decimals)));
        kr.cells.push_back(make_cell(n, k_ratio(pt.prime, next), table1_decimals(2, n, fallback_decimals)));
        delta_row.cells.push_back({n, delta, 0, ""});
        hi_row.cells.push_back({n, pt.theta_hi, 0, ""});
        lo_row.cells.push_back({n, pt.theta_lo, 0, ""});
    }
    t.rows = {theta_over_p, ratio, kr, delta_row, hi_row, lo_row};
    return t;
}

NumericTable table2(std::span<const std::uint64_t> indices, int fallback_decimals, const EngineConfig& cfg) {
    NumericTable t;
    t.name = "table2";
    t.indices.assign(indices.begin(), indices.end());
    std::uint64_t n_max = 0;
    for (std::uint64_t n : indices) {
        if (n == 0) {
            throw DomainError("table2: index must be >= 1");
        }
        check_prime_index(n, cfg);
        n_max = std::max(n_max, n);
    }
    std::map<std::uint64_t, PrimorialStats> by_index;
    for (const PrimorialStats& s : stats_stream(n_max, indices, cfg)) {
        by_index[s.index] = s;
    }
    TableRow f{"f_value", {}};
    TableRow psi{"psi_ratio", {}};
    TableRow loglog{"loglogN", {}};
    TableRow hi_row{"theta_hi", {}};
    TableRow lo_row{"theta_lo", {}};
    for (std::uint64_t n : indices) {
        const PrimorialStats& s = by_index.at(n);
        f.cells.push_back(make_cell(n, s.f_value, table2_decimals(n, fallback_decimals)));
        psi.cells.push_back({n, s.psi_ratio(), 0, ""});
        loglog.cells.push_back({n, s.loglogN, 0, ""});
        hi_row.cells.push_back({n, s.theta.hi, 0, ""});
        lo_row.cells.push_back({n, s.theta.lo, 0, ""});
    }
    t.rows = {f, psi, loglog, hi_row, lo_row};
    return t;
}

} // namespace psirh
