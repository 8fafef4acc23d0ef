#include "psirh/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <sstream>

#include "psirh/bfile.hpp"
#include "psirh/champions.hpp"
#include "psirh/constants.hpp"
#include "psirh/errors.hpp"
#include "psirh/primorial.hpp"
#include "psirh/theta.hpp"

#ifndef PSIRH_VERSION
#define PSIRH_VERSION "0.0.0"
#endif

namespace psirh {

std::string_view to_string(Command c) {
    switch (c) {
    case Command::scan: return "scan";
    case Command::champions: return "champions";
    case Command::superabundant: return "superabundant";
    case Command::props: return "props";
    case Command::table1: return "table1";
    case Command::table2: return "table2";
    case Command::bounds: return "bounds";
    case Command::mertens: return "mertens";
    case Command::oeis_check: return "oeis-check";
    }
    return "unknown";
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::md: return "md";
    case OutputFormat::json: return "json";
    }
    return "unknown";
}

std::string_view to_string(OeisSequence s) { return s == OeisSequence::A060735 ? "A060735" : "A004394"; }

std::optional<Command> parse_command(std::string_view text) {
    for (Command c : {Command::scan, Command::champions, Command::superabundant, Command::props, Command::table1,
                      Command::table2, Command::bounds, Command::mertens, Command::oeis_check}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

std::string tool_version() { return PSIRH_VERSION; }

std::string constants_digest() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double v : {Constants::gamma, Constants::e_gamma, Constants::zeta2, Constants::e_gamma_over_zeta2}) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof v);
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

const std::vector<std::uint64_t> kDefaultTable1 = {10, 1'000, 100'000, 10'000'000};
const std::vector<std::uint64_t> kDefaultTable2 = {3, 10, 100, 1'000, 10'000, 100'000};
const std::vector<std::uint64_t> kDefaultMertens = {10, 100, 1'000, 10'000, 100'000, 1'000'000, 10'000'000};

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

[[noreturn]] void usage_error(const std::string& what) { throw DomainError(what); }

void add_param(RenderedReport& r, const std::string& name, ReportValue v) {
    r.header.emplace_back("param." + name, std::move(v));
}

RenderedReport start_report(const RunConfig& cfg) {
    RenderedReport r;
    r.header.emplace_back("tool", std::string("psirh"));
    r.header.emplace_back("tool_version", tool_version());
    r.header.emplace_back("command", std::string(to_string(cfg.command)));
    return r;
}

void finish_header(RenderedReport& r) { r.header.emplace_back("constants_digest", constants_digest()); }

std::string big_to_string(const BigUInt& v) { return v.str(); }

// --- scan ---------------------------------------------------------------

RenderedReport scan_report(const RunConfig& cfg) {
    const std::uint64_t lo = cfg.lo.value_or(2);
    const std::uint64_t hi = cfg.hi.value_or(1'000'000);
    if (lo < 2) usage_error("--lo must be >= 2 (log log n undefined below 2)");
    if (hi <= lo) usage_error("--hi must exceed --lo");
    if (hi > kScanCeiling) throw ResourceError("--hi above scan ceiling " + std::to_string(kScanCeiling));
    if (cfg.chunk_size == 0) usage_error("--chunk must be >= 1");

    RenderedReport r = start_report(cfg);
    add_param(r, "criterion", std::string(to_string(cfg.criterion)));
    add_param(r, "lo", lo);
    add_param(r, "hi", hi);
    finish_header(r);

    const ExceptionReport rep = scan_exceptions(cfg.criterion, lo, hi, {cfg.chunk_size, 1});
    r.columns = {"n", "ratio", "threshold", "value", "precision_escalated"};
    for (std::uint64_t n : rep.exceptions) {
        const CriterionValue v = cfg.criterion == CriterionKind::robin_g ? robin_g(n) : dedekind_f(n);
        r.rows.push_back({n, v.ratio, v.threshold, v.value, v.precision_escalated});
    }
    r.summary.emplace_back("exceptions", static_cast<std::uint64_t>(rep.exceptions.size()));
    r.summary.emplace_back("largest", rep.largest ? ReportValue(*rep.largest) : ReportValue(std::string("none")));
    r.summary.emplace_back("escalations", rep.escalations);
    r.cases_checked = hi - lo;
    r.clean = rep.exceptions.empty();
    return r;
}

// --- champions / superabundant -----------------------------------------

RenderedReport champions_report(const RunConfig& cfg) {
    const std::uint64_t limit = cfg.limit.value_or(100'000);
    if (limit > kRecordScanCeiling) throw ResourceError("--limit above " + std::to_string(kRecordScanCeiling));
    RenderedReport r = start_report(cfg);
    add_param(r, "limit", limit);
    finish_header(r);

    const auto terms = generate_s_sequence(BigUInt(limit));
    const RecordScanResult sa = generate_superabundant(limit);
    std::map<std::uint64_t, bool> superabundant;
    for (const RatioRecord& rec : sa.records) {
        superabundant[rec.n] = true;
    }
    r.columns = {"i", "primorial_index", "multiplier", "value", "psi_ratio_log", "superabundant"};
    std::uint64_t i = 0;
    for (const ChampionNumber& c : terms) {
        const auto v = c.value.convert_to<std::uint64_t>();
        r.rows.push_back({++i, c.primorial_index, c.multiplier, big_to_string(c.value), c.psi_ratio_log,
                          superabundant.count(v) > 0});
    }
    const std::size_t both = count_superabundant(terms, sa);
    r.summary.emplace_back("terms", static_cast<std::uint64_t>(terms.size()));
    r.summary.emplace_back("superabundant_terms", static_cast<std::uint64_t>(both));
    r.summary.emplace_back("non_superabundant_fraction",
                           terms.empty() ? 0.0 : 1.0 - static_cast<double>(both) / static_cast<double>(terms.size()));
    r.cases_checked = limit;
    return r;
}

RenderedReport superabundant_report(const RunConfig& cfg) {
    const std::uint64_t limit = cfg.limit.value_or(100'000);
    if (limit > kRecordScanCeiling) throw ResourceError("--limit above " + std::to_string(kRecordScanCeiling));
    RenderedReport r = start_report(cfg);
    add_param(r, "limit", limit);
    finish_header(r);

    const RecordScanResult sa = generate_superabundant(limit);
    const auto terms = generate_s_sequence(BigUInt(limit));
    r.columns = {"n", "sigma", "ratio", "in_S"};
    for (const RatioRecord& rec : sa.records) {
        const bool in_s = std::any_of(terms.begin(), terms.end(),
                                      [&](const ChampionNumber& c) { return c.value == rec.n; });
        r.rows.push_back({rec.n, to_string(rec.ratio_num),
                          static_cast<double>(rec.ratio_num) / static_cast<double>(rec.ratio_den), in_s});
    }
    r.summary.emplace_back("records", static_cast<std::uint64_t>(sa.records.size()));
    r.summary.emplace_back("overlap_with_S", static_cast<std::uint64_t>(count_superabundant(terms, sa)));
    r.cases_checked = limit;
    return r;
}

// --- props ----------------------------------------------------------------

RenderedReport props_report(const RunConfig& cfg) {
    const std::uint64_t limit = cfg.limit.value_or(1'000'000);
    if (limit > kProp1Ceiling) throw ResourceError("--limit above " + std::to_string(kProp1Ceiling));
    if (cfg.k_max > kIdentityMaxK) throw ResourceError("--kmax above 14");
    const std::uint64_t prop2_limit = std::min(limit, kProp2Ceiling);
    RenderedReport r = start_report(cfg);
    add_param(r, "limit", limit);
    add_param(r, "prop2_limit", prop2_limit);
    add_param(r, "kmax", cfg.k_max);
    finish_header(r);

    r.columns = {"proposition", "limit", "cases_checked", "failures", "pass", "first_failure_n"};
    for (const PropositionCheck& c :
         {verify_prop1(limit), verify_prop2(prop2_limit), psi_multiple_identity_check(cfg.k_max)}) {
        r.rows.push_back({std::string(to_string(c.proposition)), c.limit, c.cases_checked,
                          static_cast<std::uint64_t>(c.failures.size()), c.pass(),
                          c.failures.empty() ? ReportValue(std::string("none")) : ReportValue(c.failures.front().n)});
        r.cases_checked += c.cases_checked;
        r.clean = r.clean && c.pass();
    }
    return r;
}

// --- tables ---------------------------------------------------------------

std::optional<ThetaCache> obtain_cache(const RunConfig& cfg, std::uint64_t n_max) {
    if (!cfg.cache_path) {
        return std::nullopt;
    }
    if (cfg.cache_stride == 0) usage_error("--stride must be >= 1");
    const std::filesystem::path path(*cfg.cache_path);
    if (std::filesystem::exists(path)) {
        ThetaCache cache = cache_load(path);
        if (!cache.points.empty() && cache.points.back().index >= n_max - n_max % cache.checkpoint_stride) {
            return cache;
        }
    }
    ThetaCache cache = build_theta_cache(n_max, cfg.cache_stride);
    cache_save(cache, path);
    return cache;
}

std::vector<std::vector<std::string>> grid_from(const NumericTable& t, std::initializer_list<const char*> labels) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head = {"n"};
    for (std::uint64_t n : t.indices) {
        head.push_back(std::to_string(n));
    }
    grid.push_back(head);
    for (const char* label : labels) {
        std::vector<std::string> line = {label};
        for (const TableCell& cell : t.row(label).cells) {
            line.push_back(cell.printed);
        }
        grid.push_back(line);
    }
    return grid;
}

RenderedReport table1_report(const RunConfig& cfg) {
    const std::vector<std::uint64_t> indices = cfg.indices.empty() ? kDefaultTable1 : cfg.indices;
    for (std::uint64_t n : indices) {
        if (n < 7) usage_error("--indices: table1 needs every index >= 7");
    }
    const std::uint64_t n_max = *std::max_element(indices.begin(), indices.end());
    check_prime_index(n_max + 1, EngineConfig{});
    RenderedReport r = start_report(cfg);
    add_param(r, "indices", join(indices));
    if (cfg.cache_path) add_param(r, "cache", *cfg.cache_path);
    finish_header(r);

    const auto cache = obtain_cache(cfg, n_max);
    const NumericTable t = table1(indices, cache ? &*cache : nullptr, cfg.precision_digits);
    r.columns = {"n",           "theta_over_p",  "theta_over_p_printed", "ftilde_ratio", "ftilde_ratio_printed",
                 "ftilde_delta", "k_ratio",      "k_ratio_printed",      "theta_hi",     "theta_lo"};
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const TableCell& a = t.row("theta_over_p").cells[i];
        const TableCell& b = t.row("ftilde_ratio").cells[i];
        const TableCell& k = t.row("k_ratio").cells[i];
        r.rows.push_back({indices[i], a.value, a.printed, b.value, b.printed, t.row("ftilde_delta").cells[i].value,
                          k.value, k.printed, t.row("theta_hi").cells[i].value, t.row("theta_lo").cells[i].value});
    }
    r.markdown_grid = grid_from(t, {"theta_over_p", "ftilde_ratio", "k_ratio"});
    r.cases_checked = indices.size();
    return r;
}

RenderedReport table2_report(const RunConfig& cfg) {
    const std::vector<std::uint64_t> indices = cfg.indices.empty() ? kDefaultTable2 : cfg.indices;
    for (std::uint64_t n : indices) {
        if (n == 0) usage_error("--indices: table2 needs every index >= 1");
    }
    check_prime_index(*std::max_element(indices.begin(), indices.end()), EngineConfig{});
    RenderedReport r = start_report(cfg);
    add_param(r, "indices", join(indices));
    finish_header(r);

    const NumericTable t = table2(indices, 2);
    r.columns = {"n", "f_value", "f_value_printed", "psi_ratio", "loglogN", "theta_hi", "theta_lo"};
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const TableCell& f = t.row("f_value").cells[i];
        r.rows.push_back({indices[i], f.value, f.printed, t.row("psi_ratio").cells[i].value,
                          t.row("loglogN").cells[i].value, t.row("theta_hi").cells[i].value,
                          t.row("theta_lo").cells[i].value});
    }
    r.markdown_grid = grid_from(t, {"f_value"});
    r.cases_checked = indices.size();
    return r;
}

// --- bounds / mertens -----------------------------------------------------

RenderedReport bounds_report(const RunConfig& cfg) {
    const std::uint64_t last = cfg.limit.value_or(10'000'000);
    const std::uint64_t sigma_lo = cfg.lo.value_or(3);
    const std::uint64_t sigma_hi = cfg.hi.value_or(1'000'000);
    if (sigma_lo < 3) usage_error("--lo must be >= 3 for the sigma bound");
    if (sigma_hi <= sigma_lo) usage_error("--hi must exceed --lo");
    if (sigma_hi > kScanCeiling) throw ResourceError("--hi above scan ceiling");
    check_prime_index(last, EngineConfig{});
    const std::uint64_t first = first_bound_index();
    if (last < first) usage_error("--limit must be >= " + std::to_string(first) + " (first index with p_n >= 20000)");

    RenderedReport r = start_report(cfg);
    add_param(r, "limit", last);
    add_param(r, "lo", sigma_lo);
    add_param(r, "hi", sigma_hi);
    add_param(r, "c", cfg.sigma_bound_c);
    finish_header(r);

    const auto [loglog, fbound] = check_primorial_bounds(first, last);
    const BoundCheckResult sigma = check_sigma_upper_bound(sigma_lo, sigma_hi, cfg.sigma_bound_c, {cfg.chunk_size, 1});
    r.columns = {"bound", "first", "last", "pass", "worst_margin", "witness", "cases_checked"};
    for (const BoundCheckResult& b : {loglog, fbound, sigma}) {
        r.rows.push_back({std::string(to_string(b.bound)), b.first, b.last, b.pass, b.worst_margin, b.witness,
                          b.cases_checked});
        r.cases_checked += b.cases_checked;
        r.clean = r.clean && b.pass;
    }
    r.summary.emplace_back("f_bound_rhs_at_first", f_primorial_bound_rhs(nth_prime(first)));
    r.summary.emplace_back("e_gamma_times_inv_zeta2_minus_one",
                           Constants::e_gamma * (1.0 / Constants::zeta2 - 1.0));
    return r;
}

RenderedReport mertens_report(const RunConfig& cfg) {
    std::vector<std::uint64_t> indices = cfg.indices.empty() ? kDefaultMertens : cfg.indices;
    for (std::uint64_t n : indices) {
        if (n < 2) usage_error("--indices: mertens needs every index >= 2");
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    check_prime_index(indices.back(), EngineConfig{});
    RenderedReport r = start_report(cfg);
    add_param(r, "indices", join(indices));
    finish_header(r);

    r.columns = {"n", "prime", "mertens_ratio", "deviation"};
    double previous = INFINITY;
    bool decreasing = true;
    for (const PrimorialStats& s : stats_stream(indices.back(), indices)) {
        const double dev = std::fabs(s.mertens_ratio - Constants::e_gamma_over_zeta2);
        decreasing = decreasing && dev < previous;
        previous = dev;
        r.rows.push_back({s.index, s.prime, s.mertens_ratio, dev});
    }
    r.summary.emplace_back("limit", Constants::e_gamma_over_zeta2);
    r.summary.emplace_back("deviation_strictly_decreasing", decreasing);
    r.cases_checked = indices.size();
    r.clean = decreasing;
    return r;
}

// --- oeis-check -------------------------------------------------------------

RenderedReport oeis_report(const RunConfig& cfg) {
    if (!cfg.bfile_path) usage_error("--bfile is required for oeis-check");
    if (!cfg.sequence) usage_error("--sequence is required for oeis-check");
    if (cfg.count && *cfg.count == 0) usage_error("--count must be >= 1");
    const auto entries = read_bfile(*cfg.bfile_path);
    const std::size_t wanted = cfg.count ? static_cast<std::size_t>(*cfg.count) : entries.size();

    RenderedReport r = start_report(cfg);
    add_param(r, "bfile", *cfg.bfile_path);
    add_param(r, "sequence", std::string(to_string(*cfg.sequence)));
    add_param(r, "count", static_cast<std::uint64_t>(wanted));
    finish_header(r);

    const std::size_t compared_entries = std::min(wanted, entries.size());
    BigUInt max_value = 0;
    for (std::size_t i = 0; i < compared_entries; ++i) {
        max_value = std::max(max_value, entries[i].value);
    }

    std::vector<BigUInt> generated;
    bool leading_one = compared_entries > 0 && entries.front().value == 1;
    if (*cfg.sequence == OeisSequence::A060735) {
        if (leading_one) {
            generated.emplace_back(1); // vacuous n = 1 term of the OEIS listing
        }
        for (ChampionNumber& c : generate_s_sequence(max_value)) {
            generated.push_back(std::move(c.value));
        }
    } else {
        const BigUInt ceiling(kRecordScanCeiling);
        const auto limit = (max_value < ceiling ? max_value : ceiling).convert_to<std::uint64_t>();
        for (const RatioRecord& rec : generate_superabundant(limit).records) {
            generated.emplace_back(rec.n);
        }
    }

    r.columns = {"index", "bfile_value", "generated_value", "match"};
    std::optional<std::uint64_t> first_mismatch;
    const std::size_t n = std::min(compared_entries, generated.size());
    for (std::size_t i = 0; i < n; ++i) {
        const bool match = entries[i].value == generated[i];
        if (!match && !first_mismatch) {
            first_mismatch = entries[i].index;
        }
        r.rows.push_back({entries[i].index, big_to_string(entries[i].value), big_to_string(generated[i]), match});
    }
    const bool truncated = n < wanted;
    r.summary.emplace_back("compared", static_cast<std::uint64_t>(n));
    r.summary.emplace_back("truncated", truncated);
    r.summary.emplace_back("first_mismatch_index",
                           first_mismatch ? ReportValue(*first_mismatch) : ReportValue(std::string("none")));
    r.summary.emplace_back("agreement", !first_mismatch);
    r.cases_checked = n;
    r.clean = !first_mismatch;
    return r;
}

} // namespace

RenderedReport build_report(const RunConfig& config) {
    if (config.precision_digits < 1 || config.precision_digits > 17) {
        usage_error("--digits must be within 1..17");
    }
    const auto start = std::chrono::steady_clock::now();
    RenderedReport r;
    switch (config.command) {
    case Command::scan: r = scan_report(config); break;
    case Command::champions: r = champions_report(config); break;
    case Command::superabundant: r = superabundant_report(config); break;
    case Command::props: r = props_report(config); break;
    case Command::table1: r = table1_report(config); break;
    case Command::table2: r = table2_report(config); break;
    case Command::bounds: r = bounds_report(config); break;
    case Command::mertens: r = mertens_report(config); break;
    case Command::oeis_check: r = oeis_report(config); break;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const RenderedReport report = build_report(config);
        std::ostringstream buffer;
        render(report, config.format, config.precision_digits, buffer);
        out << buffer.str() << std::flush;
        return config.fail_on_exception && !report.clean ? kExitNotClean : kExitOk;
    } catch (const ResourceError& e) {
        err << "psirh: resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const DomainError& e) {
        err << "psirh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "psirh: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IncompatibleCacheError& e) {
        err << "psirh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "psirh: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace psirh
