// psirh: exception scans, champion sequences and primorial tables for the
// Dedekind-psi form of Robin's criterion.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "psirh/report.hpp"

namespace {

std::vector<std::uint64_t> parse_indices(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw CLI::ValidationError("--indices", "expected a comma-separated list of positive integers");
        }
        out.push_back(std::stoull(item));
    }
    if (out.empty()) {
        throw CLI::ValidationError("--indices", "empty list");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"psirh: Dedekind psi refinement of Robin's criterion, numerical checks"};
    app.set_version_flag("--version", psirh::tool_version());

    psirh::RunConfig cfg;
    std::string command;
    std::string criterion = "f";
    std::string indices;
    std::string format = "csv";
    std::string sequence;
    std::uint64_t lo = 0, hi = 0, limit = 0, count = 0;
    std::string cache, bfile;

    app.add_option("command", command,
                   "scan | champions | superabundant | props | table1 | table2 | bounds | mertens | oeis-check")
        ->required();
    auto* lo_opt = app.add_option("--lo", lo, "range start (inclusive)");
    auto* hi_opt = app.add_option("--hi", hi, "range end (exclusive)");
    app.add_option("--criterion", criterion, "f (Dedekind psi) or g (Robin sigma)")
        ->check(CLI::IsMember({"f", "g"}));
    auto* idx_opt = app.add_option("--indices", indices, "comma-separated primorial indices");
    auto* limit_opt = app.add_option("--limit", limit, "upper limit / last primorial index");
    app.add_option("--format", format, "csv | md | json")->check(CLI::IsMember({"csv", "md", "json"}));
    app.add_option("--digits", cfg.precision_digits, "significant digits for Markdown display");
    auto* cache_opt = app.add_option("--cache", cache, "theta checkpoint cache file");
    app.add_option("--stride", cfg.cache_stride, "checkpoint stride when building a cache");
    auto* bfile_opt = app.add_option("--bfile", bfile, "OEIS b-file to cross-check");
    auto* seq_opt = app.add_option("--sequence", sequence, "A060735 | A004394")
                        ->check(CLI::IsMember({"A060735", "A004394"}));
    auto* count_opt = app.add_option("--count", count, "number of b-file terms to compare");
    app.add_option("--c", cfg.sigma_bound_c, "constant of the sigma upper bound");
    app.add_option("--kmax", cfg.k_max, "largest primorial index for the psi(l N_k) identity");
    app.add_option("--chunk", cfg.chunk_size, "scan chunk size");
    app.add_flag("--fail-on-exception", cfg.fail_on_exception, "exit 1 when the report is not clean");

    try {
        app.parse(argc, argv);
        const auto parsed = psirh::parse_command(command);
        if (!parsed) {
            throw CLI::ValidationError("command", "unknown command '" + command + "'");
        }
        cfg.command = *parsed;
        if (*lo_opt) cfg.lo = lo;
        if (*hi_opt) cfg.hi = hi;
        if (*limit_opt) cfg.limit = limit;
        if (*count_opt) cfg.count = count;
        if (*cache_opt) cfg.cache_path = cache;
        if (*bfile_opt) cfg.bfile_path = bfile;
        if (*seq_opt) cfg.sequence = sequence == "A060735" ? psirh::OeisSequence::A060735 : psirh::OeisSequence::A004394;
        if (*idx_opt) cfg.indices = parse_indices(indices);
        cfg.criterion = criterion == "g" ? psirh::CriterionKind::robin_g : psirh::CriterionKind::dedekind_f;
        cfg.format = format == "md"     ? psirh::OutputFormat::md
                     : format == "json" ? psirh::OutputFormat::json
                                        : psirh::OutputFormat::csv;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        std::cerr << "psirh: " << e.what() << '\n';
        return psirh::kExitUsage;
    }
    return psirh::run(cfg, std::cout, std::cerr);
}
