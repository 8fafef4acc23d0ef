#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psirh/criteria.hpp"

namespace psirh {

enum class Command { scan, champions, superabundant, props, table1, table2, bounds, mertens, oeis_check };
enum class OutputFormat { csv, md, json };
enum class OeisSequence { A060735, A004394 };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
std::string_view to_string(OeisSequence s);
std::optional<Command> parse_command(std::string_view text);

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotClean = 1; // only with fail_on_exception
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct RunConfig {
    Command command = Command::scan;
    std::optional<std::uint64_t> lo;
    std::optional<std::uint64_t> hi;
    CriterionKind criterion = CriterionKind::dedekind_f;
    std::vector<std::uint64_t> indices;
    std::optional<std::uint64_t> limit;
    OutputFormat format = OutputFormat::csv;
    int precision_digits = 6;
    std::optional<std::string> cache_path;
    std::optional<std::string> bfile_path;
    std::optional<OeisSequence> sequence;
    std::optional<std::uint64_t> count;
    bool fail_on_exception = false;
    double sigma_bound_c = kDefaultSigmaBoundConstant;
    std::uint64_t k_max = 14;
    std::uint64_t chunk_size = 1 << 16;
    std::uint64_t cache_stride = 100'000;
};

using ReportValue = std::variant<std::string, std::uint64_t, std::int64_t, double, bool>;
using ReportField = std::pair<std::string, ReportValue>;

struct RenderedReport {
    std::vector<ReportField> header;  // command, parameters, constants digest, tool version
    std::vector<ReportField> summary; // deterministic results of the run
    std::vector<std::string> columns;
    std::vector<std::vector<ReportValue>> rows;
    // When non-empty, Markdown renders this grid (first row is the header) instead of rows.
    std::vector<std::vector<std::string>> markdown_grid;
    std::uint64_t cases_checked = 0;
    double runtime_ms = 0.0;
    bool clean = true; // no exceptions, failures or mismatches found
};

std::string tool_version();

// FNV-1a over the binary64 constants, printed as 16 hex digits.
std::string constants_digest();

// Builds the report for config. Throws the module errors (DomainError,
// ResourceError, ParseError, IncompatibleCacheError) on bad input.
RenderedReport build_report(const RunConfig& config);

// Renders with 17 significant digits for every binary64 value (CSV, JSON);
// Markdown rounds to digits significant digits for display.
void render(const RenderedReport& report, OutputFormat format, int digits, std::ostream& out);

// build_report + render, mapping errors to exit statuses; messages go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace psirh
