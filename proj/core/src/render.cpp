#include <cstdio>
#include <string>

#include "json.hpp"
#include "psirh/report.hpp"

namespace psirh {

namespace {

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string display(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string text(const ReportValue& v, bool full, int digits) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return full ? full_precision(x) : display(x, digits);
            } else {
                return std::to_string(x);
            }
        },
        v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

void render_csv(const RenderedReport& r, std::ostream& out) {
    for (const auto& [k, v] : r.header) {
        out << "# " << k << '=' << text(v, true, 17) << '\n';
    }
    for (const auto& [k, v] : r.summary) {
        out << "# summary." << k << '=' << text(v, true, 17) << '\n';
    }
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        out << (i ? "," : "") << r.columns[i];
    }
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(text(row[i], true, 17));
        }
        out << '\n';
    }
    out << "# cases_checked=" << r.cases_checked << '\n';
    out << "# runtime_ms=" << display(r.runtime_ms, 6) << '\n';
}

nlohmann::ordered_json to_json(const ReportValue& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

void render_json(const RenderedReport& r, std::ostream& out) {
    nlohmann::ordered_json doc;
    auto& header = doc["header"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.header) {
        header[k] = to_json(v);
    }
    auto& summary = doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.summary) {
        summary[k] = to_json(v);
    }
    doc["columns"] = r.columns;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        auto obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[r.columns[i]] = to_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    doc["footer"] = {{"cases_checked", r.cases_checked}, {"runtime_ms", r.runtime_ms}};
    out << doc.dump(2) << '\n';
}

void md_row(std::ostream& out, const std::vector<std::string>& cells) {
    out << '|';
    for (const auto& c : cells) {
        out << ' ' << c << " |";
    }
    out << '\n';
}

void render_md(const RenderedReport& r, int digits, std::ostream& out) {
    std::string command;
    for (const auto& [k, v] : r.header) {
        if (k == "command") {
            command = text(v, true, 17);
        }
    }
    out << "## psirh " << command << "\n\n";
    for (const auto& [k, v] : r.header) {
        out << "- " << k << ": " << text(v, true, 17) << '\n';
    }
    for (const auto& [k, v] : r.summary) {
        out << "- **" << k << "**: " << text(v, false, digits) << '\n';
    }
    out << '\n';
    std::vector<std::vector<std::string>> grid = r.markdown_grid;
    if (grid.empty()) {
        grid.push_back(r.columns);
        for (const auto& row : r.rows) {
            std::vector<std::string> cells;
            for (const auto& v : row) {
                cells.push_back(text(v, false, digits));
            }
            grid.push_back(std::move(cells));
        }
    }
    if (!grid.empty()) {
        md_row(out, grid.front());
        md_row(out, std::vector<std::string>(grid.front().size(), "---:"));
        for (std::size_t i = 1; i < grid.size(); ++i) {
            md_row(out, grid[i]);
        }
    }
    out << "\n_cases checked: " << r.cases_checked << ", runtime: " << display(r.runtime_ms, 6) << " ms_\n";
}

} // namespace

void render(const RenderedReport& report, OutputFormat format, int digits, std::ostream& out) {
    switch (format) {
    case OutputFormat::csv:
        render_csv(report, out);
        break;
    case OutputFormat::json:
        render_json(report, out);
        break;
    case OutputFormat::md:
        render_md(report, digits, out);
        break;
    }
}

} // namespace psirh
