#include "psirh/bfile.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "psirh/errors.hpp"

namespace psirh {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view next_token(std::string_view& rest) {
    std::size_t i = 0;
    while (i < rest.size() && is_blank(rest[i])) {
        ++i;
    }
    std::size_t j = i;
    while (j < rest.size() && !is_blank(rest[j])) {
        ++j;
    }
    const std::string_view token = rest.substr(i, j - i);
    rest.remove_prefix(j);
    return token;
}

bool all_digits(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

} // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        if (!rest.empty() && rest.back() == '\r') {
            rest.remove_suffix(1);
        }
        const std::string_view first = next_token(rest);
        if (first.empty() || first.front() == '#') {
            continue;
        }
        const std::string_view second = next_token(rest);
        const std::string_view extra = next_token(rest);
        // OEIS indices may be negative in general; the sequences used here start at 0 or 1
        if (!all_digits(first) || !all_digits(second) || !extra.empty()) {
            throw ParseError(line_no, "expected '<index> <value>' with non-negative integers");
        }
        BFileEntry e;
        e.line = line_no;
        const auto res = std::from_chars(first.data(), first.data() + first.size(), e.index);
        if (res.ec != std::errc{}) {
            throw ParseError(line_no, "index out of range");
        }
        e.value = BigUInt(std::string(second));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BFileEntry> read_bfile(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open b-file " + path.string());
    }
    return parse_bfile(f);
}

} // namespace psirh
