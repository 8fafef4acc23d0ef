#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <vector>

#include "psirh/bigint.hpp"

namespace psirh {

struct BFileEntry {
    std::uint64_t index = 0;
    BigUInt value;
    std::size_t line = 0; // 1-based source line
};

// OEIS b-file: "<index> <value>" per line; '#' comments and blank lines are
// skipped; CR before LF is tolerated. Throws ParseError naming the line.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> read_bfile(const std::filesystem::path& path);

} // namespace psirh
