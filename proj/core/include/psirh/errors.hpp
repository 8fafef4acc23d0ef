#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psirh {

// Precondition violated by the caller (n = 0, hi <= lo, p_first < 20000, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured ceiling (sieve bound, prime index, scan range) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Cache file written by an incompatible format version; never reused silently.
class IncompatibleCacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace psirh
