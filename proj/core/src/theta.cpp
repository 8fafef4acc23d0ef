#include "psirh/theta.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "psirh/errors.hpp"

namespace psirh {

std::vector<ThetaPoint> theta_stream(std::uint64_t n_max, std::uint64_t stride,
                                     std::span<const std::uint64_t> extra_indices,
                                     const EngineConfig& cfg) {
    if (stride == 0) {
        throw DomainError("theta_stream: stride must be >= 1");
    }
    check_prime_index(n_max, cfg);
    std::vector<std::uint64_t> wanted;
    for (std::uint64_t i : extra_indices) {
        if (i >= 1 && i <= n_max) {
            wanted.push_back(i);
        }
    }
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<ThetaPoint> out;
    auto next_extra = wanted.begin();
    for_each_theta(
        n_max,
        [&](const ThetaPoint& pt) {
            bool keep = pt.index % stride == 0;
            if (next_extra != wanted.end() && *next_extra == pt.index) {
                keep = true;
                ++next_extra;
            }
            if (keep) {
                out.push_back(pt);
            }
        },
        cfg);
    return out;
}

ThetaCache build_theta_cache(std::uint64_t n_max, std::uint64_t stride, const EngineConfig& cfg) {
    ThetaCache cache;
    cache.checkpoint_stride = stride;
    cache.points = theta_stream(n_max, stride, {}, cfg);
    return cache;
}

std::string format_hex_float(double x) {
    char buf[64];
    char* p = buf;
    if (std::signbit(x)) {
        *p++ = '-';
        x = -x;
    }
    *p++ = '0';
    *p++ = 'x';
    const auto res = std::to_chars(p, buf + sizeof buf, x, std::chars_format::hex);
    return std::string(buf, res.ptr);
}

bool parse_hex_float(std::string_view text, double& out) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.size() < 3 || text.substr(0, 2) != "0x" || text.find('p') == std::string_view::npos) {
        return false;
    }
    text.remove_prefix(2);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v, std::chars_format::hex);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        return false;
    }
    out = negative ? -v : v;
    return true;
}

void cache_save(const ThetaCache& cache, const std::filesystem::path& path) {
    std::ostringstream os;
    os << "psicache v" << cache.format_version << " stride=" << cache.checkpoint_stride << '\n';
    for (const ThetaPoint& pt : cache.points) {
        os << pt.index << ' ' << pt.prime << ' ' << format_hex_float(pt.theta_hi) << ' '
           << format_hex_float(pt.theta_lo) << '\n';
    }
    // write-then-rename so a crashed run never leaves a half-written cache behind
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        const std::string text = os.str();
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!f) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
    if (s.empty()) {
        return false;
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t next = line.find(' ', pos);
        const std::size_t end = next == std::string_view::npos ? line.size() : next;
        out.push_back(line.substr(pos, end - pos));
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

} // namespace

ThetaCache cache_load(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open theta cache " + path.string());
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();

    ThetaCache cache;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++line_no;
        const std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            throw ParseError(line_no, "truncated line (missing LF terminator)");
        }
        const std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;

        if (line_no == 1) {
            const auto fields = split_spaces(line);
            if (fields.size() != 3 || fields[0] != "psicache" || fields[1].size() < 2 ||
                fields[1][0] != 'v') {
                throw ParseError(line_no, "bad header, expected 'psicache v<version> stride=<k>'");
            }
            std::uint64_t version = 0;
            if (!parse_u64(fields[1].substr(1), version)) {
                throw ParseError(line_no, "bad format version");
            }
            if (version != ThetaCache::kFormatVersion) {
                throw IncompatibleCacheError("theta cache " + path.string() + " has format version " +
                                             std::to_string(version) + ", this build reads v" +
                                             std::to_string(ThetaCache::kFormatVersion));
            }
            if (fields[2].substr(0, 7) != "stride=" ||
                !parse_u64(fields[2].substr(7), cache.checkpoint_stride) || cache.checkpoint_stride == 0) {
                throw ParseError(line_no, "bad stride");
            }
            continue;
        }

        const auto fields = split_spaces(line);
        ThetaPoint pt;
        if (fields.size() != 4 || !parse_u64(fields[0], pt.index) || !parse_u64(fields[1], pt.prime) ||
            !parse_hex_float(fields[2], pt.theta_hi) || !parse_hex_float(fields[3], pt.theta_lo)) {
            throw ParseError(line_no, "expected '<index> <prime> <theta_hi> <theta_lo>'");
        }
        if (pt.index == 0 || pt.index % cache.checkpoint_stride != 0) {
            throw ParseError(line_no, "index is not a multiple of the stride");
        }
        if (!cache.points.empty() && pt.index <= cache.points.back().index) {
            throw ParseError(line_no, "indices must increase");
        }
        cache.points.push_back(pt);
    }
    if (line_no == 0) {
        throw ParseError(1, "empty cache file");
    }
    return cache;
}

ThetaPoint theta_at(std::uint64_t n, const ThetaCache* cache, const EngineConfig& cfg) {
    if (n == 0) {
        throw DomainError("theta_at: index must be >= 1");
    }
    check_prime_index(n, cfg);
    ThetaPoint start{};
    if (cache != nullptr) {
        auto it = std::upper_bound(cache->points.begin(), cache->points.end(), n,
                                   [](std::uint64_t v, const ThetaPoint& pt) { return v < pt.index; });
        if (it != cache->points.begin()) {
            start = *std::prev(it);
        }
    }
    if (start.index == n) {
        return start;
    }
    if (start.index == 0) {
        ThetaPoint result{};
        for_each_theta(n, [&](const ThetaPoint& pt) { result = pt; }, cfg);
        return result;
    }
    // resume from the checkpoint prime; 2048 exceeds every prime gap below 2^64
    CompensatedSum acc(start.theta());
    ThetaPoint result = start;
    const std::uint64_t remaining = n - start.index;
    const std::uint64_t hi =
        start.prime + 2048 + static_cast<std::uint64_t>(2.0 * static_cast<double>(remaining) *
                                                      std::log(static_cast<double>(start.prime) + 16.0));
    for_each_prime(
        start.prime + 1, hi,
        [&](std::uint64_t p) {
            acc += std::log(static_cast<double>(p));
            ++result.index;
            result.prime = p;
            const PairedValue t = acc.paired();
            result.theta_hi = t.hi;
            result.theta_lo = t.lo;
            return result.index < n;
        },
        cfg);
    if (result.index != n) {
        throw std::logic_error("theta_at: resume window too small");
    }
    return result;
}

} // namespace psirh
