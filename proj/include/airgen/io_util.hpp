#pragma once

#include <charconv>
#include <string>

#include "airgen/errors.hpp"

namespace airgen {

/// Shortest decimal form that parses back to the same double. Keeps CSV
/// artifacts compact, lossless, and byte-stable across runs.
inline std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
        throw DataError("bad number: '" + s + "'");
    }
    return v;
}

} // namespace airgen
