// Locale-independent number formatting (std::to_chars based).
#pragma once

#include <charconv>
#include <string>

namespace oval8 {

/// Fixed-point with `places` digits after the decimal point.
inline std::string fmt_fixed(double value, int places) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, places);
    return std::string(buf, res.ptr);
}

/// `digits` significant digits, mixed fixed/scientific like printf %g.
inline std::string fmt_sig(double value, int digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

/// Shortest representation that round-trips.
inline std::string fmt_shortest(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace oval8
