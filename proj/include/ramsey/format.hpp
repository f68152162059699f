#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

namespace ramsey {

// Shortest text that parses back to the same double; "inf" for +inf.
inline std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Inverse of format_number. Returns false on anything but a complete number.
inline bool parse_number(std::string_view text, double& out) {
    if (text == "inf" || text == "Inf" || text == "+inf") {
        out = HUGE_VAL;
        return true;
    }
    if (text == "-inf") {
        out = -HUGE_VAL;
        return true;
    }
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc() && res.ptr == text.data() + text.size() && !text.empty();
}

}  // namespace ramsey
