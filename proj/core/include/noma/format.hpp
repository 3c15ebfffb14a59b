#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace noma {

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

}  // namespace noma
