#include "paracon/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "paracon/error.hpp"

namespace paracon {

std::string format_double(double x)
{
    if (!std::isfinite(x)) {
        throw InvariantError("attempted to format a non-finite value");
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        throw InvariantError("number formatting failed");
    }
    return std::string(buf.data(), end);
}

std::string format_percent(std::optional<double> x)
{
    if (!x) {
        return "—";
    }
    if (!std::isfinite(*x)) {
        throw InvariantError("attempted to format a non-finite value");
    }
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.1f", *x * 100.0);
    return buf.data();
}

std::string csv_row(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        const auto& c = cells[i];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out += c;
            continue;
        }
        out += '"';
        for (char ch : c) {
            if (ch == '"') {
                out += '"';
            }
            out += ch;
        }
        out += '"';
    }
    return out;
}

} // namespace paracon
