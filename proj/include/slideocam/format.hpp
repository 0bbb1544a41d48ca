#pragma once

// Number formatting for files and responses: 9 significant digits, so that
// goldens stay byte-stable across runs.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace slideocam
{

inline constexpr int significant_digits = 9;

/// Magnitudes below this print as zero; they are rounding noise in mm, deg or MPa.
inline constexpr double format_zero_threshold = 1e-12;

/// Fixed-point text with 9 significant digits, e.g. 3.75 -> "3.75000000".
[[nodiscard]] inline std::string format_fixed(double value)
{
    if (!std::isfinite(value))
        return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
    if (std::abs(value) < format_zero_threshold)
        value = 0.0;
    int exponent = value == 0.0 ? 0 : static_cast<int>(std::floor(std::log10(std::abs(value))));
    int decimals = significant_digits - 1 - exponent;
    if (decimals < 0)
        decimals = 0;
    if (decimals > 30)
        decimals = 30;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string out(buf);
    if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-')
        out.erase(0, 1);
    return out;
}

/// Value rounded to 9 significant digits (for JSON output).
[[nodiscard]] inline double round_significant(double value)
{
    if (!std::isfinite(value) || value == 0.0)
        return value == 0.0 ? 0.0 : value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return std::strtod(buf, nullptr);
}

/// Shortest decimal form of `to(si)` that converts back to exactly `si`, so
/// that written configuration files re-read to identical SI values.
template <typename To, typename From>
[[nodiscard]] double round_trip_value(double si, To to, From from)
{
    if (!std::isfinite(si))
        return to(si);
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision)
    {
        std::snprintf(buf, sizeof buf, "%.*g", precision, to(si));
        const double candidate = std::strtod(buf, nullptr);
        if (from(candidate) == si)
            return candidate;
    }
    return to(si);
}

} // namespace slideocam
