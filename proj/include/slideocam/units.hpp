#pragma once

// Boundary unit conversions. Everything inside the library is SI
// (m, rad, N, Pa, N*m); files, the CLI and the HTTP API speak mm, deg, MPa.

#include <numbers>

namespace slideocam::units
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double mm = 1e-3;
inline constexpr double MPa = 1e6;
inline constexpr double GPa = 1e9;
inline constexpr double deg = pi / 180.0;

constexpr double from_mm(double v) noexcept { return v * mm; }
constexpr double to_mm(double v) noexcept { return v / mm; }
constexpr double from_deg(double v) noexcept { return v * deg; }
constexpr double to_deg(double v) noexcept { return v / deg; }
constexpr double from_MPa(double v) noexcept { return v * MPa; }
constexpr double to_MPa(double v) noexcept { return v / MPa; }

} // namespace slideocam::units
