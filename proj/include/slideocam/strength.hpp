#pragma once

/// Shaft sizing from the shear and bending limits, the Hertz line-contact
/// pressure between cam and roller, and cam-width sizing.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "kinetostatics.hpp"
#include "material.hpp"
#include "units.hpp"

namespace slideocam
{

/// Hertz coefficient for two cylinders of equal E and Poisson ratio.
inline constexpr double hertz_coefficient = 0.418;

struct ShaftDiameters
{
    double camshaft = 0.0; ///< phi_cam = 2 (e - a4) [m]
    double bearing = 0.0;  ///< phi_bear = 2 a4 [m]
};

[[nodiscard]] inline ShaftDiameters shaft_diameters(const DesignParameters& params) noexcept
{
    return {2.0 * (params.offset() - params.roller_radius), 2.0 * params.roller_radius};
}

enum class RadiusVariant
{
    PaperConstant,  ///< r_eq from the two shaft diameters, fixed over the sweep
    LocalCurvature, ///< r_eq from the local cam radius and the roller radius
};

[[nodiscard]] inline std::string_view to_string(RadiusVariant v) noexcept
{
    return v == RadiusVariant::PaperConstant ? "paper" : "local";
}

struct HertzSample
{
    double psi = 0.0;
    double pressure = 0.0; ///< [Pa]
};

struct HertzReport
{
    std::vector<HertzSample> sweep;
    double peak = 0.0;     ///< [Pa]
    double low = 0.0;      ///< [Pa]
    double r_eq_used = 0.0; ///< [m]; the smallest value used for LocalCurvature
    RadiusVariant variant = RadiusVariant::PaperConstant;
};

/// Bearing-shaft stress 8 Mt / (p phi^2) [Pa].
[[nodiscard]] inline double bearing_shaft_stress(double torque, double pitch, double diameter) noexcept
{
    return 8.0 * torque / (pitch * diameter * diameter);
}

/// Camshaft stress 8 Mt (2/(pi phi^3) + 1/(p phi^2)) [Pa].
[[nodiscard]] inline double camshaft_stress(double torque, double pitch, double diameter) noexcept
{
    return 8.0 * torque * (2.0 / (units::pi * diameter * diameter * diameter) + 1.0 / (pitch * diameter * diameter));
}

/// Smallest bearing-shaft diameter meeting the shear limit.
[[nodiscard]] inline double min_bearing_shaft_diameter(double torque, double pitch, double allowable)
{
    if (!(torque > 0.0 && pitch > 0.0 && allowable > 0.0))
        throw CamError(ErrorKind::InvalidArgument, "torque, pitch and stress limit must be positive");
    return std::sqrt(8.0 * torque / (pitch * allowable));
}

/// Smallest camshaft diameter meeting the combined shear+bending limit.
/// The stress is strictly decreasing in the diameter, so bisection on
/// [1 um, 1 m] finds the unique root.
[[nodiscard]] inline double min_camshaft_diameter(double torque, double pitch, double allowable)
{
    if (!(torque > 0.0 && pitch > 0.0 && allowable > 0.0))
        throw CamError(ErrorKind::InvalidArgument, "torque, pitch and stress limit must be positive");
    double lo = 1e-6;
    double hi = 1.0;
    if (camshaft_stress(torque, pitch, lo) < allowable || camshaft_stress(torque, pitch, hi) > allowable)
        throw CamError(ErrorKind::NoRootFound, "camshaft diameter outside [1 um, 1 m]");
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (camshaft_stress(torque, pitch, mid) > allowable ? lo : hi) = mid;
    }
    return hi;
}

/// Equivalent contact radius from the shaft diameters, 1/(2/phi_cam + 2/phi_bear).
[[nodiscard]] inline double equivalent_radius(double phi_cam, double phi_bear) noexcept
{
    return 1.0 / (2.0 / phi_cam + 2.0 / phi_bear);
}

/// Equivalent contact radius of a cam surface of radius r_cam against the roller.
[[nodiscard]] inline double equivalent_radius_local(double r_cam, double roller_radius) noexcept
{
    return 1.0 / (1.0 / r_cam + 1.0 / roller_radius);
}

/// P = 0.418 sqrt(F E / (a r_eq)).
[[nodiscard]] inline double hertz_pressure(double force, double young_modulus, double width, double r_eq) noexcept
{
    return hertz_coefficient * std::sqrt(force * young_modulus / (width * r_eq));
}

/// Width a at which the Hertz pressure reaches exactly p_max.
[[nodiscard]] inline double min_width(double force_max, double young_modulus, double r_eq, double p_max) noexcept
{
    return hertz_coefficient * hertz_coefficient * force_max * young_modulus / (r_eq * p_max * p_max);
}

/// Hertz pressure over the active interval (the cam only loads its roller there).
[[nodiscard]] inline HertzReport hertz_sweep(const DesignParameters& params, const ActiveInterval& interval,
                                             RadiusVariant variant, std::size_t n_samples = default_samples)
{
    HertzReport report;
    report.variant = variant;
    const ShaftDiameters d = shaft_diameters(params);
    const double constant_r_eq = equivalent_radius(d.camshaft, d.bearing);
    report.r_eq_used = variant == RadiusVariant::PaperConstant ? constant_r_eq : std::numeric_limits<double>::infinity();

    report.low = std::numeric_limits<double>::infinity();
    for (double psi : interval_grid(interval, n_samples))
    {
        double r_eq = constant_r_eq;
        if (variant == RadiusVariant::LocalCurvature)
        {
            r_eq = equivalent_radius_local(cam_radius(params, psi), params.roller_radius);
            report.r_eq_used = std::min(report.r_eq_used, r_eq);
        }
        const double p = hertz_pressure(transmitted_force(params, psi), params.material.young_modulus, params.width, r_eq);
        report.sweep.push_back({psi, p});
        report.peak = std::max(report.peak, p);
        report.low = std::min(report.low, p);
    }
    if (report.sweep.empty())
        report.low = 0.0;
    return report;
}

} // namespace slideocam
