#pragma once

/// Pressure angle, active interval, transmitted force and curvature of the
/// pitch curve and cam profile.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "units.hpp"

namespace slideocam
{

/// Range of cam angles over which one cam pushes its roller. The end may
/// exceed 2 pi; the cam angle is periodic and is wrapped only for display.
struct ActiveInterval
{
    double start = 0.0;
    double end = 0.0;

    [[nodiscard]] double length() const noexcept { return end - start; }
    [[nodiscard]] bool contains_strictly(double psi) const noexcept { return start < psi && psi < end; }
};

struct CurvatureSample
{
    double psi = 0.0;
    double kappa = 0.0; ///< [1/m]
};

struct KinetostaticReport
{
    double delta_ext = 0.0;
    double mu_max = 0.0;
    double mu_min = 0.0;
    double delta_mu = 0.0;
    ActiveInterval interval;
    double force_max = 0.0;
    std::vector<CurvatureSample> kappa_p_sweep;
    std::vector<CurvatureSample> kappa_c_sweep;
    double r_cam_min = 0.0;
};

inline constexpr double singular_orientation_tolerance = 1e-12; // rad

namespace detail
{

inline void require_regular_orientation(double psi)
{
    if (std::abs(psi - units::pi) < singular_orientation_tolerance)
        throw CamError(ErrorKind::SingularOrientation, "psi = pi: the conjugate cam carries the load");
}

} // namespace detail

/// Pressure angle mu = pi/2 - |delta|, measured between the contact normal
/// and the follower translation. In [0, pi/2).
[[nodiscard]] inline double pressure_angle(const DesignParameters& params, double psi)
{
    detail::require_regular_orientation(psi);
    const double k = units::two_pi * params.eta - 1.0;
    return std::atan2(std::abs(k), std::abs(psi - units::pi));
}

[[nodiscard]] inline ActiveInterval active_interval(int cams, double delta_ext)
{
    if (cams < 1)
        throw CamError(ErrorKind::InvalidArgument, "cam count must be positive");
    if (delta_ext > 0.0)
        throw CamError(ErrorKind::InvalidArgument, "the extended angle must not be positive");
    const double n = static_cast<double>(cams);
    return {units::pi / n - delta_ext, units::two_pi / n - delta_ext};
}

struct PressureAngleExtremes
{
    double mu_max = 0.0;
    double mu_min = 0.0;
};

/// mu falls off monotonically with |psi - pi|, so the extremes sit on the
/// interval ends: the end nearest pi gives the maximum.
[[nodiscard]] inline PressureAngleExtremes pressure_angle_extremes(const DesignParameters& params,
                                                                   const ActiveInterval& interval)
{
    if (interval.contains_strictly(units::pi))
        throw CamError(ErrorKind::SingularOrientation, "psi = pi lies inside the active interval");
    const double at_start = pressure_angle(params, interval.start);
    const double at_end = pressure_angle(params, interval.end);
    return {std::max(at_start, at_end), std::min(at_start, at_end)};
}

/// Axial load on the roller for torque Mt: sqrt((2 pi Mt/p)^2 + (2 pi Mt/(p tan delta))^2).
[[nodiscard]] inline double transmitted_force(const DesignParameters& params, double psi)
{
    detail::require_regular_orientation(psi);
    const double delta = coefficients(params, psi).delta;
    const double axial = params.torque * units::two_pi / params.pitch;
    return std::hypot(axial, axial / std::tan(delta));
}

inline constexpr double degenerate_speed_sq = 1e-18; // m^2

/// Curvature (v'u'' - u'v'') / (u'^2 + v'^2)^(3/2) of a uniformly sampled
/// parametric curve. Derivatives use the fourth-order five-point central
/// stencil, so the first and last two samples get no estimate.
[[nodiscard]] inline std::vector<CurvatureSample> curvature_numeric(std::span<const ProfilePoint> points)
{
    if (points.size() < 5)
        throw CamError(ErrorKind::InvalidArgument, "curvature estimation needs at least five samples");
    const double h = (points.back().psi - points.front().psi) / static_cast<double>(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        if (std::abs((points[i].psi - points[i - 1].psi) - h) > 1e-6 * std::abs(h))
            throw CamError(ErrorKind::InvalidArgument, "curvature estimation needs a uniform psi grid");
    }

    std::vector<CurvatureSample> out;
    out.reserve(points.size() - 4);
    for (std::size_t i = 2; i + 2 < points.size(); ++i)
    {
        const ProfilePoint& m2 = points[i - 2];
        const ProfilePoint& m1 = points[i - 1];
        const ProfilePoint& c = points[i];
        const ProfilePoint& p1 = points[i + 1];
        const ProfilePoint& p2 = points[i + 2];
        const double du = (-p2.u + 8.0 * p1.u - 8.0 * m1.u + m2.u) / (12.0 * h);
        const double dv = (-p2.v + 8.0 * p1.v - 8.0 * m1.v + m2.v) / (12.0 * h);
        const double ddu = (-p2.u + 16.0 * p1.u - 30.0 * c.u + 16.0 * m1.u - m2.u) / (12.0 * h * h);
        const double ddv = (-p2.v + 16.0 * p1.v - 30.0 * c.v + 16.0 * m1.v - m2.v) / (12.0 * h * h);
        const double speed_sq = du * du + dv * dv;
        if (speed_sq < degenerate_speed_sq)
            throw CamError(ErrorKind::DegenerateCurve, "zero parametric speed");
        out.push_back({c.psi, (dv * ddu - du * ddv) / std::pow(speed_sq, 1.5)});
    }
    return out;
}

/// Closed-form curvature of the pitch curve [1/m].
[[nodiscard]] inline double curvature_pitch(const DesignParameters& params, double psi)
{
    detail::require_regular_eta(params);
    const double k = units::two_pi * params.eta - 1.0;
    const double x = psi - units::pi;
    const double num = x * x + 2.0 * k * (units::pi * params.eta - 1.0);
    return units::two_pi / params.pitch * num / std::pow(x * x + k * k, 1.5);
}

inline constexpr double undercut_tolerance = 1e-12;

/// Cam-profile curvature from rho_p = rho_c + a4, i.e. kappa_p / (1 - a4 kappa_p).
[[nodiscard]] inline double curvature_profile(const DesignParameters& params, double psi)
{
    const double kp = curvature_pitch(params, psi);
    const double denom = 1.0 - params.roller_radius * kp;
    if (std::abs(denom) < undercut_tolerance)
        throw CamError(ErrorKind::Undercut, "roller radius equals the pitch-curve radius of curvature");
    return kp / denom;
}

/// Local cam radius 1/|kappa_c| [m]; infinite at inflection points.
[[nodiscard]] inline double cam_radius(const DesignParameters& params, double psi)
{
    const double kc = curvature_profile(params, psi);
    return kc == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(kc);
}

/// True when 1 - a4 kappa_p keeps one sign on every sample of [lo, hi],
/// i.e. the roller never reaches the pitch-curve radius of curvature.
[[nodiscard]] inline bool undercut_free(const DesignParameters& params, double lo, double hi,
                                        std::size_t n_samples = default_samples)
{
    int sign = 0;
    for (double psi : uniform_grid(lo, hi, n_samples))
    {
        const double denom = 1.0 - params.roller_radius * curvature_pitch(params, psi);
        if (std::abs(denom) < undercut_tolerance)
            return false;
        const int s = denom > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign)
            return false;
        sign = s;
    }
    return true;
}

/// Samples of the active interval grid, minus the hand-over orientation psi = pi.
[[nodiscard]] inline std::vector<double> interval_grid(const ActiveInterval& interval, std::size_t n_samples)
{
    auto grid = uniform_grid(interval.start, interval.end, n_samples);
    std::erase_if(grid, [](double psi) { return std::abs(psi - units::pi) < singular_orientation_tolerance; });
    return grid;
}

/// Largest pressure angle over the active interval. When psi = pi is an
/// end of the interval or lies inside it, the supremum pi/2 is returned.
[[nodiscard]] inline double max_pressure_angle(const DesignParameters& params, const ActiveInterval& interval)
{
    if (interval.contains_strictly(units::pi) || std::abs(interval.start - units::pi) < singular_orientation_tolerance ||
        std::abs(interval.end - units::pi) < singular_orientation_tolerance)
        return units::pi / 2.0;
    return pressure_angle_extremes(params, interval).mu_max;
}

/// Full kinetostatic picture of one design. Unlike pressure_angle_extremes
/// this tolerates psi = pi inside the interval (several conjugate cams) and
/// reports mu_max = pi/2 there; the sweeps skip that one orientation.
[[nodiscard]] inline KinetostaticReport analyze_kinetostatics(const DesignParameters& params,
                                                              std::size_t n_samples = default_samples)
{
    KinetostaticReport report;
    report.delta_ext = extended_angle(params);
    report.interval = active_interval(params.cams, report.delta_ext);
    report.mu_max = max_pressure_angle(params, report.interval);
    report.mu_min = units::pi / 2.0;
    for (double end : {report.interval.start, report.interval.end})
        if (std::abs(end - units::pi) >= singular_orientation_tolerance)
            report.mu_min = std::min(report.mu_min, pressure_angle(params, end));
    report.delta_mu = report.mu_max - report.mu_min;

    if (!undercut_free(params, report.interval.start, report.interval.end, n_samples))
        throw CamError(ErrorKind::Undercut, "the cam profile has a cusp inside the active interval");

    report.r_cam_min = std::numeric_limits<double>::infinity();
    for (double psi : interval_grid(report.interval, n_samples))
    {
        report.force_max = std::max(report.force_max, transmitted_force(params, psi));
        const double kp = curvature_pitch(params, psi);
        const double kc = curvature_profile(params, psi);
        report.kappa_p_sweep.push_back({psi, kp});
        report.kappa_c_sweep.push_back({psi, kc});
        if (kc != 0.0)
            report.r_cam_min = std::min(report.r_cam_min, 1.0 / std::abs(kc));
    }
    return report;
}

} // namespace slideocam
