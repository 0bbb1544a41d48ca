#pragma once

/// Closed-form geometry of a Slide-o-Cam cam driving a translating row of
/// rollers: follower displacement law, contact-point profile, pitch curve
/// and the extended angle that closes the profile.
///
/// Frames: x-y is fixed to the machine, u-v rotates with the cam; both share
/// the camshaft axis as origin. The follower axis is at -pi/2 from the cam
/// axis, which is what reduces the general profile coefficients to the
/// forms used below.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "material.hpp"
#include "units.hpp"

namespace slideocam
{

/// Directed angle between the cam axis and the follower translation.
inline constexpr double follower_axis_angle = -units::pi / 2.0;

/// eta = 1/(2 pi) zeroes the denominator of delta; designs must stay above it.
inline constexpr double eta_singular = 1.0 / units::two_pi;
inline constexpr double eta_tolerance = 1e-9;

struct DesignParameters
{
    double pitch = 0.0;           ///< p [m], centre distance of consecutive rollers on one side
    double eta = 0.0;             ///< e/p
    double roller_radius = 0.0;   ///< a4 [m]
    double camshaft_radius = 0.0; ///< b [m]
    int cams = 1;                 ///< n, number of conjugate cams
    double torque = 0.0;          ///< Mt [N*m]
    double width = 0.0;           ///< a [m], common width of cam and roller
    Material material{};

    /// e [m], distance from the cam axis to the line of roller centres.
    [[nodiscard]] double offset() const noexcept { return eta * pitch; }

    friend bool operator==(const DesignParameters&, const DesignParameters&) = default;
};

struct ProfilePoint
{
    double psi = 0.0; ///< cam angle [rad]
    double u = 0.0;   ///< [m]
    double v = 0.0;   ///< [m]
};

struct Coefficients
{
    double b2 = 0.0;    ///< [m]
    double b3 = 0.0;    ///< [m]
    double delta = 0.0; ///< [rad], in (-pi/2, pi/2)
};

struct CamProfile
{
    DesignParameters params;
    double delta_ext = 0.0; ///< extended angle, <= 0
    std::vector<ProfilePoint> samples;
    bool closed = false;
};

/// Follower displacement s(psi) = p psi / 2pi - p/2. No wrapping of psi.
[[nodiscard]] inline double displacement(const DesignParameters& params, double psi) noexcept
{
    return params.pitch / units::two_pi * psi - params.pitch / 2.0;
}

/// (s', s''): the law is affine, so these are constants.
[[nodiscard]] inline std::pair<double, double> displacement_derivatives(const DesignParameters& params) noexcept
{
    return {params.pitch / units::two_pi, 0.0};
}

namespace detail
{

inline void require_regular_eta(const DesignParameters& params)
{
    if (std::abs(params.eta - eta_singular) < eta_tolerance)
        throw CamError(ErrorKind::DegenerateEta, "eta = 1/(2 pi) makes the profile coefficients singular");
}

} // namespace detail

[[nodiscard]] inline Coefficients coefficients(const DesignParameters& params, double psi)
{
    detail::require_regular_eta(params);
    const double lead = params.pitch / units::two_pi;
    const double k = units::two_pi * params.eta - 1.0;
    const double x = psi - units::pi;
    return {lead, lead * std::hypot(k, x), std::atan(x / k)};
}

/// Contact point C between cam and roller, in the cam frame.
[[nodiscard]] inline ProfilePoint contact_point(const DesignParameters& params, double psi)
{
    const auto [b2, b3, delta] = coefficients(params, psi);
    const double arm = b3 - params.roller_radius;
    return {psi, b2 * std::cos(psi) + arm * std::cos(delta - psi), -b2 * std::sin(psi) + arm * std::sin(delta - psi)};
}

/// Roller centre O2 in the cam frame.
[[nodiscard]] inline ProfilePoint pitch_point(const DesignParameters& params, double psi) noexcept
{
    const double e = params.offset();
    const double s = displacement(params, psi);
    return {psi, e * std::cos(psi) + s * std::sin(psi), -e * std::sin(psi) + s * std::cos(psi)};
}

/// n points evenly spaced on [lo, hi]; the last point is exactly hi.
[[nodiscard]] inline std::vector<double> uniform_grid(double lo, double hi, std::size_t n)
{
    if (n < 2)
        throw CamError(ErrorKind::InvalidArgument, "a grid needs at least two points");
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    grid[n - 1] = hi;
    return grid;
}

inline constexpr std::size_t extended_angle_probes = 2048;

/// Extended angle: the negative root of v_c nearest zero. Probes [-pi, 0]
/// uniformly, then bisects the right-most sign change to full precision.
[[nodiscard]] inline double extended_angle(const DesignParameters& params)
{
    detail::require_regular_eta(params);
    auto v_at = [&](double psi) { return contact_point(params, psi).v; };

    const double step = units::pi / static_cast<double>(extended_angle_probes);
    double hi = 0.0;
    double v_hi = v_at(hi);
    for (std::size_t i = extended_angle_probes; i-- > 0;)
    {
        const double lo = -units::pi + step * static_cast<double>(i);
        const double v_lo = v_at(lo);
        if (v_lo == 0.0)
            return lo;
        if ((v_lo < 0.0) != (v_hi < 0.0) && v_hi != 0.0)
        {
            double a = lo;
            double b = hi;
            double va = v_lo;
            for (int iter = 0; iter < 200; ++iter)
            {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b)
                    break;
                const double vm = v_at(mid);
                if (vm == 0.0)
                    return mid;
                if ((vm < 0.0) == (va < 0.0))
                {
                    a = mid;
                    va = vm;
                }
                else
                    b = mid;
            }
            return std::abs(va) <= std::abs(v_at(b)) ? a : b;
        }
        hi = lo;
        v_hi = v_lo;
    }
    throw CamError(ErrorKind::NoRootFound, "v_c has no sign change on [-pi, 0); the profile cannot close");
}

inline constexpr double closure_tolerance = 1e-9; // m
inline constexpr std::size_t default_samples = 721;

/// Samples the closed cam profile on a uniform grid over [delta, 2 pi - delta].
[[nodiscard]] inline CamProfile generate_profile(const DesignParameters& params,
                                                 std::size_t n_samples = default_samples)
{
    if (n_samples < 3)
        throw CamError(ErrorKind::InvalidArgument, "a profile needs at least three samples");
    CamProfile profile;
    profile.params = params;
    profile.delta_ext = extended_angle(params);
    profile.samples.reserve(n_samples);
    for (double psi : uniform_grid(profile.delta_ext, units::two_pi - profile.delta_ext, n_samples))
        profile.samples.push_back(contact_point(params, psi));
    profile.closed = std::abs(profile.samples.front().v) < closure_tolerance &&
                     std::abs(profile.samples.back().v) < closure_tolerance;
    return profile;
}

/// Pitch curve sampled on the same grid generate_profile uses.
[[nodiscard]] inline std::vector<ProfilePoint> sample_pitch_curve(const DesignParameters& params, double delta_ext,
                                                                  std::size_t n_samples = default_samples)
{
    std::vector<ProfilePoint> out;
    out.reserve(n_samples);
    for (double psi : uniform_grid(delta_ext, units::two_pi - delta_ext, n_samples))
        out.push_back(pitch_point(params, psi));
    return out;
}

} // namespace slideocam
