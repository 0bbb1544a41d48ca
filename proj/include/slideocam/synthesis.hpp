#pragma once

/// Constraint ledger and the iterative sizing loop that turns a torque and a
/// base pitch into a fully dimensioned cam-roller transmission.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "kinetostatics.hpp"
#include "material.hpp"
#include "strength.hpp"
#include "units.hpp"

namespace slideocam
{

enum class ConstraintId
{
    EtaLowerBound,
    RollerSpacing,
    ShaftClearance,
    PressureAngleLimit,
    CamShear,
    BearingShear,
    HertzLimit,
};

[[nodiscard]] inline std::string_view to_string(ConstraintId id) noexcept
{
    switch (id)
    {
        case ConstraintId::EtaLowerBound: return "EtaLowerBound";
        case ConstraintId::RollerSpacing: return "RollerSpacing";
        case ConstraintId::ShaftClearance: return "ShaftClearance";
        case ConstraintId::PressureAngleLimit: return "PressureAngleLimit";
        case ConstraintId::CamShear: return "CamShear";
        case ConstraintId::BearingShear: return "BearingShear";
        case ConstraintId::HertzLimit: return "HertzLimit";
    }
    return "Unknown";
}

/// Signed margins, positive when satisfied:
///   EtaLowerBound       eta - 1/(2 pi)                 (strict)
///   RollerSpacing       (p - 2 a4) / p                 (strict)
///   ShaftClearance      eta - b/p - a4/p
///   PressureAngleLimit  mu_limit - mu_max  [rad]
///   CamShear            (phi_cam - phi_cam_min) / phi_cam_min
///   BearingShear        (phi_bear - phi_bear_min) / phi_bear_min
///   HertzLimit          (P_max - P_peak) / P_max
struct ConstraintCheck
{
    ConstraintId id{};
    bool satisfied = false;
    double margin = 0.0;
    std::string detail;
};

struct ConstraintReport
{
    std::vector<ConstraintCheck> checks;

    [[nodiscard]] bool passed() const noexcept
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
    }

    /// The three checks that decide whether a profile can be built at all.
    [[nodiscard]] bool geometry_valid() const noexcept
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) {
            return c.satisfied || !(c.id == ConstraintId::EtaLowerBound || c.id == ConstraintId::RollerSpacing ||
                                    c.id == ConstraintId::ShaftClearance);
        });
    }

    [[nodiscard]] const ConstraintCheck& at(ConstraintId id) const
    {
        for (const auto& c : checks)
            if (c.id == id)
                return c;
        throw std::out_of_range("constraint not in report");
    }
};

inline constexpr double default_mu_limit = 30.0 * units::deg;

namespace detail
{

inline double diameter_margin(double diameter, double minimum)
{
    return minimum > 0.0 ? (diameter - minimum) / minimum : 1.0;
}

} // namespace detail

/// Evaluates every constraint of the design. Never throws on a violation;
/// a check that cannot be evaluated is marked unsatisfied with its reason.
[[nodiscard]] inline ConstraintReport check_constraints(const DesignParameters& params,
                                                        double mu_limit = default_mu_limit,
                                                        RadiusVariant variant = RadiusVariant::PaperConstant,
                                                        std::size_t n_samples = default_samples)
{
    ConstraintReport report;
    const double p = params.pitch;
    const double a4 = params.roller_radius;

    const double eta_margin = params.eta - eta_singular;
    report.checks.push_back({ConstraintId::EtaLowerBound, eta_margin > 0.0, eta_margin,
                             eta_margin > 0.0 ? "" : "eta must exceed 1/(2 pi)"});

    const double spacing = (p - 2.0 * a4) / p;
    report.checks.push_back({ConstraintId::RollerSpacing, spacing > 0.0, spacing,
                             spacing > 0.0 ? "" : "consecutive rollers collide: 2 a4 must stay below p"});

    const double clearance = params.eta - params.camshaft_radius / p - a4 / p;
    report.checks.push_back({ConstraintId::ShaftClearance, clearance >= 0.0, clearance,
                             clearance >= 0.0 ? "" : "roller hits the camshaft: a4/p must not exceed eta - b/p"});

    const bool geometry_ok = report.geometry_valid();

    std::optional<ActiveInterval> interval;
    ConstraintCheck angle{ConstraintId::PressureAngleLimit, false, mu_limit - units::pi / 2.0, ""};
    if (geometry_ok)
    {
        try
        {
            interval = active_interval(params.cams, extended_angle(params));
            const double mu_max = max_pressure_angle(params, *interval);
            angle.margin = mu_limit - mu_max;
            angle.satisfied = angle.margin >= 0.0;
            if (!angle.satisfied)
                angle.detail = "maximum pressure angle exceeds the limit";
        }
        catch (const CamError& e)
        {
            angle.detail = e.what();
        }
    }
    else
        angle.detail = "geometry invalid";
    report.checks.push_back(angle);

    const ShaftDiameters d = shaft_diameters(params);
    const Material& m = params.material;
    const bool loaded = params.torque > 0.0;
    const double cam_min = loaded ? min_camshaft_diameter(params.torque, p, m.camshaft_stress) : 0.0;
    const double bear_min = loaded ? min_bearing_shaft_diameter(params.torque, p, m.bearing_stress) : 0.0;
    const double cam_margin = detail::diameter_margin(d.camshaft, cam_min);
    const double bear_margin = detail::diameter_margin(d.bearing, bear_min);
    report.checks.push_back({ConstraintId::CamShear, cam_margin >= 0.0, cam_margin,
                             cam_margin >= 0.0 ? "" : "camshaft diameter 2(e - a4) below the shear+bending minimum"});
    report.checks.push_back({ConstraintId::BearingShear, bear_margin >= 0.0, bear_margin,
                             bear_margin >= 0.0 ? "" : "bearing shaft diameter 2 a4 below the shear minimum"});

    ConstraintCheck hertz{ConstraintId::HertzLimit, false, -1.0, ""};
    if (!interval)
        hertz.detail = "active interval unavailable";
    else if (!(params.width > 0.0))
        hertz.detail = "width must be positive";
    else
    {
        try
        {
            const double peak = hertz_sweep(params, *interval, variant, n_samples).peak;
            hertz.margin = (m.max_pressure - peak) / m.max_pressure;
            hertz.satisfied = hertz.margin >= 0.0;
            if (!hertz.satisfied)
                hertz.detail = "Hertz pressure exceeds the allowable contact pressure";
        }
        catch (const CamError& e)
        {
            hertz.detail = e.what();
        }
    }
    report.checks.push_back(hertz);
    return report;
}

struct SynthesisRequest
{
    double torque = 0.0;     ///< Mt [N*m]
    double base_pitch = 0.0; ///< p0 [m]; pitch grows in multiples of it
    Material material{};
    double mu_limit = default_mu_limit;
    int max_cams = 6;        ///< cam counts tried per pitch: 2, 3, ..., 1 + max_cams
    int max_pitch_steps = 5; ///< pitches tried: p0, 2 p0, ..., max_pitch_steps * p0
    RadiusVariant variant = RadiusVariant::PaperConstant;
    double clearance = 0.1 * units::mm; ///< radial gap between roller and camshaft
    double size_step = 0.05 * units::mm; ///< diameters and width are rounded up to this grid
    std::size_t n_samples = default_samples;
};

inline constexpr int initial_cams = 2;
inline constexpr int follower_lines = 1;

enum class Verdict
{
    Accepted,
    PressureAngleTooHigh,
    GeometryInvalid,
};

[[nodiscard]] inline std::string_view to_string(Verdict v) noexcept
{
    switch (v)
    {
        case Verdict::Accepted: return "accepted";
        case Verdict::PressureAngleTooHigh: return "pressure_angle_too_high";
        case Verdict::GeometryInvalid: return "geometry_invalid";
    }
    return "unknown";
}

struct TraceEntry
{
    double pitch = 0.0;
    int cams = 0;
    int lines = follower_lines;
    double bearing_min = 0.0;  ///< phi_bear from the shear limit [m]
    double camshaft_min = 0.0; ///< phi_cam from the shear+bending limit [m]
    double mu_max = 0.0;
    Verdict verdict = Verdict::GeometryInvalid;
    std::string note;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SynthesisOutcome
{
    DesignParameters design;
    ShaftDiameters diameters;
    KinetostaticReport kinetostatics;
    HertzReport hertz;
    ConstraintReport constraints;
    std::vector<TraceEntry> trace;
};

class SynthesisInfeasible : public std::runtime_error
{
  public:
    explicit SynthesisInfeasible(std::vector<TraceEntry> trace)
        : std::runtime_error("no design satisfies the limits within the search bounds"), trace_(std::move(trace))
    {
    }

    [[nodiscard]] const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

  private:
    std::vector<TraceEntry> trace_;
};

namespace detail
{

/// Smallest multiple of step strictly greater than value.
inline double round_up_strict(double value, double step)
{
    return (std::floor(value / step + 1e-12) + 1.0) * step;
}

inline void validate(const SynthesisRequest& r)
{
    auto fail = [](const char* what) { throw CamError(ErrorKind::InvalidArgument, what); };
    if (!(r.torque > 0.0))
        fail("torque must be positive");
    if (!(r.base_pitch > 0.0))
        fail("base pitch must be positive");
    if (!(r.mu_limit > 0.0 && r.mu_limit <= units::pi / 2.0))
        fail("pressure-angle limit must lie in (0, 90] degrees");
    if (r.max_cams < 1 || r.max_pitch_steps < 1)
        fail("search bounds must be at least one");
    if (!(r.clearance > 0.0 && r.size_step > 0.0))
        fail("clearance and size step must be positive");
    if (r.n_samples < 5)
        fail("at least five samples are required");
    const Material& m = r.material;
    if (!(m.young_modulus > 0.0 && m.camshaft_stress > 0.0 && m.bearing_stress > 0.0 && m.max_pressure > 0.0))
        fail("material properties must be positive");
}

} // namespace detail

/// Sizing loop. For each pitch p = p0, 2 p0, ...: size both shafts from the
/// stress limits, place the roller line at e = max(a4 + b, p/(2 pi)) plus the
/// clearance (pushed further out while the profile would undercut), then try
/// cam counts 2, 3, ... until the maximum pressure angle meets the limit.
/// The accepted design gets the smallest width keeping the Hertz pressure
/// below P_max.
[[nodiscard]] inline SynthesisOutcome synthesize(const SynthesisRequest& request)
{
    detail::validate(request);
    std::vector<TraceEntry> trace;

    for (int step = 1; step <= request.max_pitch_steps; ++step)
    {
        const double p = request.base_pitch * static_cast<double>(step);
        TraceEntry base;
        base.pitch = p;
        base.cams = initial_cams;
        base.bearing_min = min_bearing_shaft_diameter(request.torque, p, request.material.bearing_stress);
        base.camshaft_min = min_camshaft_diameter(request.torque, p, request.material.camshaft_stress);

        DesignParameters params;
        params.pitch = p;
        params.roller_radius = detail::round_up_strict(base.bearing_min, request.size_step) / 2.0;
        params.camshaft_radius = detail::round_up_strict(base.camshaft_min, request.size_step) / 2.0;
        params.torque = request.torque;
        params.material = request.material;
        double e = std::max(params.roller_radius + params.camshaft_radius, p / units::two_pi) + request.clearance;

        if (!(2.0 * params.roller_radius < p))
        {
            base.verdict = Verdict::GeometryInvalid;
            base.mu_max = units::pi / 2.0;
            base.note = "rollers collide at this pitch";
            trace.push_back(base);
            continue;
        }

        std::optional<double> delta;
        std::string note;
        for (; e < p; e += request.size_step)
        {
            params.eta = e / p;
            try
            {
                const double d = extended_angle(params);
                if (undercut_free(params, d, units::two_pi - d, request.n_samples))
                {
                    delta = d;
                    break;
                }
                note = "profile undercut for every admissible offset";
            }
            catch (const CamError& err)
            {
                note = err.what();
            }
        }
        if (!delta)
        {
            base.verdict = Verdict::GeometryInvalid;
            base.mu_max = units::pi / 2.0;
            base.note = note;
            trace.push_back(base);
            continue;
        }

        for (int cams = initial_cams; cams < initial_cams + request.max_cams; ++cams)
        {
            params.cams = cams;
            const ActiveInterval interval = active_interval(cams, *delta);
            TraceEntry entry = base;
            entry.cams = cams;
            entry.mu_max = max_pressure_angle(params, interval);
            if (entry.mu_max > request.mu_limit)
            {
                entry.verdict = Verdict::PressureAngleTooHigh;
                trace.push_back(entry);
                continue;
            }
            entry.verdict = Verdict::Accepted;
            trace.push_back(entry);

            const double width_probe = 1.0;
            params.width = width_probe;
            const HertzReport unit_width = hertz_sweep(params, interval, request.variant, request.n_samples);
            const double ratio = unit_width.peak / request.material.max_pressure;
            double width = ratio * ratio * width_probe;
            if (request.variant == RadiusVariant::PaperConstant)
            {
                const ShaftDiameters sd = shaft_diameters(params);
                double f_max = 0.0;
                for (double psi : interval_grid(interval, request.n_samples))
                    f_max = std::max(f_max, transmitted_force(params, psi));
                width = min_width(f_max, request.material.young_modulus, equivalent_radius(sd.camshaft, sd.bearing),
                                  request.material.max_pressure);
            }
            params.width = detail::round_up_strict(width, request.size_step);

            SynthesisOutcome outcome;
            outcome.design = params;
            outcome.diameters = shaft_diameters(params);
            outcome.kinetostatics = analyze_kinetostatics(params, request.n_samples);
            outcome.hertz = hertz_sweep(params, interval, request.variant, request.n_samples);
            outcome.constraints = check_constraints(params, request.mu_limit, request.variant, request.n_samples);
            outcome.trace = std::move(trace);
            return outcome;
        }
    }
    throw SynthesisInfeasible(std::move(trace));
}

} // namespace slideocam
