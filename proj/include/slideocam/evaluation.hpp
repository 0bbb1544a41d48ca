#pragma once

// One-shot evaluation of a design configuration and the JSON documents the
// CLI and the HTTP service emit. Numbers in documents are rounded to 9
// significant digits; lengths in mm, angles in degrees, pressures in MPa.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "format.hpp"
#include "geometry.hpp"
#include "kinetostatics.hpp"
#include "strength.hpp"
#include "synthesis.hpp"
#include "units.hpp"

namespace slideocam
{

/// The design fails a geometric gate or cannot be built; carries the ledger.
class InvalidDesign : public std::runtime_error
{
  public:
    InvalidDesign(ConstraintReport report, const std::string& what)
        : std::runtime_error(what), report_(std::move(report))
    {
    }

    [[nodiscard]] const ConstraintReport& report() const noexcept { return report_; }

  private:
    ConstraintReport report_;
};

struct AngleSample
{
    double psi = 0.0;
    double mu = 0.0;
};

struct Evaluation
{
    DesignConfig config;
    CamProfile profile;
    std::vector<ProfilePoint> pitch_curve;
    KinetostaticReport kinetostatics;
    std::vector<AngleSample> mu_sweep;
    HertzReport hertz;
    HertzReport hertz_paper;
    HertzReport hertz_local;
    ConstraintReport constraints;
    ShaftDiameters diameters;
    double axial_force = 0.0; ///< 2 pi Mt / p [N]
};

namespace detail
{

inline std::string first_failure(const ConstraintReport& report)
{
    std::string out;
    for (const auto& c : report.checks)
        if (!c.satisfied)
        {
            out += out.empty() ? "" : "; ";
            out += std::string(to_string(c.id)) + (c.detail.empty() ? "" : ": " + c.detail);
        }
    return out;
}

} // namespace detail

/// Geometry only: validates the gates and samples profile and pitch curve.
[[nodiscard]] inline std::pair<CamProfile, std::vector<ProfilePoint>> build_profile(const DesignConfig& cfg)
{
    const ConstraintReport gates = check_constraints(cfg.params, cfg.analysis.mu_limit, cfg.analysis.variant,
                                                     cfg.analysis.samples);
    if (!gates.geometry_valid())
        throw InvalidDesign(gates, detail::first_failure(gates));
    try
    {
        CamProfile profile = generate_profile(cfg.params, cfg.analysis.samples);
        auto pitch = sample_pitch_curve(cfg.params, profile.delta_ext, cfg.analysis.samples);
        return {std::move(profile), std::move(pitch)};
    }
    catch (const CamError& e)
    {
        throw InvalidDesign(gates, e.what());
    }
}

[[nodiscard]] inline Evaluation evaluate(const DesignConfig& cfg)
{
    Evaluation ev;
    ev.config = cfg;
    const DesignParameters& params = cfg.params;
    const std::size_t n = cfg.analysis.samples;
    ev.constraints = check_constraints(params, cfg.analysis.mu_limit, cfg.analysis.variant, n);
    if (!ev.constraints.geometry_valid())
        throw InvalidDesign(ev.constraints, detail::first_failure(ev.constraints));
    try
    {
        std::tie(ev.profile, ev.pitch_curve) = build_profile(cfg);
        ev.kinetostatics = analyze_kinetostatics(params, n);
        const ActiveInterval& interval = ev.kinetostatics.interval;
        for (double psi : interval_grid(interval, n))
            ev.mu_sweep.push_back({psi, pressure_angle(params, psi)});
        if (interval.contains_strictly(units::pi))
        {
            // mu reaches pi/2 at the hand-over orientation; keep the sweep honest.
            auto it = ev.mu_sweep.begin();
            while (it != ev.mu_sweep.end() && it->psi < units::pi)
                ++it;
            ev.mu_sweep.insert(it, {units::pi, units::pi / 2.0});
        }
        ev.hertz_paper = hertz_sweep(params, interval, RadiusVariant::PaperConstant, n);
        ev.hertz_local = hertz_sweep(params, interval, RadiusVariant::LocalCurvature, n);
    }
    catch (const CamError& e)
    {
        throw InvalidDesign(ev.constraints, e.what());
    }
    ev.hertz = cfg.analysis.variant == RadiusVariant::PaperConstant ? ev.hertz_paper : ev.hertz_local;
    ev.diameters = shaft_diameters(params);
    ev.axial_force = params.torque * units::two_pi / params.pitch;
    return ev;
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

[[nodiscard]] inline json num(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return round_significant(v);
}

[[nodiscard]] inline json constraints_to_json(const ConstraintReport& report)
{
    json out = json::array();
    for (const auto& c : report.checks)
        out.push_back({{"id", to_string(c.id)}, {"satisfied", c.satisfied}, {"margin", num(c.margin)},
                       {"detail", c.detail}});
    return out;
}

[[nodiscard]] inline json interval_to_json(const ActiveInterval& interval)
{
    return {{"start_deg", num(units::to_deg(interval.start))}, {"end_deg", num(units::to_deg(interval.end))}};
}

[[nodiscard]] inline json polyline_to_json(const std::vector<ProfilePoint>& points)
{
    json out = json::array();
    for (const auto& p : points)
        out.push_back({num(units::to_mm(p.u)), num(units::to_mm(p.v))});
    return out;
}

/// EvaluateResponse: the body of POST /api/v1/evaluate and of `analyze --json`.
[[nodiscard]] inline json evaluation_to_json(const Evaluation& ev)
{
    json mu = json::array();
    for (const auto& s : ev.mu_sweep)
        mu.push_back({num(units::to_deg(s.psi)), num(units::to_deg(s.mu))});
    json hz = json::array();
    for (const auto& s : ev.hertz.sweep)
        hz.push_back({num(units::to_deg(s.psi)), num(units::to_MPa(s.pressure))});

    const KinetostaticReport& k = ev.kinetostatics;
    auto variant_summary = [](const HertzReport& h) {
        return json{{"P_peak_MPa", num(units::to_MPa(h.peak))},
                    {"P_low_MPa", num(units::to_MPa(h.low))},
                    {"r_eq_mm", num(units::to_mm(h.r_eq_used))}};
    };
    return {{"delta_ext_deg", num(units::to_deg(ev.profile.delta_ext))},
            {"closed", ev.profile.closed},
            {"interval", interval_to_json(k.interval)},
            {"profile", polyline_to_json(ev.profile.samples)},
            {"pitch", polyline_to_json(ev.pitch_curve)},
            {"mu_sweep", std::move(mu)},
            {"hertz_sweep", std::move(hz)},
            {"r_eq_variant", to_string(ev.hertz.variant)},
            {"constraints", constraints_to_json(ev.constraints)},
            {"passed", ev.constraints.passed()},
            {"scalars",
             {{"mu_max", num(units::to_deg(k.mu_max))},
              {"mu_min", num(units::to_deg(k.mu_min))},
              {"delta_mu", num(units::to_deg(k.delta_mu))},
              {"F_axial_N", num(ev.axial_force)},
              {"F_max_N", num(k.force_max)},
              {"r_cam_min_mm", num(units::to_mm(k.r_cam_min))},
              {"P_peak_MPa", num(units::to_MPa(ev.hertz.peak))},
              {"P_low_MPa", num(units::to_MPa(ev.hertz.low))},
              {"phi_cam_mm", num(units::to_mm(ev.diameters.camshaft))},
              {"phi_bear_mm", num(units::to_mm(ev.diameters.bearing))}}},
            {"hertz_variants", {{"paper", variant_summary(ev.hertz_paper)}, {"local", variant_summary(ev.hertz_local)}}}};
}

[[nodiscard]] inline json invalid_design_to_json(const InvalidDesign& e)
{
    return {{"error", "invalid_design"}, {"message", e.what()}, {"constraints", constraints_to_json(e.report())}};
}

[[nodiscard]] inline json trace_to_json(const std::vector<TraceEntry>& trace)
{
    json out = json::array();
    for (const auto& t : trace)
        out.push_back({{"pitch_mm", num(units::to_mm(t.pitch))},
                       {"cams", t.cams},
                       {"lines", t.lines},
                       {"phi_bear_min_mm", num(units::to_mm(t.bearing_min))},
                       {"phi_cam_min_mm", num(units::to_mm(t.camshaft_min))},
                       {"mu_max_deg", num(units::to_deg(t.mu_max))},
                       {"verdict", to_string(t.verdict)},
                       {"note", t.note}});
    return out;
}

/// SynthesisOutcome document. "config" is a complete design configuration
/// that `analyze` accepts as is.
[[nodiscard]] inline json outcome_to_json(const SynthesisOutcome& o, const SynthesisRequest& request)
{
    DesignConfig cfg;
    cfg.params = o.design;
    cfg.analysis.samples = request.n_samples;
    cfg.analysis.variant = request.variant;
    cfg.analysis.mu_limit = request.mu_limit;
    const KinetostaticReport& k = o.kinetostatics;
    return {{"config", design_config_to_json(cfg)},
            {"diameters", {{"phi_cam_mm", num(units::to_mm(o.diameters.camshaft))},
                           {"phi_bear_mm", num(units::to_mm(o.diameters.bearing))}}},
            {"kinetostatics",
             {{"delta_ext_deg", num(units::to_deg(k.delta_ext))},
              {"interval", interval_to_json(k.interval)},
              {"mu_max_deg", num(units::to_deg(k.mu_max))},
              {"mu_min_deg", num(units::to_deg(k.mu_min))},
              {"delta_mu_deg", num(units::to_deg(k.delta_mu))},
              {"F_max_N", num(k.force_max)},
              {"r_cam_min_mm", num(units::to_mm(k.r_cam_min))}}},
            {"hertz",
             {{"r_eq_variant", to_string(o.hertz.variant)},
              {"P_peak_MPa", num(units::to_MPa(o.hertz.peak))},
              {"P_low_MPa", num(units::to_MPa(o.hertz.low))},
              {"r_eq_mm", num(units::to_mm(o.hertz.r_eq_used))}}},
            {"constraints", constraints_to_json(o.constraints)},
            {"passed", o.constraints.passed()},
            {"trace", trace_to_json(o.trace)}};
}

[[nodiscard]] inline json infeasible_to_json(const SynthesisInfeasible& e)
{
    return {{"error", "infeasible"}, {"message", e.what()}, {"trace", trace_to_json(e.trace())}};
}

} // namespace slideocam
