#pragma once

// JSON documents at the boundary: design configurations and synthesis
// requests. Files use mm, degrees, MPa and N*m; everything is converted to SI
// once, here. Unknown keys are rejected.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "format.hpp"
#include "geometry.hpp"
#include "material.hpp"
#include "strength.hpp"
#include "synthesis.hpp"
#include "units.hpp"

namespace slideocam
{

using json = nlohmann::json;

/// Malformed or out-of-range document.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct AnalysisOptions
{
    std::size_t samples = default_samples;
    RadiusVariant variant = RadiusVariant::PaperConstant;
    double mu_limit = default_mu_limit;

    friend bool operator==(const AnalysisOptions&, const AnalysisOptions&) = default;
};

struct DesignConfig
{
    DesignParameters params;
    AnalysisOptions analysis;

    friend bool operator==(const DesignConfig&, const DesignConfig&) = default;
};

namespace detail
{

inline const json& require_object(const json& j, std::string_view where)
{
    if (!j.is_object())
        throw ConfigError(std::string(where) + " must be a JSON object");
    return j;
}

inline void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, value] : obj.items())
    {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (!known)
            throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
}

inline double number(const json& obj, std::string_view where, const std::string& key)
{
    if (!obj.contains(key))
        throw ConfigError("missing key '" + key + "' in " + std::string(where));
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("'" + key + "' in " + std::string(where) + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ConfigError("'" + key + "' in " + std::string(where) + " must be finite");
    return d;
}

inline double number_or(const json& obj, std::string_view where, const std::string& key, double fallback)
{
    return obj.contains(key) ? number(obj, where, key) : fallback;
}

inline long long integer_or(const json& obj, std::string_view where, const std::string& key, long long fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw ConfigError("'" + key + "' in " + std::string(where) + " must be an integer");
    return v.get<long long>();
}

inline void require(bool ok, const std::string& message)
{
    if (!ok)
        throw ConfigError(message);
}

inline RadiusVariant parse_variant(const json& v)
{
    if (v == "paper")
        return RadiusVariant::PaperConstant;
    if (v == "local")
        return RadiusVariant::LocalCurvature;
    throw ConfigError("r_eq_variant must be \"paper\" or \"local\"");
}

} // namespace detail

[[nodiscard]] inline RadiusVariant parse_radius_variant(std::string_view text)
{
    return detail::parse_variant(json(std::string(text)));
}

[[nodiscard]] inline Material parse_material(const json& j)
{
    using namespace detail;
    require_object(j, "material");
    check_keys(j, "material", {"young_modulus_MPa", "camshaft_stress_MPa", "bearing_stress_MPa", "max_pressure_MPa"});
    Material m;
    m.young_modulus = units::from_MPa(number(j, "material", "young_modulus_MPa"));
    m.camshaft_stress = units::from_MPa(number(j, "material", "camshaft_stress_MPa"));
    m.bearing_stress = units::from_MPa(number(j, "material", "bearing_stress_MPa"));
    m.max_pressure = units::from_MPa(number(j, "material", "max_pressure_MPa"));
    require(m.young_modulus > 0.0 && m.camshaft_stress > 0.0 && m.bearing_stress > 0.0 && m.max_pressure > 0.0,
            "material properties must be positive");
    return m;
}

namespace detail
{

inline double mm_out(double si)
{
    return round_trip_value(si, [](double v) { return units::to_mm(v); }, [](double v) { return units::from_mm(v); });
}

inline double deg_out(double si)
{
    return round_trip_value(si, [](double v) { return units::to_deg(v); }, [](double v) { return units::from_deg(v); });
}

inline double mpa_out(double si)
{
    return round_trip_value(si, [](double v) { return units::to_MPa(v); }, [](double v) { return units::from_MPa(v); });
}

} // namespace detail

[[nodiscard]] inline json material_to_json(const Material& m)
{
    return {{"young_modulus_MPa", detail::mpa_out(m.young_modulus)},
            {"camshaft_stress_MPa", detail::mpa_out(m.camshaft_stress)},
            {"bearing_stress_MPa", detail::mpa_out(m.bearing_stress)},
            {"max_pressure_MPa", detail::mpa_out(m.max_pressure)}};
}

/// Parses a design configuration. A profile document written by the CLI
/// (keys "config" and "result") is accepted too and yields its config.
[[nodiscard]] inline DesignConfig parse_design_config(const json& doc)
{
    using namespace detail;
    require_object(doc, "config");
    if (doc.contains("config"))
    {
        check_keys(doc, "profile document", {"config", "result"});
        return parse_design_config(doc.at("config"));
    }
    check_keys(doc, "config", {"design", "material", "analysis"});
    require(doc.contains("design"), "missing key 'design' in config");
    require(doc.contains("material"), "missing key 'material' in config");

    const json& d = require_object(doc.at("design"), "design");
    check_keys(d, "design",
               {"pitch_mm", "eta", "offset_mm", "roller_radius_mm", "camshaft_radius_mm", "cams", "torque_Nm", "width_mm"});

    DesignConfig cfg;
    DesignParameters& p = cfg.params;
    p.pitch = units::from_mm(number(d, "design", "pitch_mm"));
    require(p.pitch > 0.0, "pitch_mm must be positive");
    require(d.contains("eta") != d.contains("offset_mm"), "design needs exactly one of 'eta' or 'offset_mm'");
    p.eta = d.contains("eta") ? number(d, "design", "eta") : units::from_mm(number(d, "design", "offset_mm")) / p.pitch;
    p.roller_radius = units::from_mm(number(d, "design", "roller_radius_mm"));
    p.camshaft_radius = units::from_mm(number(d, "design", "camshaft_radius_mm"));
    const long long cams = integer_or(d, "design", "cams", 1);
    require(cams >= 1 && cams <= 1000, "cams must be an integer in [1, 1000]");
    p.cams = static_cast<int>(cams);
    p.torque = number(d, "design", "torque_Nm");
    p.width = units::from_mm(number(d, "design", "width_mm"));
    require(p.roller_radius > 0.0, "roller_radius_mm must be positive");
    require(p.camshaft_radius >= 0.0, "camshaft_radius_mm must not be negative");
    require(p.torque >= 0.0, "torque_Nm must not be negative");
    require(p.width > 0.0, "width_mm must be positive");
    p.material = parse_material(doc.at("material"));

    if (doc.contains("analysis"))
    {
        const json& a = require_object(doc.at("analysis"), "analysis");
        check_keys(a, "analysis", {"samples", "r_eq_variant", "mu_limit_deg"});
        const long long samples = integer_or(a, "analysis", "samples", static_cast<long long>(default_samples));
        require(samples >= 5 && samples <= 200000, "samples must be in [5, 200000]");
        cfg.analysis.samples = static_cast<std::size_t>(samples);
        if (a.contains("r_eq_variant"))
            cfg.analysis.variant = parse_variant(a.at("r_eq_variant"));
        cfg.analysis.mu_limit = units::from_deg(number_or(a, "analysis", "mu_limit_deg", 30.0));
        require(cfg.analysis.mu_limit > 0.0 && cfg.analysis.mu_limit <= units::pi / 2.0,
                "mu_limit_deg must be in (0, 90]");
    }
    return cfg;
}

/// Full-precision echo of a configuration; re-parsing yields the same values.
[[nodiscard]] inline json design_config_to_json(const DesignConfig& cfg)
{
    const DesignParameters& p = cfg.params;
    return {{"design",
             {{"pitch_mm", detail::mm_out(p.pitch)},
              {"eta", p.eta},
              {"roller_radius_mm", detail::mm_out(p.roller_radius)},
              {"camshaft_radius_mm", detail::mm_out(p.camshaft_radius)},
              {"cams", p.cams},
              {"torque_Nm", p.torque},
              {"width_mm", detail::mm_out(p.width)}}},
            {"material", material_to_json(p.material)},
            {"analysis",
             {{"samples", cfg.analysis.samples},
              {"r_eq_variant", to_string(cfg.analysis.variant)},
              {"mu_limit_deg", detail::deg_out(cfg.analysis.mu_limit)}}}};
}

[[nodiscard]] inline SynthesisRequest parse_synthesis_request(const json& doc)
{
    using namespace detail;
    require_object(doc, "request");
    check_keys(doc, "request",
               {"torque_Nm", "base_pitch_mm", "material", "mu_limit_deg", "max_cams", "max_pitch_steps", "r_eq_variant",
                "clearance_mm", "size_step_mm", "samples"});
    SynthesisRequest r;
    r.torque = number(doc, "request", "torque_Nm");
    r.base_pitch = units::from_mm(number(doc, "request", "base_pitch_mm"));
    require(doc.contains("material"), "missing key 'material' in request");
    r.material = parse_material(doc.at("material"));
    r.mu_limit = units::from_deg(number_or(doc, "request", "mu_limit_deg", 30.0));
    const long long cams = integer_or(doc, "request", "max_cams", r.max_cams);
    const long long steps = integer_or(doc, "request", "max_pitch_steps", r.max_pitch_steps);
    require(cams >= 1 && cams <= 64, "max_cams must be in [1, 64]");
    require(steps >= 1 && steps <= 64, "max_pitch_steps must be in [1, 64]");
    r.max_cams = static_cast<int>(cams);
    r.max_pitch_steps = static_cast<int>(steps);
    if (doc.contains("r_eq_variant"))
        r.variant = parse_variant(doc.at("r_eq_variant"));
    r.clearance = units::from_mm(number_or(doc, "request", "clearance_mm", units::to_mm(r.clearance)));
    r.size_step = units::from_mm(number_or(doc, "request", "size_step_mm", units::to_mm(r.size_step)));
    const long long samples = integer_or(doc, "request", "samples", static_cast<long long>(r.n_samples));
    require(samples >= 5 && samples <= 200000, "samples must be in [5, 200000]");
    r.n_samples = static_cast<std::size_t>(samples);
    require(r.torque > 0.0, "torque_Nm must be positive");
    require(r.base_pitch > 0.0, "base_pitch_mm must be positive");
    require(r.mu_limit > 0.0 && r.mu_limit <= units::pi / 2.0, "mu_limit_deg must be in (0, 90]");
    require(r.clearance > 0.0 && r.size_step > 0.0, "clearance_mm and size_step_mm must be positive");
    return r;
}

} // namespace slideocam
