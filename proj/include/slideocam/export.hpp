#pragma once

// Profile export: CSV table, SVG drawing (1 unit = 1 mm, v axis pointing up)
// and a JSON document that `analyze` can read back.

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "evaluation.hpp"
#include "format.hpp"
#include "geometry.hpp"
#include "units.hpp"

namespace slideocam
{

[[nodiscard]] inline std::string profile_csv(const CamProfile& profile, const std::vector<ProfilePoint>& pitch)
{
    std::ostringstream os;
    os << "psi_rad,u_mm,v_mm,up_mm,vp_mm\n";
    for (std::size_t i = 0; i < profile.samples.size(); ++i)
    {
        const ProfilePoint& c = profile.samples[i];
        const ProfilePoint& p = pitch[i];
        os << format_fixed(c.psi) << ',' << format_fixed(units::to_mm(c.u)) << ',' << format_fixed(units::to_mm(c.v))
           << ',' << format_fixed(units::to_mm(p.u)) << ',' << format_fixed(units::to_mm(p.v)) << '\n';
    }
    return os.str();
}

[[nodiscard]] inline json profile_json(const DesignConfig& cfg, const CamProfile& profile,
                                       const std::vector<ProfilePoint>& pitch)
{
    json samples = json::array();
    for (std::size_t i = 0; i < profile.samples.size(); ++i)
    {
        const ProfilePoint& c = profile.samples[i];
        samples.push_back({num(c.psi), num(units::to_mm(c.u)), num(units::to_mm(c.v)),
                           num(units::to_mm(pitch[i].u)), num(units::to_mm(pitch[i].v))});
    }
    return {{"config", design_config_to_json(cfg)},
            {"result",
             {{"delta_ext_rad", num(profile.delta_ext)},
              {"delta_ext_deg", num(units::to_deg(profile.delta_ext))},
              {"closed", profile.closed},
              {"columns", {"psi_rad", "u_mm", "v_mm", "up_mm", "vp_mm"}},
              {"samples", std::move(samples)}}}};
}

namespace detail
{

inline std::string svg_path(const std::vector<ProfilePoint>& points)
{
    std::string d;
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        d += i == 0 ? "M " : " L ";
        d += format_fixed(units::to_mm(points[i].u)) + ' ' + format_fixed(-units::to_mm(points[i].v));
    }
    return d + " Z";
}

} // namespace detail

/// Cam profile, pitch curve, camshaft and the roller at psi = 0, pi/2, pi.
[[nodiscard]] inline std::string profile_svg(const CamProfile& profile, const std::vector<ProfilePoint>& pitch)
{
    const DesignParameters& params = profile.params;
    const double a4 = units::to_mm(params.roller_radius);
    const std::array<double, 3> roller_angles{0.0, units::pi / 2.0, units::pi};

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double min_y = min_x;
    double max_y = -min_x;
    auto grow = [&](double x, double y, double r) {
        min_x = std::min(min_x, x - r);
        max_x = std::max(max_x, x + r);
        min_y = std::min(min_y, y - r);
        max_y = std::max(max_y, y + r);
    };
    for (const auto& pts : {profile.samples, pitch})
        for (const auto& p : pts)
            grow(units::to_mm(p.u), -units::to_mm(p.v), 0.0);
    for (double psi : roller_angles)
    {
        const ProfilePoint c = pitch_point(params, psi);
        grow(units::to_mm(c.u), -units::to_mm(c.v), a4);
    }
    const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
    min_x -= margin;
    min_y -= margin;
    const double w = max_x - min_x + margin;
    const double h = max_y - min_y + margin;
    const double stroke = 0.002 * std::max(w, h);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_fixed(min_x) << ' ' << format_fixed(min_y)
       << ' ' << format_fixed(w) << ' ' << format_fixed(h) << "\" width=\"" << format_fixed(w) << "mm\" height=\""
       << format_fixed(h) << "mm\">\n"
       << "<g fill=\"none\" stroke-width=\"" << format_fixed(stroke) << "\">\n"
       << "<path id=\"cam-profile\" stroke=\"#1f4e8c\" d=\"" << detail::svg_path(profile.samples) << "\"/>\n"
       << "<path id=\"pitch-curve\" stroke=\"#8c8c8c\" stroke-dasharray=\"" << format_fixed(4 * stroke) << ' '
       << format_fixed(2 * stroke) << "\" d=\"" << detail::svg_path(pitch) << "\"/>\n";
    if (params.camshaft_radius > 0.0)
        os << "<circle id=\"camshaft\" stroke=\"#000000\" cx=\"0.00000000\" cy=\"0.00000000\" r=\""
           << format_fixed(units::to_mm(params.camshaft_radius)) << "\"/>\n";
    for (double psi : roller_angles)
    {
        const ProfilePoint c = pitch_point(params, psi);
        os << "<circle class=\"roller\" stroke=\"#b22222\" cx=\"" << format_fixed(units::to_mm(c.u)) << "\" cy=\""
           << format_fixed(-units::to_mm(c.v)) << "\" r=\"" << format_fixed(a4) << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace slideocam
