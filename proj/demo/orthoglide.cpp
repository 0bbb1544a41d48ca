// Sizes a Slide-o-Cam for the Orthoglide prismatic joint (Mt = 1.2 N·m,
// p = 20 mm) and prints the resulting design, then compares the four
// single-cam layouts with p = 20 mm.

#include <cstdio>
#include <string>

#include "slideocam/format.hpp"
#include "slideocam/kinetostatics.hpp"
#include "slideocam/strength.hpp"
#include "slideocam/synthesis.hpp"
#include "slideocam/units.hpp"

using namespace slideocam;

namespace
{

DesignParameters layout(double a4_mm, double b_mm)
{
    DesignParameters p;
    p.pitch = units::from_mm(20.0);
    p.roller_radius = units::from_mm(a4_mm);
    p.camshaft_radius = units::from_mm(b_mm);
    p.eta = (p.roller_radius + p.camshaft_radius) / p.pitch;
    p.cams = 1;
    p.torque = 1.2;
    p.width = units::from_mm(20.0);
    return p;
}

} // namespace

int main()
{
    SynthesisRequest request;
    request.torque = 1.2;
    request.base_pitch = units::from_mm(20.0);

    const SynthesisOutcome outcome = synthesize(request);
    std::printf("synthesis trace\n");
    for (const TraceEntry& t : outcome.trace)
        std::printf("  p = %s mm  n = %d  phi_bear >= %s mm  phi_cam >= %s mm  mu_max = %s deg  %s\n",
                    format_fixed(units::to_mm(t.pitch)).c_str(), t.cams,
                    format_fixed(units::to_mm(t.bearing_min)).c_str(),
                    format_fixed(units::to_mm(t.camshaft_min)).c_str(), format_fixed(units::to_deg(t.mu_max)).c_str(),
                    std::string(to_string(t.verdict)).c_str());

    const DesignParameters& d = outcome.design;
    std::printf("design: p = %s mm, n = %d, e = %s mm, a4 = %s mm, b = %s mm, width = %s mm\n",
                format_fixed(units::to_mm(d.pitch)).c_str(), d.cams, format_fixed(units::to_mm(d.offset())).c_str(),
                format_fixed(units::to_mm(d.roller_radius)).c_str(),
                format_fixed(units::to_mm(d.camshaft_radius)).c_str(), format_fixed(units::to_mm(d.width)).c_str());
    std::printf("        mu_max = %s deg, P_peak = %s MPa, all constraints %s\n\n",
                format_fixed(units::to_deg(outcome.kinetostatics.mu_max)).c_str(),
                format_fixed(units::to_MPa(outcome.hertz.peak)).c_str(),
                outcome.constraints.passed() ? "satisfied" : "NOT satisfied");

    const struct
    {
        const char* name;
        double a4;
        double b;
    } cases[] = {{"a", 2.5, 1.25}, {"b", 4.0, 0.25}, {"c", 4.0, 1.0}, {"d", 3.35, 1.9}};
    std::printf("case  mu_max[deg]  delta_mu[deg]  P_peak local[MPa]  P_low local[MPa]\n");
    for (const auto& c : cases)
    {
        const DesignParameters p = layout(c.a4, c.b);
        const KinetostaticReport k = analyze_kinetostatics(p);
        const HertzReport h = hertz_sweep(p, k.interval, RadiusVariant::LocalCurvature);
        std::printf("  %s   %11s  %13s  %17s  %16s\n", c.name, format_fixed(units::to_deg(k.mu_max)).c_str(),
                    format_fixed(units::to_deg(k.delta_mu)).c_str(), format_fixed(units::to_MPa(h.peak)).c_str(),
                    format_fixed(units::to_MPa(h.low)).c_str());
    }
    return 0;
}
