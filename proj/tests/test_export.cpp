#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "slideocam/config.hpp"
#include "slideocam/evaluation.hpp"
#include "slideocam/export.hpp"
#include "slideocam/format.hpp"
#include "test_support.hpp"

using namespace slideocam;

namespace
{

DesignConfig load(const std::string& name)
{
    return parse_design_config(
        json::parse(test_support::read_file(test_support::source_path("configs/" + name + ".json"))));
}

} // namespace

TEST(format_fixed, nine_significant_digits)
{
    EXPECT_EQ(format_fixed(3.75), "3.75000000");
    EXPECT_EQ(format_fixed(-1264.19125049), "-1264.19125");
    EXPECT_EQ(format_fixed(0.000123456789123), "0.000123456789");
    EXPECT_EQ(format_fixed(0.0), "0.00000000");
    EXPECT_EQ(format_fixed(-0.0), "0.00000000");
    EXPECT_EQ(format_fixed(4e-16), "0.00000000");
    EXPECT_EQ(format_fixed(123456789012.0), "123456789012");
}

TEST(round_significant, keeps_nine_digits)
{
    EXPECT_DOUBLE_EQ(round_significant(8.018965763141), 8.01896576);
    EXPECT_EQ(round_significant(0.0), 0.0);
}

TEST(round_trip_value, shortest_exact_decimal)
{
    const double si = units::from_deg(30.0);
    const double shown = round_trip_value(
        si, [](double v) { return units::to_deg(v); }, [](double v) { return units::from_deg(v); });
    EXPECT_EQ(shown, 30.0);
}

TEST(profile_csv, case_a_golden)
{
    const auto [profile, pitch] = build_profile(load("case_a"));
    const std::string csv = profile_csv(profile, pitch);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 722);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "psi_rad,u_mm,v_mm,up_mm,vp_mm");
    EXPECT_EQ(csv, test_support::read_file(test_support::source_path("tests/golden/case_a.csv")));
}

TEST(profile_svg, case_a_golden)
{
    const auto [profile, pitch] = build_profile(load("case_a"));
    const std::string svg = profile_svg(profile, pitch);
    EXPECT_NE(svg.find("id=\"cam-profile\""), std::string::npos);
    EXPECT_NE(svg.find("id=\"pitch-curve\""), std::string::npos);
    EXPECT_EQ(std::count(svg.begin(), svg.end(), 'Z'), 2);
    std::size_t rollers = 0;
    for (std::size_t at = svg.find("class=\"roller\""); at != std::string::npos;
         at = svg.find("class=\"roller\"", at + 1))
        ++rollers;
    EXPECT_EQ(rollers, 3u);
    EXPECT_EQ(svg, test_support::read_file(test_support::source_path("tests/golden/case_a.svg")));
}

TEST(profile_json, carries_extended_angle_and_closure)
{
    const DesignConfig cfg = load("case_a");
    const auto [profile, pitch] = build_profile(cfg);
    const json doc = profile_json(cfg, profile, pitch);
    EXPECT_TRUE(doc.at("result").at("closed").get<bool>());
    EXPECT_NEAR(doc.at("result").at("delta_ext_rad").get<double>(), -1.26419125, 1e-8);
    EXPECT_EQ(doc.at("result").at("samples").size(), 721u);
    EXPECT_EQ(parse_design_config(doc), cfg);
}

TEST(exports, byte_identical_across_runs)
{
    for (const char* name : {"case_b", "case_d", "fig10_a"})
    {
        const DesignConfig cfg = load(name);
        const auto [p1, c1] = build_profile(cfg);
        const auto [p2, c2] = build_profile(cfg);
        EXPECT_EQ(profile_csv(p1, c1), profile_csv(p2, c2));
        EXPECT_EQ(profile_svg(p1, c1), profile_svg(p2, c2));
        EXPECT_EQ(profile_json(cfg, p1, c1).dump(), profile_json(cfg, p2, c2).dump());
    }
}

TEST(evaluation_to_json, scalars_match_sweeps)
{
    const Evaluation ev = evaluate(load("case_c"));
    const json doc = evaluation_to_json(ev);
    double peak = 0.0;
    for (const auto& s : doc.at("hertz_sweep"))
        peak = std::max(peak, s.at(1).get<double>());
    EXPECT_NEAR(peak, doc.at("scalars").at("P_peak_MPa").get<double>(), 1e-9 * peak);
    double mu = 0.0;
    for (const auto& s : doc.at("mu_sweep"))
        mu = std::max(mu, s.at(1).get<double>());
    EXPECT_NEAR(mu, doc.at("scalars").at("mu_max").get<double>(), 1e-9 * mu);
    EXPECT_NEAR(doc.at("scalars").at("mu_max").get<double>(), 26.6555043, 1e-6);
}

TEST(evaluate, invalid_design_carries_ledger)
{
    DesignConfig cfg = load("case_a");
    cfg.params.eta = eta_singular;
    try
    {
        (void)evaluate(cfg);
        FAIL() << "expected InvalidDesign";
    }
    catch (const InvalidDesign& e)
    {
        EXPECT_FALSE(e.report().at(ConstraintId::EtaLowerBound).satisfied);
        EXPECT_NE(std::string(e.what()).find("EtaLowerBound"), std::string::npos);
    }
}
