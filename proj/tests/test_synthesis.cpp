#include <cmath>

#include <gtest/gtest.h>

#include "slideocam/errors.hpp"
#include "slideocam/synthesis.hpp"
#include "test_support.hpp"

using namespace slideocam;
using test_support::orthoglide_case;

namespace
{

SynthesisRequest orthoglide_request()
{
    SynthesisRequest r;
    r.torque = 1.2;
    r.base_pitch = units::from_mm(20.0);
    return r;
}

} // namespace

TEST(check_constraints, eta_at_singular_value)
{
    auto p = orthoglide_case('a');
    p.eta = eta_singular;
    const ConstraintReport r = check_constraints(p);
    const ConstraintCheck& c = r.at(ConstraintId::EtaLowerBound);
    EXPECT_FALSE(c.satisfied);
    EXPECT_EQ(c.margin, 0.0);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.geometry_valid());
}

TEST(check_constraints, rollers_touching)
{
    auto p = orthoglide_case('a');
    p.roller_radius = units::from_mm(10.0);
    p.eta = 0.6;
    const ConstraintCheck& c = check_constraints(p).at(ConstraintId::RollerSpacing);
    EXPECT_FALSE(c.satisfied);
    EXPECT_NEAR(c.margin, 0.0, 1e-15);
}

TEST(check_constraints, shaft_clearance_boundary_and_violation)
{
    auto p = orthoglide_case('a');
    const ConstraintCheck& edge = check_constraints(p).at(ConstraintId::ShaftClearance);
    EXPECT_TRUE(edge.satisfied);
    EXPECT_NEAR(edge.margin, 0.0, 1e-15);

    p.camshaft_radius = units::from_mm(1.5);
    const ConstraintCheck& bad = check_constraints(p).at(ConstraintId::ShaftClearance);
    EXPECT_FALSE(bad.satisfied);
    EXPECT_NEAR(bad.margin, -0.25 / 20.0, 1e-12);
}

TEST(check_constraints, case_a_layout)
{
    const ConstraintReport r = check_constraints(orthoglide_case('a'), units::from_deg(30.0));
    EXPECT_TRUE(r.geometry_valid());
    EXPECT_TRUE(r.at(ConstraintId::PressureAngleLimit).satisfied);
    EXPECT_NEAR(units::to_deg(r.at(ConstraintId::PressureAngleLimit).margin), 30.0 - 8.01896576, 1e-7);
    EXPECT_TRUE(r.at(ConstraintId::BearingShear).satisfied);
    EXPECT_TRUE(r.at(ConstraintId::HertzLimit).satisfied);
    // a 2.5 mm camshaft is below the 3.75 mm shear+bending minimum
    EXPECT_FALSE(r.at(ConstraintId::CamShear).satisfied);
    EXPECT_NEAR(r.at(ConstraintId::CamShear).margin, 2.5 / 3.75023828 - 1.0, 1e-8);
}

TEST(check_constraints, never_throws_on_invalid_input)
{
    DesignParameters p;
    EXPECT_NO_THROW({
        const ConstraintReport r = check_constraints(p);
        EXPECT_EQ(r.checks.size(), 7u);
        EXPECT_FALSE(r.passed());
    });
}

TEST(check_constraints, pressure_angle_limit)
{
    const ConstraintReport r = check_constraints(orthoglide_case('d'), units::from_deg(20.0));
    EXPECT_FALSE(r.at(ConstraintId::PressureAngleLimit).satisfied);
    EXPECT_LT(r.at(ConstraintId::PressureAngleLimit).margin, 0.0);
}

TEST(round_up_strict, lands_on_next_grid_point)
{
    EXPECT_NEAR(detail::round_up_strict(units::from_mm(1.78885438), units::from_mm(0.05)), units::from_mm(1.8), 1e-15);
    EXPECT_NEAR(detail::round_up_strict(units::from_mm(1.8), units::from_mm(0.05)), units::from_mm(1.85), 1e-15);
}

TEST(synthesize, orthoglide_request)
{
    const SynthesisOutcome o = synthesize(orthoglide_request());
    ASSERT_FALSE(o.trace.empty());
    EXPECT_NEAR(units::to_mm(o.trace.front().bearing_min), 1.8, 0.05);
    EXPECT_NEAR(units::to_mm(o.trace.front().camshaft_min), 3.75, 0.05);
    EXPECT_EQ(o.trace.front().lines, follower_lines);
    EXPECT_EQ(o.trace.back().verdict, Verdict::Accepted);
    EXPECT_EQ(o.design.cams, 4);
    EXPECT_LE(o.kinetostatics.mu_max, units::from_deg(30.0));
    EXPECT_TRUE(o.constraints.passed());
    for (const auto& c : check_constraints(o.design, units::from_deg(30.0)).checks)
        EXPECT_GT(c.margin, 0.0) << to_string(c.id);
    EXPECT_LE(o.hertz.peak, o.design.material.max_pressure);
}

TEST(synthesize, deterministic)
{
    const SynthesisOutcome a = synthesize(orthoglide_request());
    const SynthesisOutcome b = synthesize(orthoglide_request());
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.design, b.design);
}

TEST(synthesize, unconstrained_angle_accepts_first_candidate)
{
    auto r = orthoglide_request();
    r.mu_limit = units::pi / 2.0;
    const SynthesisOutcome o = synthesize(r);
    ASSERT_EQ(o.trace.size(), 1u);
    EXPECT_EQ(o.trace.front().verdict, Verdict::Accepted);
    EXPECT_EQ(o.design.cams, initial_cams);
}

TEST(synthesize, impossible_request_reports_full_trace)
{
    auto r = orthoglide_request();
    r.mu_limit = units::from_deg(0.1);
    r.max_cams = 2;
    r.max_pitch_steps = 2;
    try
    {
        (void)synthesize(r);
        FAIL() << "expected SynthesisInfeasible";
    }
    catch (const SynthesisInfeasible& e)
    {
        ASSERT_EQ(e.trace().size(), 4u);
        EXPECT_NEAR(units::to_mm(e.trace()[2].pitch), 40.0, 1e-12);
        for (const auto& t : e.trace())
            EXPECT_EQ(t.verdict, Verdict::PressureAngleTooHigh);
    }
}

TEST(synthesize, relaxing_the_limit_never_lengthens_the_trace)
{
    std::size_t previous = SIZE_MAX;
    for (double limit_deg : {8.0, 10.0, 15.0, 30.0, 60.0, 90.0})
    {
        auto r = orthoglide_request();
        r.mu_limit = units::from_deg(limit_deg);
        std::size_t length = 0;
        try
        {
            length = synthesize(r).trace.size();
        }
        catch (const SynthesisInfeasible& e)
        {
            length = e.trace().size();
        }
        EXPECT_LE(length, previous) << limit_deg;
        previous = length;
    }
}

TEST(synthesize, local_curvature_width)
{
    auto r = orthoglide_request();
    r.variant = RadiusVariant::LocalCurvature;
    const SynthesisOutcome o = synthesize(r);
    EXPECT_TRUE(o.constraints.passed());
    EXPECT_EQ(o.hertz.variant, RadiusVariant::LocalCurvature);
}

TEST(synthesize, rejects_invalid_requests)
{
    auto r = orthoglide_request();
    r.torque = 0.0;
    EXPECT_THROW((void)synthesize(r), CamError);
    r = orthoglide_request();
    r.mu_limit = units::from_deg(91.0);
    EXPECT_THROW((void)synthesize(r), CamError);
    r = orthoglide_request();
    r.max_cams = 0;
    EXPECT_THROW((void)synthesize(r), CamError);
}
