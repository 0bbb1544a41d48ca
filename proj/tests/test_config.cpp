#include <string>

#include <gtest/gtest.h>

#include "slideocam/config.hpp"
#include "test_support.hpp"

using namespace slideocam;

namespace
{

json case_a_document()
{
    return json::parse(test_support::read_file(test_support::source_path("configs/case_a.json")));
}

} // namespace

TEST(parse_design_config, case_a_file)
{
    const DesignConfig cfg = parse_design_config(case_a_document());
    EXPECT_DOUBLE_EQ(units::to_mm(cfg.params.pitch), 20.0);
    EXPECT_DOUBLE_EQ(cfg.params.eta, 0.1875);
    EXPECT_DOUBLE_EQ(units::to_mm(cfg.params.roller_radius), 2.5);
    EXPECT_DOUBLE_EQ(units::to_mm(cfg.params.camshaft_radius), 1.25);
    EXPECT_EQ(cfg.params.cams, 1);
    EXPECT_DOUBLE_EQ(cfg.params.torque, 1.2);
    EXPECT_DOUBLE_EQ(cfg.params.material.young_modulus / units::GPa, 210.0);
    EXPECT_EQ(cfg.analysis.samples, 721u);
    EXPECT_EQ(cfg.analysis.variant, RadiusVariant::PaperConstant);
    EXPECT_NEAR(units::to_deg(cfg.analysis.mu_limit), 30.0, 1e-12);
}

TEST(parse_design_config, eta_and_offset_are_exclusive)
{
    json doc = case_a_document();
    doc["design"]["eta"] = 0.2;
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc["design"].erase("offset_mm");
    EXPECT_DOUBLE_EQ(parse_design_config(doc).params.eta, 0.2);
    doc["design"].erase("eta");
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
}

TEST(parse_design_config, unknown_keys_rejected)
{
    for (const char* section : {"design", "material", "analysis"})
    {
        json doc = case_a_document();
        doc[section]["colour"] = "blue";
        EXPECT_THROW((void)parse_design_config(doc), ConfigError) << section;
    }
    json doc = case_a_document();
    doc["extra"] = 1;
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
}

TEST(parse_design_config, type_and_range_errors)
{
    json doc = case_a_document();
    doc["design"]["pitch_mm"] = "20";
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc = case_a_document();
    doc["design"]["cams"] = 1.5;
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc = case_a_document();
    doc["analysis"]["mu_limit_deg"] = 95;
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc = case_a_document();
    doc["analysis"]["r_eq_variant"] = "mean";
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc = case_a_document();
    doc["material"].erase("young_modulus_MPa");
    EXPECT_THROW((void)parse_design_config(doc), ConfigError);
    doc = case_a_document();
    doc.erase("analysis");
    EXPECT_EQ(parse_design_config(doc).analysis, AnalysisOptions{});
}

TEST(design_config_to_json, round_trip_is_exact)
{
    for (const char* name : {"case_a", "case_b", "case_c", "case_d", "fig10_a", "fig10_b"})
    {
        const DesignConfig cfg = parse_design_config(
            json::parse(test_support::read_file(test_support::source_path(std::string("configs/") + name + ".json"))));
        EXPECT_EQ(parse_design_config(design_config_to_json(cfg)), cfg) << name;
    }
}

TEST(parse_design_config, accepts_profile_document)
{
    const DesignConfig cfg = parse_design_config(case_a_document());
    json doc{{"config", design_config_to_json(cfg)}, {"result", json::object()}};
    EXPECT_EQ(parse_design_config(doc), cfg);
}

TEST(parse_synthesis_request, orthoglide_file)
{
    const SynthesisRequest r = parse_synthesis_request(
        json::parse(test_support::read_file(test_support::source_path("configs/orthoglide_request.json"))));
    EXPECT_DOUBLE_EQ(r.torque, 1.2);
    EXPECT_DOUBLE_EQ(units::to_mm(r.base_pitch), 20.0);
    EXPECT_EQ(r.max_cams, 6);
    EXPECT_EQ(r.max_pitch_steps, 5);
    EXPECT_EQ(r.n_samples, 721u);
    EXPECT_DOUBLE_EQ(units::to_MPa(r.material.camshaft_stress), 150.0);
}

TEST(parse_synthesis_request, defaults_and_errors)
{
    json doc = json::parse(test_support::read_file(test_support::source_path("configs/orthoglide_request.json")));
    for (const char* key : {"mu_limit_deg", "max_cams", "max_pitch_steps", "r_eq_variant", "clearance_mm",
                            "size_step_mm", "samples"})
        doc.erase(key);
    const SynthesisRequest r = parse_synthesis_request(doc);
    EXPECT_NEAR(units::to_deg(r.mu_limit), 30.0, 1e-12);
    EXPECT_EQ(r.variant, RadiusVariant::PaperConstant);

    doc["torque_Nm"] = -1.0;
    EXPECT_THROW((void)parse_synthesis_request(doc), ConfigError);
    doc["torque_Nm"] = 1.0;
    doc["unknown"] = true;
    EXPECT_THROW((void)parse_synthesis_request(doc), ConfigError);
}

TEST(parse_radius_variant, names)
{
    EXPECT_EQ(parse_radius_variant("paper"), RadiusVariant::PaperConstant);
    EXPECT_EQ(parse_radius_variant("local"), RadiusVariant::LocalCurvature);
    EXPECT_THROW((void)parse_radius_variant("other"), ConfigError);
}
