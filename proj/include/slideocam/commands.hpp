#pragma once

// The CLI subcommands as plain functions over streams, so they can be tested
// without spawning processes. Exit codes: 0 ok, 1 I/O, 2 invalid design,
// 3 infeasible synthesis.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "evaluation.hpp"
#include "export.hpp"
#include "format.hpp"
#include "synthesis.hpp"
#include "units.hpp"

namespace slideocam::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_io = 1,
    exit_invalid = 2,
    exit_infeasible = 3,
};

struct Options
{
    std::string config;
    std::string out;
    std::string format = "csv";
    bool json = false;
    std::optional<RadiusVariant> variant;
    std::optional<std::size_t> samples;
};

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail
{

inline json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    json doc = json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded())
        throw ConfigError(path + " is not valid JSON");
    return doc;
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-")
    {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush())
        throw IoError("cannot write " + path);
}

inline DesignConfig load_config(const Options& opt)
{
    DesignConfig cfg = parse_design_config(read_json(opt.config));
    if (opt.variant)
        cfg.analysis.variant = *opt.variant;
    if (opt.samples)
    {
        if (*opt.samples < 5)
            throw ConfigError("--samples must be at least 5");
        cfg.analysis.samples = *opt.samples;
    }
    return cfg;
}

inline void print_ledger(const ConstraintReport& report, std::ostream& os)
{
    for (const auto& c : report.checks)
    {
        os << "  " << std::left << std::setw(20) << to_string(c.id) << (c.satisfied ? "ok    " : "FAILED")
           << "  margin " << format_fixed(c.margin);
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << '\n';
    }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body)
{
    try
    {
        return body();
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const ConfigError& e)
    {
        err << "invalid configuration: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const InvalidDesign& e)
    {
        err << "invalid design: " << e.what() << '\n';
        print_ledger(e.report(), err);
        return exit_invalid;
    }
    catch (const CamError& e)
    {
        err << "invalid design: " << e.what() << '\n';
        return exit_invalid;
    }
}

} // namespace detail

/// Writes the sampled cam profile and pitch curve as csv, svg or json.
inline int profile(const Options& opt, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        if (opt.format != "csv" && opt.format != "svg" && opt.format != "json")
            throw ConfigError("--format must be csv, svg or json");
        const DesignConfig cfg = detail::load_config(opt);
        const auto [cam, pitch] = build_profile(cfg);
        std::string text;
        if (opt.format == "csv")
            text = profile_csv(cam, pitch);
        else if (opt.format == "svg")
            text = profile_svg(cam, pitch);
        else
            text = profile_json(cfg, cam, pitch).dump(1) + "\n";
        detail::write_text(opt.out, text, out);
        return static_cast<int>(exit_ok);
    });
}

inline void print_analysis(const Evaluation& ev, std::ostream& os)
{
    const KinetostaticReport& k = ev.kinetostatics;
    auto row = [&os](const char* label, const std::string& value, const char* unit) {
        os << "  " << std::left << std::setw(26) << label << std::right << std::setw(16) << value << ' ' << unit << '\n';
    };
    auto deg = [](double rad) { return format_fixed(units::to_deg(rad)); };
    os << "kinetostatics\n";
    row("extended angle", deg(k.delta_ext), "deg");
    row("active interval start", deg(k.interval.start), "deg");
    row("active interval end", deg(k.interval.end), "deg");
    row("mu_max", deg(k.mu_max), "deg");
    row("mu_min", deg(k.mu_min), "deg");
    row("delta_mu", deg(k.delta_mu), "deg");
    row("axial load 2 pi Mt / p", format_fixed(ev.axial_force), "N");
    row("F_max", format_fixed(k.force_max), "N");
    row("r_cam_min", format_fixed(units::to_mm(k.r_cam_min)), "mm");
    os << "shafts\n";
    row("phi_cam = 2 (e - a4)", format_fixed(units::to_mm(ev.diameters.camshaft)), "mm");
    row("phi_bear = 2 a4", format_fixed(units::to_mm(ev.diameters.bearing)), "mm");
    os << "hertz (E = " << format_fixed(units::to_MPa(ev.config.params.material.young_modulus)) << " MPa, a = "
       << format_fixed(units::to_mm(ev.config.params.width)) << " mm)\n";
    row("paper r_eq  P_peak", format_fixed(units::to_MPa(ev.hertz_paper.peak)), "MPa");
    row("paper r_eq  P_low", format_fixed(units::to_MPa(ev.hertz_paper.low)), "MPa");
    row("local r_eq  P_peak", format_fixed(units::to_MPa(ev.hertz_local.peak)), "MPa");
    row("local r_eq  P_low", format_fixed(units::to_MPa(ev.hertz_local.low)), "MPa");
    os << "constraints (r_eq variant: " << to_string(ev.hertz.variant) << ", mu limit "
       << deg(ev.config.analysis.mu_limit) << " deg)\n";
    detail::print_ledger(ev.constraints, os);
    os << (ev.constraints.passed() ? "verdict: all constraints satisfied\n" : "verdict: constraints violated\n");
}

/// Prints the kinetostatic and strength report, as a table or as JSON.
inline int analyze(const Options& opt, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const Evaluation ev = evaluate(detail::load_config(opt));
        if (opt.json)
            out << evaluation_to_json(ev).dump(1) << '\n';
        else
            print_analysis(ev, out);
        return static_cast<int>(exit_ok);
    });
}

/// Runs the sizing loop on a request file and prints the outcome as JSON.
inline int synthesize(const Options& opt, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        SynthesisRequest request = parse_synthesis_request(detail::read_json(opt.config));
        if (opt.variant)
            request.variant = *opt.variant;
        if (opt.samples)
            request.n_samples = *opt.samples;
        try
        {
            const SynthesisOutcome outcome = slideocam::synthesize(request);
            out << outcome_to_json(outcome, request).dump(1) << '\n';
            return static_cast<int>(exit_ok);
        }
        catch (const SynthesisInfeasible& e)
        {
            out << infeasible_to_json(e).dump(1) << '\n';
            err << "synthesis infeasible after " << e.trace().size() << " iterations\n";
            return static_cast<int>(exit_infeasible);
        }
    });
}

} // namespace slideocam::cli
