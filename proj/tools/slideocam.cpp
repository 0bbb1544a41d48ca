// slideocam: profile export, analysis, synthesis and the HTTP service.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "slideocam/commands.hpp"
#include "slideocam/http_server.hpp"

int main(int argc, char** argv)
{
    using namespace slideocam;

    CLI::App app{"Slide-o-Cam cam-roller transmission design toolkit"};
    app.require_subcommand(1);

    cli::Options opt;
    std::string variant;
    std::size_t samples = 0;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string origin = "*";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "design configuration (JSON)")->required();
        sub->add_option("--req-variant", variant, "equivalent radius for the Hertz check: paper|local")
            ->check(CLI::IsMember({"paper", "local"}));
        sub->add_option("--samples", samples, "number of samples over one period")->check(CLI::Range(5, 200000));
    };

    CLI::App* profile = app.add_subcommand("profile", "write the cam profile and pitch curve");
    add_common(profile);
    profile->add_option("--out", opt.out, "output file (default: stdout)");
    profile->add_option("--format", opt.format, "csv|svg|json")->check(CLI::IsMember({"csv", "svg", "json"}));

    CLI::App* analyze = app.add_subcommand("analyze", "print the kinetostatic and strength report");
    add_common(analyze);
    analyze->add_flag("--json", opt.json, "print the report as JSON");

    CLI::App* synth = app.add_subcommand("synthesize", "run the iterative sizing procedure");
    add_common(synth);

    CLI::App* serve = app.add_subcommand("serve", "serve the JSON API over HTTP");
    serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    serve->add_option("--host", host, "bind address");
    serve->add_option("--origin", origin, "allowed CORS origin");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_invalid;
    }

    if (!variant.empty())
        opt.variant = parse_radius_variant(variant);
    if (samples != 0)
        opt.samples = samples;

    if (profile->parsed())
        return cli::profile(opt, std::cout, std::cerr);
    if (analyze->parsed())
        return cli::analyze(opt, std::cout, std::cerr);
    if (synth->parsed())
        return cli::synthesize(opt, std::cout, std::cerr);

    httplib::Server server;
    service::install_routes(server, origin);
    std::cerr << "listening on http://" << host << ':' << port << service::api_prefix << '\n';
    if (!server.listen(host, port))
    {
        std::cerr << "error: cannot bind " << host << ':' << port << '\n';
        return cli::exit_io;
    }
    return cli::exit_ok;
}
