#include <CLI11.hpp>
#include <iostream>

#include "tcurve/commands.hpp"
#include "tcurve/trace.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tcurve: combinatorial patchworking of real plane curves"};
    app.require_subcommand(1);

    tcurve::BuildSpec build;
    auto* cb = app.add_subcommand("build", "construct a T-curve and report its scheme");
    cb->add_option("--degree", build.degree, "degree m of the curve")->required();
    cb->add_option("--signs", build.signs, "sign distribution: harnack, plus or minus");
    cb->add_option("--signs-file", build.signs_file, "JSON sign distribution");
    cb->add_option("--triangulation-file", build.triangulation_file,
                   "JSON triangulation of T_m (default: standard)");
    cb->add_option("--lift-file", build.lift_file, "JSON convexifying lift");
    cb->add_option("--out", build.out_json, "write the JSON report here (default: stdout)");
    cb->add_option("--svg", build.out_svg, "render the curve to this SVG file");
    cb->add_flag("--svg-arrows", build.svg_arrows,
                 "draw orientation arrows when a type I witness exists");

    tcurve::VerifySpec verify;
    auto* cv = app.add_subcommand("verify", "closed-form and oracle checks for Harnack curves");
    cv->add_option("--degree", verify.degree, "degree m")->required();
    cv->add_flag("--oracle", verify.oracle, "also run the polynomial sign oracle");
    cv->add_option("--grid", verify.grid, "oracle grid base (default 128)");
    cv->add_option("--depth", verify.depth, "oracle refinement depth (default 6)");
    cv->add_option("--s-start", verify.s_start, "first stabilization exponent");
    cv->add_option("--s-max", verify.s_max, "largest stabilization exponent (default 64)");
    cv->add_option("--out", verify.out_json, "write the JSON report here");

    tcurve::CensusSpec census;
    auto* cc = app.add_subcommand("census", "enumerate all sign distributions of a degree");
    cc->add_option("--degree", census.degree, "degree m")->required();
    cc->add_option("--filter-components", census.filter_components,
                   "keep curves with this component count");
    cc->add_option("--filter-type", census.filter_type, "keep curves of type I or II");
    cc->add_option("--filter-code", census.filter_code, "keep curves with this Viro code");
    cc->add_flag("--stream", census.stream, "print every matching distribution");
    cc->add_flag("--json", census.json_output, "JSON output");
    cc->add_option("--cap", census.degree_cap, "largest allowed degree (default 5)");
    cc->add_option("--threads", census.threads, "worker count (default: TCURVE_THREADS)");

    try {
        app.parse(argc, argv);
        if (cb->parsed()) return tcurve::cmd_build(build, std::cout, std::cerr);
        if (cv->parsed()) return tcurve::cmd_verify(verify, std::cout, std::cerr);
        if (cc->parsed()) return tcurve::cmd_census(census, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : tcurve::kExitUsage;
    } catch (const tcurve::ResolutionExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tcurve::kExitResolution;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tcurve::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tcurve::kExitCheckFailed;
    }
    return tcurve::kExitUsage;
}
