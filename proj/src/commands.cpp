#include "tcurve/commands.hpp"

#include <fstream>
#include <iomanip>

#include "tcurve/census.hpp"
#include "tcurve/json_io.hpp"
#include "tcurve/svg.hpp"

namespace tcurve {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const json& report, const std::string& path, std::ostream& fallback) {
    std::string text = report.dump(2);
    if (path.empty()) {
        fallback << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text << "\n";
}

SignDistribution load_signs(const BuildSpec& spec) {
    if (!spec.signs_file.empty()) {
        SignDistribution d = signs_from_json(load_json(spec.signs_file));
        if (d.degree != spec.degree)
            throw std::invalid_argument("signs file degree differs from --degree");
        return d;
    }
    if (spec.signs == "harnack") return harnack_signs(spec.degree);
    if (spec.signs == "plus") return uniform_signs(spec.degree, 1);
    if (spec.signs == "minus") return uniform_signs(spec.degree, -1);
    throw std::invalid_argument("unknown sign distribution '" + spec.signs + "'");
}

RegularTriangulation load_regular(const BuildSpec& spec, std::ostream& diag) {
    if (spec.triangulation_file.empty()) {
        if (!spec.lift_file.empty()) {
            Lift lift = lift_from_json(load_json(spec.lift_file));
            RegularTriangulation reg = certify(harnack_triangulation(spec.degree), lift);
            if (!reg.certified)
                throw std::invalid_argument("supplied lift is not convexifying");
            return reg;
        }
        return standard_regular(spec.degree);
    }
    Triangulation tri = triangulation_from_json(load_json(spec.triangulation_file));
    if (tri.degree != spec.degree)
        throw std::invalid_argument("triangulation file degree differs from --degree");
    if (!is_subdivision(tri))
        throw std::invalid_argument("triangulation file is not a subdivision of T_m");
    if (!spec.lift_file.empty()) {
        Lift lift = lift_from_json(load_json(spec.lift_file));
        RegularTriangulation reg = certify(tri, lift);
        if (!reg.certified) throw std::invalid_argument("supplied lift is not convexifying");
        return reg;
    }
    auto lift = find_convexifier(tri);
    if (!lift) throw std::invalid_argument("triangulation is not regular");
    diag << "note: lift found by LP and certified\n";
    return certify(tri, *lift);
}

}  // namespace

int cmd_build(const BuildSpec& spec, std::ostream& out, std::ostream& diag) {
    if (spec.degree < 1) {
        diag << "error: --degree must be at least 1\n";
        return kExitUsage;
    }
    RegularTriangulation reg = load_regular(spec, diag);
    SignDistribution signs = load_signs(spec);
    CurveAnalysis a = analyze(reg, signs);
    write_output(build_report(a), spec.out_json, out);
    if (!spec.out_svg.empty()) {
        std::ofstream svg(spec.out_svg);
        if (!svg) throw std::invalid_argument("cannot write " + spec.out_svg);
        svg << render_svg(a, spec.svg_arrows);
    }
    return kExitOk;
}

int cmd_verify(const VerifySpec& spec, std::ostream& out, std::ostream& diag) {
    if (spec.degree < 1) {
        diag << "error: --degree must be at least 1\n";
        return kExitUsage;
    }
    CurveAnalysis a = analyze(standard_regular(spec.degree), harnack_signs(spec.degree));
    CrossCheckReport checks = cross_check(a);
    json report{{"degree", spec.degree}, {"checks", to_json(checks)}};

    int exit_code = checks.all_pass ? kExitOk : kExitCheckFailed;
    if (!checks.all_pass)
        for (const auto& item : checks.items)
            if (!item.pass)
                diag << "failed identity: " << item.identity << " (expected " << item.expected
                     << ", got " << item.actual << ")\n";

    if (spec.oracle) {
        VerifyOptions opt;
        opt.trace.grid_base = spec.grid;
        opt.trace.refine_depth = spec.depth;
        opt.s_start = spec.s_start;
        opt.s_max = spec.s_max;
        AffineSummary comb = affine_summary(affine_model(a.square_graph));
        VerifyReport oracle =
            verify_patchwork(a.square.signs, standard_regular(spec.degree).lift, comb, opt);
        report["oracle"] = to_json(oracle);
        if (!oracle.match) {
            diag << "oracle: " << oracle.failure << "\n";
            exit_code = oracle.failure == "mismatch" ? kExitCheckFailed : kExitResolution;
        }
    }
    write_output(report, spec.out_json, out);
    return exit_code;
}

int cmd_census(const CensusSpec& spec, std::ostream& out, std::ostream& diag) {
    if (spec.degree < 1) {
        diag << "error: --degree must be at least 1\n";
        return kExitUsage;
    }
    CensusFilter filter;
    filter.components = spec.filter_components;
    if (!spec.filter_code.empty()) filter.viro = spec.filter_code;
    if (spec.filter_type == "I") filter.type = CurveTypeKind::TypeI;
    else if (spec.filter_type == "II") filter.type = CurveTypeKind::TypeII;
    else if (!spec.filter_type.empty())
        throw std::invalid_argument("--filter-type must be I or II");

    int threads = spec.threads > 0 ? spec.threads : census_threads_from_env();
    auto stream = [&](std::uint64_t idx, const std::string& signs, const std::string& code,
                      CurveTypeKind type) {
        out << idx << " " << signs << " " << code << " " << type_name(type) << "\n";
    };
    CensusResult res =
        run_census(spec.degree, filter, threads, spec.degree_cap,
                   spec.stream ? std::function<void(std::uint64_t, const std::string&,
                                                    const std::string&, CurveTypeKind)>(stream)
                               : nullptr);

    if (spec.json_output) {
        json rows = json::array();
        for (const auto& row : res.rows)
            rows.push_back({{"viro_code", row.code},
                            {"viro_code_ascii", row.code_ascii},
                            {"type", type_name(row.type)},
                            {"count", row.count},
                            {"first_index", row.first_index},
                            {"witness", row.witness}});
        out << json{{"degree", res.degree},
                    {"total", res.total},
                    {"matched", res.matched},
                    {"schemes", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << "degree " << res.degree << ": " << res.matched << "/" << res.total
            << " distributions matched, " << res.rows.size() << " scheme/type classes\n";
        for (const auto& row : res.rows)
            out << std::setw(10) << row.count << "  " << row.code << "  type " << type_name(row.type)
                << "  (first #" << row.first_index << " " << row.witness << ")\n";
    }
    (void)diag;
    return kExitOk;
}

}  // namespace tcurve
