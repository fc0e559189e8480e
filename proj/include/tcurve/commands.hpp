#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace tcurve {

// exit codes shared by the CLI: 0 pass, 1 check failure, 2 validation/usage,
// 3 resolution/stabilization failure
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResolution = 3;

struct BuildSpec {
    int degree = 0;
    std::string signs = "harnack";  // harnack | plus | minus
    std::string signs_file;        // overrides `signs` when set
    std::string triangulation_file;  // empty: standard triangulation
    std::string lift_file;           // empty: default lift (or LP for custom input)
    std::string out_json;            // empty: stdout
    std::string out_svg;
    bool svg_arrows = false;
};
int cmd_build(const BuildSpec& spec, std::ostream& out, std::ostream& diag);

struct VerifySpec {
    int degree = 0;
    bool oracle = false;
    int grid = 128;
    int depth = 6;
    int s_start = 1;
    int s_max = 64;
    std::string out_json;  // empty: stdout
};
int cmd_verify(const VerifySpec& spec, std::ostream& out, std::ostream& diag);

struct CensusSpec {
    int degree = 0;
    std::optional<int> filter_components;
    std::string filter_type;  // "", "I", "II"
    std::string filter_code;
    bool stream = false;
    bool json_output = false;
    int degree_cap = 5;
    int threads = 0;  // 0: TCURVE_THREADS or hardware
};
int cmd_census(const CensusSpec& spec, std::ostream& out, std::ostream& diag);

}  // namespace tcurve
