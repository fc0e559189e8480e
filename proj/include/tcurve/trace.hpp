#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "tcurve/curve.hpp"
#include "tcurve/patch_poly.hpp"

namespace tcurve {

// Topology of an affine curve at grid scale.
struct AffineSummary {
    int bounded_components = 0;
    int unbounded_branch_ends = 0;
    int affine_components = 0;
    std::string bounded_nesting;  // canonical forest code of the bounded loops

    friend bool operator==(const AffineSummary& a, const AffineSummary& b) {
        return a.bounded_components == b.bounded_components &&
               a.unbounded_branch_ends == b.unbounded_branch_ends &&
               a.affine_components == b.affine_components &&
               a.bounded_nesting == b.bounded_nesting;
    }
    std::string to_string() const;
};

// Summary of the combinatorial affine model.
AffineSummary affine_summary(const CurveGraph& affine);

struct ResolutionExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceOptions {
    int grid_base = 128;    // samples per axis direction of one quadrant
    int refine_depth = 6;   // recursive saddle refinement limit
    int threads = 0;        // grid evaluation workers; 0 = TCURVE_THREADS/hardware
    Rat margin = Rat(1, 2);
    // log-coordinate window; when unset it is [-margin, 2m-1+margin], which
    // contains every bounded dual cell of the default lift
    bool window_set = false;
    Rat window_lo, window_hi;
};

// Exact window containing all dual-subdivision vertices of a lifted
// triangulation, padded by margin; feeds TraceOptions for custom lifts.
std::pair<Rat, Rat> dual_window(const Triangulation& t, const Lift& lift, const Rat& margin);

// Exact-sign sampling at x = sigma1 * rho(u), y = sigma2 * rho(v) where rho
// approximates t^{-u}, with the coordinate axes included so the four quadrant
// grids stitch into one sign grid; marching squares with recursive saddle
// refinement extracts the curve. Throws ResolutionExceeded if a saddle or a
// sampling contradiction survives at full depth.
struct TraceResult {
    AffineSummary summary;
    std::array<int, 4> quadrant_segments{};  // ++, -+, +-, -- marching segments
};

TraceResult trace_affine(const PatchPolynomial& p, const TraceOptions& opt = {});

struct VerifyOptions {
    TraceOptions trace;
    int s_start = 1;
    int s_max = 64;
};

// Escalates s until two consecutive traces agree with each other and with the
// combinatorial summary.
struct VerifyReport {
    bool match = false;
    int stabilized_s = -1;
    int grid = 0;
    std::string failure;  // empty, "mismatch", "no stabilization", "resolution exceeded"
    AffineSummary combinatorial;
    AffineSummary traced;  // last trace
    std::array<int, 4> quadrant_segments{};
};

VerifyReport verify_patchwork(const SignDistribution& d, const Lift& lift,
                              const AffineSummary& combinatorial,
                              const VerifyOptions& opt = {});

}  // namespace tcurve
