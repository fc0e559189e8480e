#pragma once

#include <string>

#include "tcurve/pipeline.hpp"

namespace tcurve {

// Deterministic SVG of the symmetrized square: triangulation in light
// strokes, sign glyphs at lattice points, one polyline per curve component,
// orientation arrows when a type I witness is available and requested.
std::string render_svg(const CurveAnalysis& a, bool orientation_arrows = false);

}  // namespace tcurve
