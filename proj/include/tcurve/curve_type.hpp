#pragma once

#include <cstdint>
#include <vector>

#include "tcurve/curve.hpp"
#include "tcurve/square.hpp"

namespace tcurve {

enum class CurveTypeKind { TypeI, TypeII, EmptyCurve };

struct TypeVerdict {
    CurveTypeKind kind = CurveTypeKind::EmptyCurve;
    // witness when TypeI: orientation flip bit per base triangle
    std::vector<std::uint8_t> flips;
};

// Decides type by orienting the curve coherently. Each base triangle gets one
// flip bit shared by its four copies; a copy's reference orientation puts the
// extended-plus region on the left, twisted per quadrant by the exponent
// parities of the triangle (the coupling its trinomial forces on the copies).
// Degree-2 coherence gives one GF(2) equation per vertex; solvable <=> type I.
// All triangles must be elementary.
TypeVerdict curve_type(const SquareComplex& sq, const CurveGraph& projective);

// The reference direction used by curve_type for one segment; true means the
// stored (a -> b) order. Composing with the witness flip bit of the owning
// base triangle yields a coherent orientation of a type I curve.
bool segment_reference_ab(const SquareComplex& sq, const CurveGraph::Segment& segment);

}  // namespace tcurve
