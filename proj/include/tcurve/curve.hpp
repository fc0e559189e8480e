#pragma once

#include <vector>

#include "tcurve/square.hpp"

namespace tcurve {

enum class CurveMode { Square, Projective, Affine };

// Piecewise-linear curve on the symmetrized square: vertices are edge
// midpoints in doubled coordinates, segments are the per-triangle midlines.
struct CurveGraph {
    CurveMode mode = CurveMode::Square;
    int degree = 0;

    std::vector<GridPoint> vertices;
    struct Segment {
        int a = -1;  // vertex index; -1 marks an open end (affine mode)
        int b = -1;
        int copy_triangle = -1;
    };
    std::vector<Segment> segments;

    // filled for Projective and Affine modes
    std::vector<int> segment_component;
    int n_components = 0;
    int open_ends = 0;  // affine mode

    bool on_boundary(const GridPoint& p) const {
        return std::abs(p.x) + std::abs(p.y) == 2 * degree;
    }
};

// One midline per mixed triangle of the complex, joining the midpoints of the
// two edges at the minority-sign vertex.
CurveGraph midlines(const SquareComplex& sq);

// Identify antipodal boundary points; the result is a closed 1-manifold and
// every vertex has degree exactly 2 (violations throw, they indicate a bug).
CurveGraph glue_projective(const CurveGraph& square);

// Delete the open hypotenuse sides; arcs ending there get open ends.
CurveGraph affine_model(const CurveGraph& square);

// Number of curve points on the glued boundary circle, antipodal pairs
// counted once. Projective mode only.
int boundary_points(const CurveGraph& projective);

}  // namespace tcurve
