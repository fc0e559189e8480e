#pragma once

#include <array>
#include <vector>

#include "tcurve/lattice.hpp"
#include "tcurve/signs.hpp"

namespace tcurve {

// A point of the symmetrized square in doubled global coordinates, so that
// edge midpoints land on the integer grid. Lattice points have even entries.
struct GridPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    GridPoint antipode() const { return {-x, -y}; }
};

inline Quadrant quadrant_of(const GridPoint& p) {
    if (p.x >= 0) return p.y >= 0 ? Quadrant::Id : Quadrant::Sy;
    return p.y >= 0 ? Quadrant::Sx : Quadrant::S;
}

struct CopyTriangle {
    int base_index = 0;  // triangle of the base triangulation
    Quadrant q = Quadrant::Id;
    std::array<GridPoint, 3> v;      // doubled coordinates
    std::array<std::int8_t, 3> sign; // extended signs at the vertices
    int minority = -1;               // vertex index carrying the minority sign, -1 if uniform

    bool mixed() const { return minority >= 0; }
};

// The four-quadrant complex T_m^* with extended triangulation and signs.
struct SquareComplex {
    int degree = 0;
    Triangulation base;
    SignDistribution signs;
    std::vector<CopyTriangle> triangles;  // 4 copies per base triangle, Id/Sx/Sy/S order
};

SquareComplex build_square(const RegularTriangulation& t, const SignDistribution& d);

}  // namespace tcurve
