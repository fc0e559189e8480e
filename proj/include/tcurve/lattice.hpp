#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tcurve/rational.hpp"

namespace tcurve {

struct LatticePoint {
    int i = 0;
    int j = 0;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

inline bool in_standard_triangle(const LatticePoint& p, int m) {
    return p.i >= 0 && p.j >= 0 && p.i + p.j <= m;
}

struct Triangle {
    std::array<LatticePoint, 3> v;

    // Twice the signed area of (v0, v1, v2); elementary triangles have |value| 1.
    std::int64_t doubled_area() const {
        std::int64_t ax = v[1].i - v[0].i, ay = v[1].j - v[0].j;
        std::int64_t bx = v[2].i - v[0].i, by = v[2].j - v[0].j;
        return ax * by - ay * bx;
    }
    bool degenerate() const { return doubled_area() == 0; }
    bool elementary() const { return doubled_area() == 1 || doubled_area() == -1; }
};

struct Triangulation {
    int degree = 0;
    std::vector<Triangle> triangles;
};

// Piecewise data for a lift nu defined on the vertices it mentions.
struct Lift {
    std::map<LatticePoint, Rat> values;

    const Rat& at(const LatticePoint& p) const;
    bool defined_at(const LatticePoint& p) const { return values.count(p) != 0; }
};

struct RegularTriangulation {
    Triangulation triangulation;
    Lift lift;
    bool certified = false;
};

struct StandardTriangle {
    int degree = 0;
    std::array<LatticePoint, 3> corners;
    std::vector<LatticePoint> lattice_points;  // lexicographic (i, j) order
};

// T_m = {x >= 0, y >= 0, x + y <= m}; rejects m = 0.
StandardTriangle standard_triangle(int m);

// The m^2 elementary triangles from cutting the unit cells of T_m along anti-diagonals.
Triangulation harnack_triangulation(int m);

// Exact audit: triangles tile T_m and pairwise intersections are shared faces.
bool is_subdivision(const Triangulation& t);

// nu(i, j) = i^2 + i*j + j^2 on every lattice point of T_m.
Lift default_lift(int m);

// Strict-kink convexity check across every interior edge, plus the (unrequired)
// integrality flag of the lift values.
struct ConvexifyReport {
    bool convexifying = false;
    bool integral = false;
};

ConvexifyReport convexify_report(const Triangulation& t, const Lift& lift);
bool is_convexifying(const Triangulation& t, const Lift& lift);

// Exact-rational LP: maximize a uniform kink margin; nullopt when the
// triangulation is not regular. Returned lift is nonnegative with minimum 0.
std::optional<Lift> find_convexifier(const Triangulation& t);

// Certifies via is_convexifying; throws if the lift is not defined on all vertices.
RegularTriangulation certify(const Triangulation& t, const Lift& lift);

}  // namespace tcurve
