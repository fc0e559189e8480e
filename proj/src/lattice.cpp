#include "tcurve/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tcurve {

const Rat& Lift::at(const LatticePoint& p) const {
    auto it = values.find(p);
    if (it == values.end()) throw std::invalid_argument("Lift: value missing at vertex");
    return it->second;
}

StandardTriangle standard_triangle(int m) {
    if (m < 1) throw std::invalid_argument("standard_triangle: degree must be positive");
    StandardTriangle t;
    t.degree = m;
    t.corners = {LatticePoint{0, 0}, LatticePoint{m, 0}, LatticePoint{0, m}};
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j + i <= m; ++j) t.lattice_points.push_back({i, j});
    return t;
}

Triangulation harnack_triangulation(int m) {
    if (m < 1) throw std::invalid_argument("harnack_triangulation: degree must be positive");
    Triangulation t;
    t.degree = m;
    t.triangles.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i + 1 <= m; ++i) {
        for (int j = 0; i + j + 1 <= m; ++j) {
            t.triangles.push_back({{LatticePoint{i, j}, {i + 1, j}, {i, j + 1}}});
            if (i + j + 2 <= m)
                t.triangles.push_back({{LatticePoint{i + 1, j}, {i + 1, j + 1}, {i, j + 1}}});
        }
    }
    return t;
}

namespace {

using Edge = std::pair<LatticePoint, LatticePoint>;

Edge make_edge(const LatticePoint& a, const LatticePoint& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<std::int64_t>(a.i - o.i) * (b.j - o.j) -
           static_cast<std::int64_t>(a.j - o.j) * (b.i - o.i);
}

// side index: 0 -> y = 0, 1 -> x = 0, 2 -> x + y = m, -1 -> none
int boundary_side(const Edge& e, int m) {
    if (e.first.j == 0 && e.second.j == 0) return 0;
    if (e.first.i == 0 && e.second.i == 0) return 1;
    if (e.first.i + e.first.j == m && e.second.i + e.second.j == m) return 2;
    return -1;
}

}  // namespace

bool is_subdivision(const Triangulation& t) {
    const int m = t.degree;
    if (m < 1 || t.triangles.empty()) return false;

    std::int64_t area2 = 0;
    std::map<Edge, std::vector<LatticePoint>> edges;  // edge -> opposite vertices
    for (const Triangle& tr : t.triangles) {
        if (tr.degenerate()) return false;
        for (const LatticePoint& p : tr.v)
            if (!in_standard_triangle(p, m)) return false;
        area2 += std::abs(tr.doubled_area());
        for (int k = 0; k < 3; ++k) {
            Edge e = make_edge(tr.v[k], tr.v[(k + 1) % 3]);
            edges[e].push_back(tr.v[(k + 2) % 3]);
        }
    }
    if (area2 != static_cast<std::int64_t>(m) * m) return false;

    std::vector<std::pair<int, int>> side_intervals[3];
    for (const auto& [e, opp] : edges) {
        if (opp.size() > 2) return false;
        if (opp.size() == 2) {
            // shared edge: the two triangles must lie on opposite sides
            std::int64_t s0 = cross(e.first, e.second, opp[0]);
            std::int64_t s1 = cross(e.first, e.second, opp[1]);
            if (s0 == 0 || s1 == 0 || (s0 > 0) == (s1 > 0)) return false;
        } else {
            int side = boundary_side(e, m);
            if (side < 0) return false;
            int a, b;
            if (side == 1) {
                a = e.first.j;
                b = e.second.j;
            } else {
                a = e.first.i;
                b = e.second.i;
            }
            side_intervals[side].push_back({std::min(a, b), std::max(a, b)});
        }
    }

    // each side of T_m must be tiled exactly by the boundary edges
    for (auto& iv : side_intervals) {
        std::sort(iv.begin(), iv.end());
        int at = 0;
        for (auto& [a, b] : iv) {
            if (a != at) return false;
            at = b;
        }
        if (at != m) return false;
    }
    return true;
}

Lift default_lift(int m) {
    Lift l;
    for (const LatticePoint& p : standard_triangle(m).lattice_points) {
        std::int64_t i = p.i, j = p.j;
        l.values[p] = Rat(i * i + i * j + j * j);
    }
    return l;
}

RegularTriangulation certify(const Triangulation& t, const Lift& lift) {
    return {t, lift, is_convexifying(t, lift)};
}

}  // namespace tcurve
