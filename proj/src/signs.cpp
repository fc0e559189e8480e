#include "tcurve/signs.hpp"

#include <stdexcept>

namespace tcurve {

const char* quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::Id: return "id";
        case Quadrant::Sx: return "sx";
        case Quadrant::Sy: return "sy";
        case Quadrant::S: return "s";
    }
    return "?";
}

SignDistribution harnack_signs(int m) {
    if (m < 1) throw std::invalid_argument("harnack_signs: degree must be positive");
    SignDistribution d;
    d.degree = m;
    for (const LatticePoint& p : standard_triangle(m).lattice_points)
        d.signs.push_back((p.i % 2 == 0 && p.j % 2 == 0) ? -1 : 1);
    return d;
}

SignDistribution uniform_signs(int m, std::int8_t sign) {
    if (m < 1) throw std::invalid_argument("uniform_signs: degree must be positive");
    SignDistribution d;
    d.degree = m;
    d.signs.assign(standard_triangle(m).lattice_points.size(), sign);
    return d;
}

int extend_signs(const SignDistribution& d, Quadrant q, const LatticePoint& p) {
    if (!in_standard_triangle(p, d.degree))
        throw std::invalid_argument("extend_signs: point outside T_m");
    int s = d.at(p);
    if (quadrant_sign_x(q) < 0 && (p.i & 1)) s = -s;
    if (quadrant_sign_y(q) < 0 && (p.j & 1)) s = -s;
    return s;
}

int extended_sign_at(const SignDistribution& d, int x2, int y2) {
    LatticePoint p{std::abs(x2) / 2, std::abs(y2) / 2};
    int s = d.at(p);
    if (x2 < 0 && (p.i & 1)) s = -s;
    if (y2 < 0 && (p.j & 1)) s = -s;
    return s;
}

}  // namespace tcurve
