#pragma once

#include <cstdint>
#include <vector>

#include "tcurve/lattice.hpp"

namespace tcurve {

// Symmetric copies of T_m: Sx negates x, Sy negates y, S is the antipode.
enum class Quadrant : std::uint8_t { Id = 0, Sx = 1, Sy = 2, S = 3 };

constexpr int quadrant_sign_x(Quadrant q) {
    return (q == Quadrant::Sx || q == Quadrant::S) ? -1 : 1;
}
constexpr int quadrant_sign_y(Quadrant q) {
    return (q == Quadrant::Sy || q == Quadrant::S) ? -1 : 1;
}
// orientation parity: +1 for Id and S, -1 for the two reflections
constexpr int quadrant_parity(Quadrant q) { return quadrant_sign_x(q) * quadrant_sign_y(q); }

const char* quadrant_name(Quadrant q);

// Signs eps_{i,j} on every lattice point of T_m, lexicographic (i, j) order.
struct SignDistribution {
    int degree = 0;
    std::vector<std::int8_t> signs;
    // Convention marker: a region's sign is the sign the polynomial takes there.
    bool region_signs_follow_polynomial = true;

    static std::size_t index_of(int m, int i, int j) {
        // points with first coordinate < i, then offset j
        std::size_t before = static_cast<std::size_t>(i) * (m + 1) -
                             static_cast<std::size_t>(i) * (i - 1) / 2;
        return before + static_cast<std::size_t>(j);
    }

    std::int8_t at(const LatticePoint& p) const { return signs[index_of(degree, p.i, p.j)]; }
    std::int8_t& at(const LatticePoint& p) { return signs[index_of(degree, p.i, p.j)]; }
};

// eps = -1 iff i and j are both even.
SignDistribution harnack_signs(int m);
SignDistribution uniform_signs(int m, std::int8_t sign);

// Modular extension: eps * (-1)^i for Sx, (-1)^j for Sy, (-1)^{i+j} for S.
int extend_signs(const SignDistribution& d, Quadrant q, const LatticePoint& p);

// Extended sign at a point of the symmetrized square given in doubled global
// coordinates (X, Y) = (+-2i, +-2j).
int extended_sign_at(const SignDistribution& d, int x2, int y2);

}  // namespace tcurve
