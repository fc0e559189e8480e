#include "tcurve/square.hpp"

#include <stdexcept>

namespace tcurve {

SquareComplex build_square(const RegularTriangulation& t, const SignDistribution& d) {
    if (t.triangulation.degree != d.degree)
        throw std::invalid_argument("build_square: triangulation and sign degrees differ");

    SquareComplex sq;
    sq.degree = d.degree;
    sq.base = t.triangulation;
    sq.signs = d;
    sq.triangles.reserve(sq.base.triangles.size() * 4);

    static constexpr Quadrant kQuads[4] = {Quadrant::Id, Quadrant::Sx, Quadrant::Sy, Quadrant::S};
    for (std::size_t b = 0; b < sq.base.triangles.size(); ++b) {
        const Triangle& tr = sq.base.triangles[b];
        for (Quadrant q : kQuads) {
            CopyTriangle ct;
            ct.base_index = static_cast<int>(b);
            ct.q = q;
            for (int k = 0; k < 3; ++k) {
                ct.v[k] = {2 * tr.v[k].i * quadrant_sign_x(q), 2 * tr.v[k].j * quadrant_sign_y(q)};
                ct.sign[k] = static_cast<std::int8_t>(extend_signs(d, q, tr.v[k]));
            }
            if (ct.sign[0] == ct.sign[1] && ct.sign[1] == ct.sign[2]) {
                ct.minority = -1;
            } else if (ct.sign[0] == ct.sign[1]) {
                ct.minority = 2;
            } else if (ct.sign[0] == ct.sign[2]) {
                ct.minority = 1;
            } else {
                ct.minority = 0;
            }
            sq.triangles.push_back(ct);
        }
    }
    return sq;
}

}  // namespace tcurve
