#include "tcurve/curve_type.hpp"

#include <stdexcept>

namespace tcurve {

bool segment_reference_ab(const SquareComplex& sq, const CurveGraph::Segment& segment) {
    const CopyTriangle& ct = sq.triangles[static_cast<std::size_t>(segment.copy_triangle)];
    const GridPoint& v = ct.v[ct.minority];
    GridPoint ma{(v.x + ct.v[(ct.minority + 1) % 3].x) / 2,
                 (v.y + ct.v[(ct.minority + 1) % 3].y) / 2};
    GridPoint mb{(v.x + ct.v[(ct.minority + 2) % 3].x) / 2,
                 (v.y + ct.v[(ct.minority + 2) % 3].y) / 2};
    std::int64_t dx = mb.x - ma.x, dy = mb.y - ma.y;
    std::int64_t side_v = dx * (v.y - ma.y) - dy * (v.x - ma.x);
    // plus side is toward the minority vertex iff the minority sign is +
    bool plus_left_ab = (side_v > 0) == (ct.sign[ct.minority] > 0);

    // quadrant coupling from the exponent parities of the trinomial
    const Triangle& base = sq.base.triangles[static_cast<std::size_t>(ct.base_index)];
    int sx = (base.v[0].i + base.v[1].i + base.v[2].i) & 1;
    int sy = (base.v[0].j + base.v[1].j + base.v[2].j) & 1;
    bool twist = (quadrant_sign_x(ct.q) < 0 && (1 + sx) % 2 == 1) !=
                 (quadrant_sign_y(ct.q) < 0 && (1 + sy) % 2 == 1);
    return plus_left_ab != twist;
}

TypeVerdict curve_type(const SquareComplex& sq, const CurveGraph& projective) {
    if (projective.mode != CurveMode::Projective)
        throw std::invalid_argument("curve_type: expects a projective-mode graph");
    for (const Triangle& tr : sq.base.triangles)
        if (!tr.elementary())
            throw std::invalid_argument("curve_type: non-elementary triangle");

    TypeVerdict verdict;
    if (projective.segments.empty()) return verdict;

    // reference orientation per segment: true = the (a -> b) direction
    std::vector<std::uint8_t> ref_ab(projective.segments.size(), 0);
    for (std::size_t s = 0; s < projective.segments.size(); ++s)
        ref_ab[s] = segment_reference_ab(sq, projective.segments[s]);

    // one parity equation per glued vertex: flip(t1) xor flip(t2) = c
    struct Constraint {
        int other;
        std::uint8_t c;
    };
    const std::size_t n_base = sq.base.triangles.size();
    std::vector<std::vector<Constraint>> graph(n_base);

    std::vector<std::array<int, 2>> at_vertex(projective.vertices.size(), {-1, -1});
    std::vector<std::array<std::uint8_t, 2>> into_vertex(projective.vertices.size());
    for (std::size_t s = 0; s < projective.segments.size(); ++s) {
        for (int end = 0; end < 2; ++end) {
            int v = end == 0 ? projective.segments[s].a : projective.segments[s].b;
            // reference direction a -> b points into endpoint b
            std::uint8_t into = (end == 1) == static_cast<bool>(ref_ab[s]);
            auto& slots = at_vertex[static_cast<std::size_t>(v)];
            int slot = slots[0] < 0 ? 0 : 1;
            slots[static_cast<std::size_t>(slot)] = static_cast<int>(s);
            into_vertex[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)] = into;
        }
    }
    for (std::size_t v = 0; v < projective.vertices.size(); ++v) {
        int s1 = at_vertex[v][0], s2 = at_vertex[v][1];
        int t1 = sq.triangles[static_cast<std::size_t>(projective.segments
                 [static_cast<std::size_t>(s1)].copy_triangle)].base_index;
        int t2 = sq.triangles[static_cast<std::size_t>(projective.segments
                 [static_cast<std::size_t>(s2)].copy_triangle)].base_index;
        // coherent passage needs exactly one of the two ends directed inward
        std::uint8_t c = into_vertex[v][0] == into_vertex[v][1] ? 1 : 0;
        graph[static_cast<std::size_t>(t1)].push_back({t2, c});
        graph[static_cast<std::size_t>(t2)].push_back({t1, c});
    }

    // 2-coloring
    std::vector<std::int8_t> color(n_base, -1);
    std::vector<int> stack;
    for (std::size_t start = 0; start < n_base; ++start) {
        if (color[start] >= 0 || graph[start].empty()) continue;
        color[start] = 0;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (const Constraint& e : graph[static_cast<std::size_t>(t)]) {
                std::int8_t want =
                    static_cast<std::int8_t>(color[static_cast<std::size_t>(t)] ^ e.c);
                if (color[static_cast<std::size_t>(e.other)] < 0) {
                    color[static_cast<std::size_t>(e.other)] = want;
                    stack.push_back(e.other);
                } else if (color[static_cast<std::size_t>(e.other)] != want) {
                    verdict.kind = CurveTypeKind::TypeII;
                    return verdict;
                }
            }
        }
    }

    verdict.kind = CurveTypeKind::TypeI;
    verdict.flips.assign(n_base, 0);
    for (std::size_t t = 0; t < n_base; ++t)
        if (color[t] > 0) verdict.flips[t] = 1;
    return verdict;
}

}  // namespace tcurve
