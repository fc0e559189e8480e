#include "tcurve/euler.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tcurve {

namespace {

std::uint64_t pack_point(const GridPoint& p, int m) {
    return (static_cast<std::uint64_t>(p.x + 2 * m) << 16) |
           static_cast<std::uint64_t>(p.y + 2 * m);
}

}  // namespace

EulerReport euler_from_scheme(const RealScheme& scheme) {
    EulerReport rep;
    rep.chi_plus = scheme.count_even() - scheme.count_odd();
    rep.chi_minus = 1 - rep.chi_plus;
    return rep;
}

EulerReport euler_rp2(const SquareComplex& sq, const CurveGraph& projective,
                      const RegionComplex& regions, const RealScheme& scheme) {
    const int m = sq.degree;
    if (m % 2 != 0) throw std::invalid_argument("euler_rp2: even degree required");

    // find the root region (depth 0 in the double cover sense) and normalize
    int root = -1;
    for (int r = 0; r < regions.n_regions; ++r)
        if (regions.region_preimage_connected[static_cast<std::size_t>(r)]) root = r;
    if (root < 0 && regions.n_regions == 1) root = 0;
    if (root < 0) throw std::logic_error("euler_rp2: no root region");

    EulerReport rep;
    rep.flipped = regions.region_sign[static_cast<std::size_t>(root)] > 0;
    const int flip = rep.flipped ? -1 : 1;

    auto positive_piece = [&](int piece) {
        return flip * regions.piece_sign[static_cast<std::size_t>(piece)] > 0;
    };
    auto on_boundary = [m](const GridPoint& p) { return std::abs(p.x) + std::abs(p.y) == 2 * m; };
    auto canonical = [&](GridPoint p) {
        if (on_boundary(p)) {
            GridPoint q = p.antipode();
            if (q < p) p = q;
        }
        return pack_point(p, m);
    };

    // cellulation: every triangulation edge split at its midpoint, one 2-cell
    // per region piece, plus the curve segments and midpoint vertices
    long long faces = 0;
    for (int p = 0; p < static_cast<int>(regions.piece_sign.size()); ++p)
        faces += positive_piece(p);

    std::unordered_map<std::uint64_t, bool> vertex_in;  // canonical point -> touches positive
    std::unordered_map<std::uint64_t, bool> half_in;    // canonical half edge -> touches positive
    auto mark = [](std::unordered_map<std::uint64_t, bool>& map, std::uint64_t key, bool pos) {
        auto [it, inserted] = map.try_emplace(key, pos);
        if (!inserted) it->second = it->second || pos;
    };

    long long curve_edges = 0;
    for (std::size_t t = 0; t < sq.triangles.size(); ++t) {
        const CopyTriangle& ct = sq.triangles[t];
        auto piece_at = [&](int corner) {
            return regions.piece_of(static_cast<int>(t),
                                    ct.mixed() && corner == ct.minority ? 1 : 0);
        };
        if (ct.mixed()) ++curve_edges;
        for (int k = 0; k < 3; ++k) {
            const GridPoint& p = ct.v[k];
            const GridPoint& q = ct.v[(k + 1) % 3];
            GridPoint mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
            bool pos_p = positive_piece(piece_at(k));
            bool pos_q = positive_piece(piece_at((k + 1) % 3));
            mark(vertex_in, canonical(p), pos_p);
            mark(vertex_in, canonical(mid), pos_p || pos_q);
            // halves keyed by (midpoint, endpoint)
            mark(half_in, canonical(mid) << 32 | canonical(p), pos_p);
            mark(half_in, canonical(mid) << 32 | canonical(q), pos_q);
        }
    }

    long long verts = 0, edges = curve_edges;
    for (const auto& [k, pos] : vertex_in) {
        (void)k;
        verts += pos;
    }
    for (const auto& [k, pos] : half_in) {
        (void)k;
        edges += pos;
    }

    rep.chi_plus = verts - edges + faces;
    rep.chi_minus = 1 - rep.chi_plus;

    EulerReport by_scheme = euler_from_scheme(scheme);
    if (by_scheme.chi_plus != rep.chi_plus)
        throw std::logic_error("euler_rp2: cellulation and oval-count routes disagree");
    (void)projective;
    return rep;
}

ArnoldReport arnold_euler(const EulerReport& rp2, int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("arnold_euler: positive even degree required");
    ArnoldReport rep;
    rep.genus = static_cast<long long>(m - 1) * (m - 2) / 2;
    rep.chi_a_plus = (1 - rep.genus) + rp2.chi_plus;
    rep.chi_a_minus = (1 - rep.genus) + rp2.chi_minus;
    rep.crosscaps_minus = 2 - rep.chi_a_minus;
    rep.k1_disc_convention = (m == 2);
    return rep;
}

ArnoldReport arnold_euler(const RealScheme& scheme, int m) {
    return arnold_euler(euler_from_scheme(scheme), m);
}

}  // namespace tcurve
