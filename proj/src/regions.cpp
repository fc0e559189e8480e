#include "tcurve/regions.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tcurve {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::uint64_t pack_point(const GridPoint& p, int m) {
    return (static_cast<std::uint64_t>(p.x + 2 * m) << 16) |
           static_cast<std::uint64_t>(p.y + 2 * m);
}

std::uint64_t pack_edge(const GridPoint& a, const GridPoint& b, int m) {
    const GridPoint& lo = a < b ? a : b;
    const GridPoint& hi = a < b ? b : a;
    return (pack_point(lo, m) << 32) | pack_point(hi, m);
}

}  // namespace

RegionComplex build_regions(const SquareComplex& sq, const CurveGraph& projective) {
    const int m = sq.degree;
    RegionComplex rc;
    rc.degree = m;

    rc.piece_offset.reserve(sq.triangles.size() + 1);
    rc.piece_offset.push_back(0);
    for (const CopyTriangle& ct : sq.triangles) {
        if (ct.mixed()) {
            std::int8_t minority = ct.sign[ct.minority];
            rc.piece_sign.push_back(static_cast<std::int8_t>(-minority));  // major
            rc.piece_sign.push_back(minority);                             // minor
        } else {
            rc.piece_sign.push_back(ct.sign[0]);
        }
        rc.piece_offset.push_back(static_cast<int>(rc.piece_sign.size()));
    }
    const int n_pieces = static_cast<int>(rc.piece_sign.size());

    UnionFind uf(static_cast<std::size_t>(n_pieces));
    UnionFind cover(static_cast<std::size_t>(2 * n_pieces));

    auto on_boundary = [m](const GridPoint& p) { return std::abs(p.x) + std::abs(p.y) == 2 * m; };

    // half-edge incidences: key edge, entries (canonical endpoint, piece, sheet flip)
    struct HalfIncidence {
        std::uint64_t endpoint;
        int piece;
        bool flipped;
    };
    std::unordered_map<std::uint64_t, std::vector<HalfIncidence>> edges;
    edges.reserve(sq.triangles.size() * 3);

    for (std::size_t t = 0; t < sq.triangles.size(); ++t) {
        const CopyTriangle& ct = sq.triangles[t];
        auto piece_at = [&](int corner) {
            return rc.piece_of(static_cast<int>(t), ct.mixed() && corner == ct.minority ? 1 : 0);
        };
        for (int k = 0; k < 3; ++k) {
            const GridPoint& p = ct.v[k];
            const GridPoint& q = ct.v[(k + 1) % 3];
            bool glued = on_boundary(p) && on_boundary(q);
            std::uint64_t key = pack_edge(p, q, m);
            bool flipped = false;
            if (glued) {
                std::uint64_t alt = pack_edge(p.antipode(), q.antipode(), m);
                if (alt < key) {
                    key = alt;
                    flipped = true;
                }
            }
            auto& list = edges[key];
            GridPoint ep = flipped ? p.antipode() : p;
            GridPoint eq = flipped ? q.antipode() : q;
            list.push_back({pack_point(ep, m), piece_at(k), flipped});
            list.push_back({pack_point(eq, m), piece_at((k + 1) % 3), flipped});
        }
    }

    for (const auto& [key, list] : edges) {
        (void)key;
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                if (list[i].endpoint != list[j].endpoint) continue;
                uf.unite(list[i].piece, list[j].piece);
                int cross = list[i].flipped != list[j].flipped ? 1 : 0;
                cover.unite(2 * list[i].piece, 2 * list[j].piece + cross);
                cover.unite(2 * list[i].piece + 1, 2 * list[j].piece + (1 - cross));
            }
        }
    }

    rc.piece_region.assign(static_cast<std::size_t>(n_pieces), -1);
    std::vector<int> region_of_root(static_cast<std::size_t>(n_pieces), -1);
    for (int p = 0; p < n_pieces; ++p) {
        int r = uf.find(p);
        if (region_of_root[static_cast<std::size_t>(r)] < 0)
            region_of_root[static_cast<std::size_t>(r)] = rc.n_regions++;
        rc.piece_region[static_cast<std::size_t>(p)] = region_of_root[static_cast<std::size_t>(r)];
    }

    rc.region_sign.assign(static_cast<std::size_t>(rc.n_regions), 0);
    rc.region_sign_consistent.assign(static_cast<std::size_t>(rc.n_regions), 1);
    rc.region_preimage_connected.assign(static_cast<std::size_t>(rc.n_regions), 0);
    for (int p = 0; p < n_pieces; ++p) {
        int r = rc.piece_region[static_cast<std::size_t>(p)];
        auto& s = rc.region_sign[static_cast<std::size_t>(r)];
        if (s == 0 && rc.region_sign_consistent[static_cast<std::size_t>(r)]) {
            s = rc.piece_sign[static_cast<std::size_t>(p)];
        } else if (s != rc.piece_sign[static_cast<std::size_t>(p)]) {
            s = 0;
            rc.region_sign_consistent[static_cast<std::size_t>(r)] = 0;
        }
        if (cover.find(2 * p) == cover.find(2 * p + 1))
            rc.region_preimage_connected[static_cast<std::size_t>(r)] = 1;
    }
    if (m % 2 == 0) {
        for (int r = 0; r < rc.n_regions; ++r) {
            if (!rc.region_sign_consistent[static_cast<std::size_t>(r)])
                throw std::logic_error("regions: inconsistent region sign at even degree");
        }
    }

    rc.component_regions.assign(static_cast<std::size_t>(projective.n_components), {-1, -1});
    for (std::size_t s = 0; s < projective.segments.size(); ++s) {
        int t = projective.segments[s].copy_triangle;
        int a = rc.region_of(t, 1), b = rc.region_of(t, 0);
        if (a > b) std::swap(a, b);
        auto& pr = rc.component_regions[static_cast<std::size_t>(projective.segment_component[s])];
        if (pr[0] < 0) {
            pr = {a, b};
        } else if (pr[0] != a || pr[1] != b) {
            throw std::logic_error("regions: component borders more than two regions");
        }
    }
    return rc;
}

}  // namespace tcurve
