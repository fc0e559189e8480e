#include "tcurve/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace tcurve {

namespace {

GridPoint midpoint(const GridPoint& a, const GridPoint& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// dense grid index for doubled coordinates in [-2m, 2m]
struct VertexInterner {
    int m, stride;
    std::vector<int> slot;
    explicit VertexInterner(int degree)
        : m(degree), stride(4 * degree + 1),
          slot(static_cast<std::size_t>(stride) * stride, -1) {}

    int intern(const GridPoint& p, std::vector<GridPoint>& verts) {
        std::size_t key = static_cast<std::size_t>(p.x + 2 * m) * stride + (p.y + 2 * m);
        if (slot[key] < 0) {
            slot[key] = static_cast<int>(verts.size());
            verts.push_back(p);
        }
        return slot[key];
    }
};

// deterministic component labels via union-find over segments, renumbered by
// smallest member segment index
struct SegmentUnionFind {
    std::vector<int> parent;
    explicit SegmentUnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
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

int label_components(CurveGraph& g, std::size_t n_vertices) {
    std::vector<std::array<int, 2>> incident(n_vertices, {-1, -1});
    SegmentUnionFind uf(g.segments.size());
    for (std::size_t s = 0; s < g.segments.size(); ++s) {
        for (int end : {g.segments[s].a, g.segments[s].b}) {
            if (end < 0) continue;
            auto& in = incident[static_cast<std::size_t>(end)];
            if (in[0] < 0) {
                in[0] = static_cast<int>(s);
            } else if (in[1] < 0) {
                in[1] = static_cast<int>(s);
                uf.unite(in[0], static_cast<int>(s));
            } else {
                throw std::logic_error("curve graph: vertex of degree > 2");
            }
        }
    }
    g.segment_component.assign(g.segments.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < g.segments.size(); ++s) {
        int r = uf.find(static_cast<int>(s));
        if (g.segment_component[static_cast<std::size_t>(r)] < 0)
            g.segment_component[static_cast<std::size_t>(r)] = next++;
        g.segment_component[s] = g.segment_component[static_cast<std::size_t>(r)];
    }
    return next;
}

}  // namespace

CurveGraph midlines(const SquareComplex& sq) {
    CurveGraph g;
    g.mode = CurveMode::Square;
    g.degree = sq.degree;
    VertexInterner interner(sq.degree);
    for (std::size_t t = 0; t < sq.triangles.size(); ++t) {
        const CopyTriangle& ct = sq.triangles[t];
        if (!ct.mixed()) continue;
        const GridPoint& v = ct.v[ct.minority];
        GridPoint ma = midpoint(v, ct.v[(ct.minority + 1) % 3]);
        GridPoint mb = midpoint(v, ct.v[(ct.minority + 2) % 3]);
        g.segments.push_back(
            {interner.intern(ma, g.vertices), interner.intern(mb, g.vertices),
             static_cast<int>(t)});
    }
    return g;
}

CurveGraph glue_projective(const CurveGraph& square) {
    if (square.mode != CurveMode::Square)
        throw std::invalid_argument("glue_projective: expects a square-mode graph");
    CurveGraph g;
    g.mode = CurveMode::Projective;
    g.degree = square.degree;

    VertexInterner interner(square.degree);
    std::vector<int> remap(square.vertices.size());
    for (std::size_t i = 0; i < square.vertices.size(); ++i) {
        GridPoint p = square.vertices[i];
        if (square.on_boundary(p)) {
            GridPoint q = p.antipode();
            if (q < p) p = q;
        }
        remap[i] = interner.intern(p, g.vertices);
    }
    g.segments = square.segments;
    for (auto& s : g.segments) {
        s.a = remap[static_cast<std::size_t>(s.a)];
        s.b = remap[static_cast<std::size_t>(s.b)];
    }

    std::vector<int> degree(g.vertices.size(), 0);
    for (const auto& s : g.segments) {
        ++degree[static_cast<std::size_t>(s.a)];
        ++degree[static_cast<std::size_t>(s.b)];
    }
    for (int d : degree)
        if (d != 2)
            throw std::logic_error("glue_projective: vertex degree != 2 (internal inconsistency)");

    g.n_components = label_components(g, g.vertices.size());
    return g;
}

CurveGraph affine_model(const CurveGraph& square) {
    if (square.mode != CurveMode::Square)
        throw std::invalid_argument("affine_model: expects a square-mode graph");
    CurveGraph g;
    g.mode = CurveMode::Affine;
    g.degree = square.degree;

    std::vector<int> remap(square.vertices.size(), -1);
    for (std::size_t i = 0; i < square.vertices.size(); ++i) {
        if (square.on_boundary(square.vertices[i])) continue;
        remap[i] = static_cast<int>(g.vertices.size());
        g.vertices.push_back(square.vertices[i]);
    }
    g.segments = square.segments;
    for (auto& s : g.segments) {
        s.a = remap[static_cast<std::size_t>(s.a)];
        s.b = remap[static_cast<std::size_t>(s.b)];
        g.open_ends += (s.a < 0) + (s.b < 0);
    }
    g.n_components = label_components(g, g.vertices.size());
    return g;
}

int boundary_points(const CurveGraph& projective) {
    if (projective.mode != CurveMode::Projective)
        throw std::invalid_argument("boundary_points: expects a projective-mode graph");
    int n = 0;
    for (const GridPoint& p : projective.vertices)
        if (projective.on_boundary(p)) ++n;
    return n;
}

}  // namespace tcurve
