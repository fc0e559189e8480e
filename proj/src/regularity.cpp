#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "tcurve/lattice.hpp"

namespace tcurve {

namespace {

using Edge = std::pair<LatticePoint, LatticePoint>;

Edge make_edge(const LatticePoint& a, const LatticePoint& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::int64_t area2(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return static_cast<std::int64_t>(b.i - a.i) * (c.j - a.j) -
           static_cast<std::int64_t>(b.j - a.j) * (c.i - a.i);
}

struct InteriorEdge {
    // plane through (p, q, a) extended to b; kink scaled by |[p,q,a]|:
    //   K = w*z_b - [b,q,a]*z_p - [p,b,a]*z_q - [p,q,b]*z_a   (w = |[p,q,a]|)
    LatticePoint p, q, a, b;
    std::int64_t w = 0, cp = 0, cq = 0, ca = 0;
};

std::vector<InteriorEdge> interior_edges(const Triangulation& t) {
    std::map<Edge, std::vector<LatticePoint>> shared;
    for (const Triangle& tr : t.triangles)
        for (int k = 0; k < 3; ++k)
            shared[make_edge(tr.v[k], tr.v[(k + 1) % 3])].push_back(tr.v[(k + 2) % 3]);

    std::vector<InteriorEdge> out;
    for (const auto& [e, opp] : shared) {
        if (opp.size() != 2) continue;
        InteriorEdge ie;
        ie.p = e.first;
        ie.q = e.second;
        ie.a = opp[0];
        ie.b = opp[1];
        std::int64_t d = area2(ie.p, ie.q, ie.a);
        std::int64_t s = d > 0 ? 1 : -1;
        ie.w = s * d;
        ie.cp = s * area2(ie.b, ie.q, ie.a);
        ie.cq = s * area2(ie.p, ie.b, ie.a);
        ie.ca = s * area2(ie.p, ie.q, ie.b);
        out.push_back(ie);
    }
    return out;
}

Rat kink_value(const InteriorEdge& e, const Lift& lift) {
    return Rat(e.w) * lift.at(e.b) - Rat(e.cp) * lift.at(e.p) - Rat(e.cq) * lift.at(e.q) -
           Rat(e.ca) * lift.at(e.a);
}

// max c.x subject to A x <= b, x >= 0, with all b >= 0 (origin feasible).
// Dense exact-rational tableau with Bland's rule.
struct SimplexResult {
    Rat optimum;
    std::vector<Rat> x;
};

SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                          const std::vector<Rat>& c) {
    const std::size_t m = A.size(), n = c.size();
    std::vector<std::vector<Rat>> tab(m + 1, std::vector<Rat>(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
        tab[i][n + i] = Rat(1);
        tab[i][n + m] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) tab[m][j] = c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (tab[m][j].sign() > 0) {
                enter = j;
                break;  // Bland: smallest improving index
            }
        }
        if (enter == n + m) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter].sign() <= 0) continue;
            Rat ratio = tab[i][n + m] / tab[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) throw std::logic_error("simplex: unbounded objective");

        Rat piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || tab[i][enter].is_zero()) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    SimplexResult r;
    r.optimum = -tab[m][n + m];
    r.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) r.x[basis[i]] = tab[i][n + m];
    return r;
}

}  // namespace

ConvexifyReport convexify_report(const Triangulation& t, const Lift& lift) {
    ConvexifyReport rep;
    rep.integral = true;
    for (const Triangle& tr : t.triangles)
        for (const LatticePoint& p : tr.v)
            if (!lift.at(p).is_integer()) rep.integral = false;

    rep.convexifying = true;
    for (const InteriorEdge& e : interior_edges(t)) {
        if (kink_value(e, lift).sign() <= 0) {
            rep.convexifying = false;
            break;
        }
    }
    return rep;
}

bool is_convexifying(const Triangulation& t, const Lift& lift) {
    return convexify_report(t, lift).convexifying;
}

std::optional<Lift> find_convexifier(const Triangulation& t) {
    std::vector<LatticePoint> verts;
    for (const Triangle& tr : t.triangles)
        for (const LatticePoint& p : tr.v) verts.push_back(p);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::map<LatticePoint, std::size_t> index;
    for (std::size_t k = 0; k < verts.size(); ++k) index[verts[k]] = k;
    const std::size_t nv = verts.size();

    // variables: nu_0..nu_{nv-1}, then delta; kink rows plus the delta <= 1 cap.
    // The system is positively homogeneous in nu, so a regular input reaches
    // delta = 1 exactly and a non-regular one stays at 0.
    auto edges = interior_edges(t);
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (const InteriorEdge& e : edges) {
        std::vector<Rat> row(nv + 1, Rat(0));
        row[index[e.b]] -= Rat(e.w);
        row[index[e.p]] += Rat(e.cp);
        row[index[e.q]] += Rat(e.cq);
        row[index[e.a]] += Rat(e.ca);
        row[nv] = Rat(e.w);
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    {
        std::vector<Rat> cap(nv + 1, Rat(0));
        cap[nv] = Rat(1);
        A.push_back(std::move(cap));
        b.push_back(Rat(1));
    }
    std::vector<Rat> c(nv + 1, Rat(0));
    c[nv] = Rat(1);

    SimplexResult sol = simplex_max(A, b, c);
    if (sol.optimum.sign() <= 0) return std::nullopt;

    // clear denominators, reduce, and shift the minimum to 0
    BigInt lcm(1);
    for (std::size_t k = 0; k < nv; ++k) {
        const BigInt& d = sol.x[k].den();
        lcm = BigInt::divmod(lcm * d, BigInt::gcd(lcm, d)).first;
    }
    std::vector<BigInt> vals(nv);
    BigInt g(0);
    for (std::size_t k = 0; k < nv; ++k) {
        vals[k] = sol.x[k].num() * BigInt::divmod(lcm, sol.x[k].den()).first;
        g = BigInt::gcd(g, vals[k]);
    }
    if (g > BigInt(1))
        for (auto& v : vals) v = BigInt::divmod(v, g).first;
    BigInt lo = vals[0];
    for (const auto& v : vals)
        if (v < lo) lo = v;

    Lift lift;
    for (std::size_t k = 0; k < nv; ++k) lift.values[verts[k]] = Rat(vals[k] - lo, BigInt(1));
    return lift;
}

}  // namespace tcurve
