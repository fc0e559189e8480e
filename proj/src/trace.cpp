#include "tcurve/trace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "tcurve/census.hpp"
#include "tcurve/scheme.hpp"

namespace tcurve {

namespace {

// exact dyadic value mant * 2^exp
struct Dyd {
    BigInt mant;
    std::int64_t exp = 0;
    bool is_zero() const { return mant.is_zero(); }
};

// polynomial with dyadic coefficients, prepared for grid evaluation
struct DydPoly {
    struct Term {
        int i, j;
        int sign;
        std::int64_t coeff_exp;  // -s * scaled_lift
    };
    std::vector<Term> terms;
};

DydPoly prepare(const PatchPolynomial& p) {
    DydPoly dp;
    for (const auto& t : p.terms)
        dp.terms.push_back({t.p.i, t.p.j, t.sign,
                            -static_cast<std::int64_t>(p.s) * t.scaled_lift});
    return dp;
}

int sign_eval(const DydPoly& poly, const Dyd& x, const Dyd& y) {
    std::vector<std::pair<BigInt, std::int64_t>> parts;
    parts.reserve(poly.terms.size());
    std::int64_t emin = 0;
    bool first = true;
    for (const auto& t : poly.terms) {
        if ((x.is_zero() && t.i > 0) || (y.is_zero() && t.j > 0)) continue;
        BigInt mant(t.sign);
        if (t.i > 0) mant *= BigInt::pow(x.mant, static_cast<std::uint64_t>(t.i));
        if (t.j > 0) mant *= BigInt::pow(y.mant, static_cast<std::uint64_t>(t.j));
        std::int64_t e = t.coeff_exp + t.i * x.exp + t.j * y.exp;
        parts.emplace_back(std::move(mant), e);
        emin = first ? e : std::min(emin, e);
        first = false;
    }
    BigInt acc;
    for (auto& [mant, e] : parts)
        acc += mant.shl(static_cast<std::uint64_t>(e - emin));
    return acc.sign();
}

// exact sign with deterministic nudging off exact zeros of the polynomial
int sign_sampled(const DydPoly& poly, Dyd x, Dyd y, std::int64_t tiny_exp) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        int s = sign_eval(poly, x, y);
        if (s != 0) return s;
        if (x.is_zero()) {
            x = Dyd{BigInt(1), tiny_exp - 8 * (attempt + 1)};
        } else if (y.is_zero()) {
            y = Dyd{BigInt(1), tiny_exp - 8 * (attempt + 1)};
        } else if (attempt % 2 == 0) {
            x = Dyd{x.mant * BigInt((1 << 20) + 1 + attempt), x.exp - 20};
        } else {
            y = Dyd{y.mant * BigInt((1 << 20) + 1 + attempt), y.exp - 20};
        }
    }
    throw ResolutionExceeded("trace: could not nudge a sample off the curve");
}

// loop nesting by exact even-odd ray casts; returns the canonical forest code
std::string nesting_code(const std::vector<std::vector<std::array<std::int64_t, 4>>>& loops,
                         const std::vector<std::array<std::int64_t, 2>>& rep) {
    const std::size_t n = loops.size();
    std::vector<std::vector<bool>> inside(n, std::vector<bool>(n, false));
    std::vector<int> depth(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            std::int64_t x0 = rep[a][0], y0 = rep[a][1];
            long crossings = 0;
            for (const auto& seg : loops[b]) {
                std::int64_t py = seg[1], qy = seg[3];
                if ((py > y0) == (qy > y0)) continue;
                std::int64_t dy = qy - py;
                std::int64_t lhs = (seg[0] - x0) * dy + (y0 - py) * (seg[2] - seg[0]);
                if ((dy > 0 && lhs > 0) || (dy < 0 && lhs < 0)) ++crossings;
            }
            if (crossings % 2 == 1) {
                inside[a][b] = true;
                ++depth[a];
            }
        }
    }
    RealScheme forest;
    forest.degree = 0;
    forest.ovals.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        forest.ovals[a].depth = depth[a];
        int parent = -1;
        for (std::size_t b = 0; b < n; ++b)
            if (inside[a][b] && depth[b] == depth[a] - 1) parent = static_cast<int>(b);
        forest.ovals[a].parent = parent;
        if (parent < 0)
            forest.roots.push_back(static_cast<int>(a));
        else
            forest.ovals[static_cast<std::size_t>(parent)].children.push_back(
                static_cast<int>(a));
    }
    return viro_code(forest);
}

}  // namespace

std::pair<Rat, Rat> dual_window(const Triangulation& t, const Lift& lift, const Rat& margin) {
    Rat lo(0), hi(0);
    bool first = true;
    for (const Triangle& tr : t.triangles) {
        // dual vertex u of the lifted triangle: u . (P2-P1) = nu2-nu1, etc.
        std::int64_t ax = tr.v[1].i - tr.v[0].i, ay = tr.v[1].j - tr.v[0].j;
        std::int64_t bx = tr.v[2].i - tr.v[0].i, by = tr.v[2].j - tr.v[0].j;
        Rat da = lift.at(tr.v[1]) - lift.at(tr.v[0]);
        Rat db = lift.at(tr.v[2]) - lift.at(tr.v[0]);
        Rat det(ax * by - ay * bx);
        Rat ux = (da * Rat(by) - db * Rat(ay)) / det;
        Rat uy = (db * Rat(ax) - da * Rat(bx)) / det;
        for (const Rat& u : {ux, uy}) {
            if (first || u < lo) lo = u;
            if (first || u > hi) hi = u;
            first = false;
        }
    }
    return {lo - margin, hi + margin};
}

std::string AffineSummary::to_string() const {
    return "{components: " + std::to_string(affine_components) +
           ", bounded: " + std::to_string(bounded_components) +
           ", open ends: " + std::to_string(unbounded_branch_ends) +
           ", nesting: " + bounded_nesting + "}";
}

AffineSummary affine_summary(const CurveGraph& affine) {
    if (affine.mode != CurveMode::Affine)
        throw std::invalid_argument("affine_summary: expects an affine-mode graph");
    AffineSummary sum;
    sum.affine_components = affine.n_components;
    sum.unbounded_branch_ends = affine.open_ends;

    std::vector<int> ends_of(static_cast<std::size_t>(affine.n_components), 0);
    for (std::size_t s = 0; s < affine.segments.size(); ++s)
        ends_of[static_cast<std::size_t>(affine.segment_component[s])] +=
            (affine.segments[s].a < 0) + (affine.segments[s].b < 0);

    std::vector<int> loop_of_component(static_cast<std::size_t>(affine.n_components), -1);
    std::vector<std::vector<std::array<std::int64_t, 4>>> loops;
    std::vector<std::array<std::int64_t, 2>> rep;
    for (int c = 0; c < affine.n_components; ++c) {
        if (ends_of[static_cast<std::size_t>(c)] != 0) continue;
        loop_of_component[static_cast<std::size_t>(c)] = static_cast<int>(loops.size());
        loops.emplace_back();
        rep.push_back({INT64_MAX, INT64_MAX});
    }
    sum.bounded_components = static_cast<int>(loops.size());

    for (std::size_t s = 0; s < affine.segments.size(); ++s) {
        int L = loop_of_component[static_cast<std::size_t>(affine.segment_component[s])];
        if (L < 0) continue;
        const GridPoint& a = affine.vertices[static_cast<std::size_t>(affine.segments[s].a)];
        const GridPoint& b = affine.vertices[static_cast<std::size_t>(affine.segments[s].b)];
        loops[static_cast<std::size_t>(L)].push_back({a.x, a.y, b.x, b.y});
        // representative: lexicographically smallest vertex of the loop
        for (const GridPoint& p : {a, b}) {
            std::array<std::int64_t, 2> q{p.x, p.y};
            if (q < rep[static_cast<std::size_t>(L)]) rep[static_cast<std::size_t>(L)] = q;
        }
    }
    sum.bounded_nesting = nesting_code(loops, rep);
    return sum;
}

namespace {

struct Side {
    std::int64_t ix, iy;  // scaled midpoint, the side's stable identity
};

struct TraceState {
    const DydPoly* poly;
    int max_depth;
    std::int64_t tiny_exp;
    std::unordered_map<std::uint64_t, int> registry;
    std::vector<std::array<std::int64_t, 2>> node_pos;
    std::vector<std::pair<int, int>> segments;
    std::vector<int> segment_quadrant;

    int node_for(const Side& s) {
        std::uint64_t key = (static_cast<std::uint64_t>(s.ix) << 24) |
                            static_cast<std::uint64_t>(s.iy);
        auto [it, inserted] = registry.try_emplace(key, static_cast<int>(node_pos.size()));
        if (inserted) node_pos.push_back({s.ix, s.iy});
        return it->second;
    }
};

struct Cell {
    Dyd x0, x1, y0, y1;
    std::int64_t ix0, ix1, iy0, iy1;
    int s00, s10, s01, s11;
    Side bottom, top, left, right;
    int depth;
    int quadrant;
};

Dyd dyd_mid(const Dyd& a, const Dyd& b) {
    if (a.is_zero()) return Dyd{b.mant, b.exp - 1};
    if (b.is_zero()) return Dyd{a.mant, a.exp - 1};
    std::int64_t e = std::min(a.exp, b.exp);
    BigInt sum = a.mant.shl(static_cast<std::uint64_t>(a.exp - e)) +
                 b.mant.shl(static_cast<std::uint64_t>(b.exp - e));
    return Dyd{std::move(sum), e - 1};
}

void process_cell(TraceState& st, const Cell& c) {
    int mixed = (c.s00 != c.s10) + (c.s01 != c.s11) + (c.s00 != c.s01) + (c.s10 != c.s11);
    if (mixed == 0) return;
    if (mixed == 2) {
        int nodes[2];
        int n = 0;
        if (c.s00 != c.s10) nodes[n++] = st.node_for(c.bottom);
        if (c.s01 != c.s11) nodes[n++] = st.node_for(c.top);
        if (c.s00 != c.s01 && n < 2) nodes[n++] = st.node_for(c.left);
        if (c.s10 != c.s11 && n < 2) nodes[n++] = st.node_for(c.right);
        st.segments.emplace_back(nodes[0], nodes[1]);
        st.segment_quadrant.push_back(c.quadrant);
        return;
    }
    // saddle: refine
    if (c.depth >= st.max_depth)
        throw ResolutionExceeded("trace: saddle persists at maximal refinement depth");

    Dyd xm = dyd_mid(c.x0, c.x1), ym = dyd_mid(c.y0, c.y1);
    std::int64_t ixm = (c.ix0 + c.ix1) / 2, iym = (c.iy0 + c.iy1) / 2;
    int sb = sign_sampled(*st.poly, xm, c.y0, st.tiny_exp);
    int stp = sign_sampled(*st.poly, xm, c.y1, st.tiny_exp);
    int sl = sign_sampled(*st.poly, c.x0, ym, st.tiny_exp);
    int sr = sign_sampled(*st.poly, c.x1, ym, st.tiny_exp);
    int sc = sign_sampled(*st.poly, xm, ym, st.tiny_exp);
    // a midpoint may not contradict a side the neighbors saw as uniform
    if ((c.s00 == c.s10 && sb != c.s00) || (c.s01 == c.s11 && stp != c.s01) ||
        (c.s00 == c.s01 && sl != c.s00) || (c.s10 == c.s11 && sr != c.s10))
        throw ResolutionExceeded("trace: sample contradicts a shared grid edge");

    Side vlow{ixm, (c.iy0 + iym) / 2}, vhigh{ixm, (iym + c.iy1) / 2};
    Side hleft{(c.ix0 + ixm) / 2, iym}, hright{(ixm + c.ix1) / 2, iym};

    process_cell(st, Cell{c.x0, xm, c.y0, ym, c.ix0, ixm, c.iy0, iym, c.s00, sb, sl, sc,
                          c.bottom, hleft, c.left, vlow, c.depth + 1, c.quadrant});
    process_cell(st, Cell{xm, c.x1, c.y0, ym, ixm, c.ix1, c.iy0, iym, sb, c.s10, sc, sr,
                          c.bottom, hright, vlow, c.right, c.depth + 1, c.quadrant});
    process_cell(st, Cell{c.x0, xm, ym, c.y1, c.ix0, ixm, iym, c.iy1, sl, sc, c.s01, stp,
                          hleft, c.top, c.left, vhigh, c.depth + 1, c.quadrant});
    process_cell(st, Cell{xm, c.x1, ym, c.y1, ixm, c.ix1, iym, c.iy1, sc, sr, stp, c.s11,
                          hright, c.top, vhigh, c.right, c.depth + 1, c.quadrant});
}

}  // namespace

TraceResult trace_affine(const PatchPolynomial& p, const TraceOptions& opt) {
    if (opt.grid_base < 16) throw std::invalid_argument("trace_affine: grid base below 16");
    const int B = opt.grid_base;
    const int m = p.degree;
    DydPoly poly = prepare(p);

    // log-scale sample magnitudes rho(u) ~ t^{-u} = 2^{s*r*u}, u uniform over
    // [-margin, m+margin]; plus the axis itself, so the quadrants stitch
    const Rat sr(static_cast<std::int64_t>(p.s) * p.r);
    std::int64_t max_lift = 0;
    for (const auto& t : p.terms)
        max_lift = std::max(max_lift, static_cast<std::int64_t>(t.scaled_lift));
    const std::int64_t tiny_exp =
        -(static_cast<std::int64_t>(p.s) * max_lift + 64 * (m + 2));

    // the window must contain every bounded cell of the dual subdivision; the
    // default lift has dual vertices within [1, 2m-1]^2
    Rat u_lo = opt.window_set ? opt.window_lo : Rat(-1) * opt.margin;
    Rat u_hi = opt.window_set ? opt.window_hi : Rat(2 * m - 1) + opt.margin;
    std::vector<Dyd> rho(static_cast<std::size_t>(B) + 1);
    for (int i = 0; i <= B; ++i) {
        Rat u = u_lo + Rat(i) * (u_hi - u_lo) / Rat(B);
        Rat e = sr * u;
        BigInt fl = e.floor();
        double frac = (e - Rat(fl, BigInt(1))).to_double();
        long long mant = std::llround(std::exp2(52.0 + frac));
        std::int64_t exp = fl.to_int64() - 52;
        if (mant >= (1LL << 53)) {
            mant >>= 1;
            exp += 1;
        }
        rho[static_cast<std::size_t>(i)] = Dyd{BigInt(mant), exp};
    }

    const int n_coords = 2 * B + 3;  // -rho(u_B) .. -rho(u_0), 0, rho(u_0) .. rho(u_B)
    std::vector<Dyd> coord(static_cast<std::size_t>(n_coords));
    for (int c = 0; c < n_coords; ++c) {
        if (c < B + 1) {
            coord[static_cast<std::size_t>(c)] = rho[static_cast<std::size_t>(B - c)];
            coord[static_cast<std::size_t>(c)].mant = -coord[static_cast<std::size_t>(c)].mant;
        } else if (c == B + 1) {
            coord[static_cast<std::size_t>(c)] = Dyd{BigInt(0), 0};
        } else {
            coord[static_cast<std::size_t>(c)] = rho[static_cast<std::size_t>(c - B - 2)];
        }
    }

    // sample signs; pure evaluations, parallel over rows, deterministic merge
    std::vector<std::int8_t> grid(static_cast<std::size_t>(n_coords) * n_coords);
    auto fill_rows = [&](int from, int to) {
        for (int cx = from; cx < to; ++cx)
            for (int cy = 0; cy < n_coords; ++cy)
                grid[static_cast<std::size_t>(cx) * n_coords + cy] = static_cast<std::int8_t>(
                    sign_sampled(poly, coord[static_cast<std::size_t>(cx)],
                                 coord[static_cast<std::size_t>(cy)], tiny_exp));
    };
    int workers = opt.threads > 0 ? opt.threads : census_threads_from_env();
    workers = std::max(1, std::min(workers, n_coords));
    if (workers == 1) {
        fill_rows(0, n_coords);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n_coords + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(fill_rows, w * chunk, std::min(n_coords, (w + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    TraceState st;
    st.poly = &poly;
    st.max_depth = opt.refine_depth;
    st.tiny_exp = tiny_exp;

    const std::int64_t S = std::int64_t(1) << (opt.refine_depth + 1);
    auto sg = [&](int cx, int cy) {
        return static_cast<int>(grid[static_cast<std::size_t>(cx) * n_coords + cy]);
    };
    for (int cx = 0; cx + 1 < n_coords; ++cx) {
        for (int cy = 0; cy + 1 < n_coords; ++cy) {
            int s00 = sg(cx, cy), s10 = sg(cx + 1, cy), s01 = sg(cx, cy + 1),
                s11 = sg(cx + 1, cy + 1);
            if (s00 == s10 && s10 == s01 && s01 == s11) continue;
            int quadrant = (cx >= B + 1 ? 0 : 1) + (cy >= B + 1 ? 0 : 2);
            Cell cell{coord[static_cast<std::size_t>(cx)], coord[static_cast<std::size_t>(cx) + 1],
                      coord[static_cast<std::size_t>(cy)], coord[static_cast<std::size_t>(cy) + 1],
                      cx * S, (cx + 1) * S, cy * S, (cy + 1) * S,
                      s00, s10, s01, s11,
                      Side{cx * S + S / 2, cy * S},        // bottom
                      Side{cx * S + S / 2, (cy + 1) * S},  // top
                      Side{cx * S, cy * S + S / 2},        // left
                      Side{(cx + 1) * S, cy * S + S / 2},  // right
                      0, quadrant};
            process_cell(st, cell);
        }
    }

    // assemble the curve graph from nodes and segments
    const std::size_t n_nodes = st.node_pos.size();
    std::vector<int> degree(n_nodes, 0);
    std::vector<int> parent(n_nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    for (const auto& [a, b] : st.segments) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    for (std::size_t v = 0; v < n_nodes; ++v)
        if (degree[v] > 2) throw ResolutionExceeded("trace: node of degree > 2");

    std::unordered_map<int, int> comp_of_root;
    int n_comp = 0;
    for (std::size_t v = 0; v < n_nodes; ++v) {
        int r = find(static_cast<int>(v));
        if (comp_of_root.emplace(r, n_comp).second) ++n_comp;
    }
    std::vector<int> open_ends_of(static_cast<std::size_t>(n_comp), 0);
    for (std::size_t v = 0; v < n_nodes; ++v)
        if (degree[v] == 1)
            ++open_ends_of[static_cast<std::size_t>(comp_of_root[find(static_cast<int>(v))])];

    TraceResult res;
    res.summary.affine_components = n_comp;
    for (int e : open_ends_of) res.summary.unbounded_branch_ends += e;

    std::vector<int> loop_of_comp(static_cast<std::size_t>(n_comp), -1);
    std::vector<std::vector<std::array<std::int64_t, 4>>> loops;
    std::vector<std::array<std::int64_t, 2>> rep;
    for (int c = 0; c < n_comp; ++c) {
        if (open_ends_of[static_cast<std::size_t>(c)] != 0) continue;
        loop_of_comp[static_cast<std::size_t>(c)] = static_cast<int>(loops.size());
        loops.emplace_back();
        rep.push_back({INT64_MAX, INT64_MAX});
    }
    res.summary.bounded_components = static_cast<int>(loops.size());
    for (std::size_t s = 0; s < st.segments.size(); ++s) {
        auto [a, b] = st.segments[s];
        int L = loop_of_comp[static_cast<std::size_t>(comp_of_root[find(a)])];
        res.quadrant_segments[static_cast<std::size_t>(st.segment_quadrant[s])] += 1;
        if (L < 0) continue;
        const auto& pa = st.node_pos[static_cast<std::size_t>(a)];
        const auto& pb = st.node_pos[static_cast<std::size_t>(b)];
        loops[static_cast<std::size_t>(L)].push_back({pa[0], pa[1], pb[0], pb[1]});
        for (const auto& p : {pa, pb})
            if (p < rep[static_cast<std::size_t>(L)]) rep[static_cast<std::size_t>(L)] = p;
    }
    res.summary.bounded_nesting = nesting_code(loops, rep);
    return res;
}

VerifyReport verify_patchwork(const SignDistribution& d, const Lift& lift,
                              const AffineSummary& combinatorial, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.combinatorial = combinatorial;
    rep.grid = opt.trace.grid_base;

    bool have_prev = false, last_resolution_failure = false;
    AffineSummary prev;
    for (int s = opt.s_start; s <= opt.s_max; ++s) {
        TraceResult tr;
        try {
            tr = trace_affine(patch_polynomial(d, lift, s), opt.trace);
        } catch (const ResolutionExceeded&) {
            have_prev = false;
            last_resolution_failure = true;
            continue;
        }
        last_resolution_failure = false;
        rep.traced = tr.summary;
        rep.quadrant_segments = tr.quadrant_segments;
        if (have_prev && prev == tr.summary && tr.summary == combinatorial) {
            rep.match = true;
            rep.stabilized_s = s - 1;
            return rep;
        }
        prev = tr.summary;
        have_prev = true;
    }
    if (last_resolution_failure)
        rep.failure = "resolution exceeded";
    else if (have_prev && !(prev == combinatorial))
        rep.failure = "mismatch";
    else
        rep.failure = "no stabilization";
    return rep;
}

}  // namespace tcurve
