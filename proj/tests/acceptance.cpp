// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tcurve/census.hpp"
#include "tcurve/closed_forms.hpp"
#include "tcurve/euler.hpp"
#include "tcurve/json_io.hpp"
#include "tcurve/pipeline.hpp"
#include "tcurve/trace.hpp"

using namespace tcurve;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SignDistribution random_signs(int m, std::mt19937& rng) {
    SignDistribution d = uniform_signs(m, 1);
    for (auto& s : d.signs) s = (rng() & 1) ? 1 : -1;
    return d;
}

// 1. Harnack schemes match the closed forms for m = 1..10, exact strings,
//    under a second per degree.
Outcome criterion_harnack_schemes() {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        auto t0 = std::chrono::steady_clock::now();
        auto a = analyze(standard_regular(m), harnack_signs(m));
        std::string got = viro_code(a.scheme);
        std::string want = viro_code(harnack_scheme(m));
        double dt = seconds_since(t0);
        if (got != want)
            o.fail("m=" + std::to_string(m) + ": got " + got + ", want " + want);
        if (dt >= 1.0) o.fail("m=" + std::to_string(m) + " took " + std::to_string(dt) + "s");
    }
    return o;
}

// 2. Component counts reach the Harnack bound for m = 1..10.
Outcome criterion_component_bound() {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        auto proj = glue_projective(midlines(build_square(standard_regular(m), harnack_signs(m))));
        if (proj.n_components != harnack_bound(m))
            o.fail("m=" + std::to_string(m) + ": " + std::to_string(proj.n_components) +
                   " components, bound " + std::to_string(harnack_bound(m)));
    }
    return o;
}

// 3. Exactly m points on the glued boundary for m = 1..10.
Outcome criterion_boundary_points() {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        int bp = boundary_points(
            glue_projective(midlines(build_square(standard_regular(m), harnack_signs(m)))));
        if (bp != m)
            o.fail("m=" + std::to_string(m) + ": " + std::to_string(bp) + " boundary points");
    }
    return o;
}

// 4. Morse-Petrovskii identities for m = 2..50, exact integers.
Outcome criterion_critical_identities() {
    Outcome o;
    for (int m = 2; m <= 50; ++m) {
        CriticalCounts c = critical_counts(m);
        long long k = m / 2;
        if (c.c0 + c.c1 + c.c2 != static_cast<long long>(m - 1) * (m - 1))
            o.fail("m=" + std::to_string(m) + ": index sum");
        if (c.c0 - c.c1 + c.c2 != 1 - m) o.fail("m=" + std::to_string(m) + ": Euler relation");
        if (c.c1_minus + c.c1_plus != c.c1)
            o.fail("m=" + std::to_string(m) + ": c1 split");
        long long want_prime = m % 2 == 0 ? k - 1 : 0;
        if (c.c1_prime != want_prime) o.fail("m=" + std::to_string(m) + ": c1'");
    }
    return o;
}

// 5. chi(A+-) from the cellulation equals 2-(p+q+-) for k = 1..5.
Outcome criterion_arnold_chi() {
    Outcome o;
    for (int k = 1; k <= 5; ++k) {
        int m = 2 * k;
        auto a = analyze(standard_regular(m), harnack_signs(m));
        auto arnold = arnold_euler(euler_rp2(a.square, a.projective, a.regions, a.scheme), m);
        auto d = arnold_decomposition(k);
        if (arnold.chi_a_plus != 2 - (d.p + d.q_plus))
            o.fail("k=" + std::to_string(k) + ": chi(A+) " + std::to_string(arnold.chi_a_plus) +
                   " vs " + std::to_string(2 - (d.p + d.q_plus)));
        if (arnold.chi_a_minus != 2 - (d.p + d.q_minus))
            o.fail("k=" + std::to_string(k) + ": chi(A-) " + std::to_string(arnold.chi_a_minus) +
                   " vs " + std::to_string(2 - (d.p + d.q_minus)));
    }
    return o;
}

// 6. Harnack curves are type I up to degree 8; in the degree-4 census every
//    4-oval curve is type I and every 3-oval curve is type II.
Outcome criterion_type_facts() {
    Outcome o;
    for (int m = 1; m <= 8; ++m) {
        auto a = analyze(standard_regular(m), harnack_signs(m));
        if (a.type.kind != CurveTypeKind::TypeI)
            o.fail("harnack m=" + std::to_string(m) + " not type I");
    }
    CensusFilter all;
    CensusResult census = run_census(4, all, census_threads_from_env());
    if (census.total != (std::uint64_t(1) << 15)) o.fail("census size");
    for (const auto& row : census.rows) {
        // component count of <...> rows: 4-oval curves are exactly code <4>
        if (row.code_ascii == "<4>" && row.type != CurveTypeKind::TypeI)
            o.fail("a 4-oval quartic of type " + std::string(type_name(row.type)));
        if (row.code_ascii == "<3>" && row.type != CurveTypeKind::TypeII)
            o.fail("a 3-oval quartic of type " + std::string(type_name(row.type)));
        if (row.code_ascii == "<1<1>>" && row.type != CurveTypeKind::TypeI)
            o.fail("a nested quartic of type " + std::string(type_name(row.type)));
    }
    return o;
}

// 7. All 2^10 cubic distributions realize exactly {<J>, <J u 1>}.
Outcome criterion_cubic_census() {
    Outcome o;
    CensusFilter all;
    CensusResult census = run_census(3, all, census_threads_from_env());
    if (census.total != 1024 || census.matched != 1024) o.fail("enumeration size");
    std::vector<std::string> codes;
    for (const auto& row : census.rows) codes.push_back(row.code_ascii);
    std::sort(codes.begin(), codes.end());
    if (codes != std::vector<std::string>{"<J | 1>", "<J>"})
        o.fail("realized schemes differ from {<J>, <J | 1>}");
    return o;
}

// 8. Oracle summaries equal the combinatorial ones: Harnack m = 1..4 and 50
//    random degree-4 distributions, stabilization s <= 32, base grid 128.
Outcome criterion_oracle() {
    Outcome o;
    VerifyOptions opt;
    opt.s_max = 32;
    auto check = [&](int m, const SignDistribution& d, const std::string& label) {
        auto comb = affine_summary(affine_model(midlines(build_square(standard_regular(m), d))));
        auto rep = verify_patchwork(d, default_lift(m), comb, opt);
        if (!rep.match)
            o.fail(label + ": " + (rep.failure.empty() ? "no match" : rep.failure) +
                   ", combinatorial " + comb.to_string() + ", traced " + rep.traced.to_string());
        else if (rep.stabilized_s > 32)
            o.fail(label + ": stabilized only at s=" + std::to_string(rep.stabilized_s));
    };
    for (int m = 1; m <= 4; ++m) check(m, harnack_signs(m), "harnack m=" + std::to_string(m));
    std::mt19937 rng(20240);
    for (int iter = 0; iter < 50; ++iter)
        check(4, random_signs(4, rng), "random #" + std::to_string(iter));
    return o;
}

// test-only oracle for criterion 9: regular triangulations as lower hulls of
// random integer lifts, independent of the LP under test
std::optional<Triangulation> lower_hull_triangulation(int m, std::mt19937& rng) {
    auto pts = standard_triangle(m).lattice_points;
    std::uniform_int_distribution<int> zdist(0, 1000000);  // wide range, ties get rare
    std::vector<std::int64_t> z(pts.size());
    for (auto& v : z) v = zdist(rng);

    Triangulation t;
    t.degree = m;
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                std::int64_t ux = pts[b].i - pts[a].i, uy = pts[b].j - pts[a].j;
                std::int64_t vx = pts[c].i - pts[a].i, vy = pts[c].j - pts[a].j;
                std::int64_t orient = ux * vy - uy * vx;
                if (orient == 0) continue;
                std::size_t bb = b, cc = c;
                if (orient < 0) std::swap(bb, cc);
                // lower face test: every other lifted point strictly above
                std::int64_t bx = pts[bb].i - pts[a].i, by = pts[bb].j - pts[a].j;
                std::int64_t cx = pts[cc].i - pts[a].i, cy = pts[cc].j - pts[a].j;
                std::int64_t bz = z[bb] - z[a], cz = z[cc] - z[a];
                bool lower = true;
                for (std::size_t p = 0; p < n && lower; ++p) {
                    if (p == a || p == bb || p == cc) continue;
                    std::int64_t px = pts[p].i - pts[a].i, py = pts[p].j - pts[a].j;
                    std::int64_t pz = z[p] - z[a];
                    std::int64_t det = bx * (cy * pz - cz * py) - by * (cx * pz - cz * px) +
                                       bz * (cx * py - cy * px);
                    if (det == 0) return std::nullopt;  // non-generic lift, retry
                    if (det < 0) lower = false;
                }
                if (lower) t.triangles.push_back({{pts[a], pts[bb], pts[cc]}});
            }
        }
    }
    if (!is_subdivision(t)) return std::nullopt;
    return t;
}

// 9. Default lift certified for m <= 10; zero lift rejected for m >= 2;
//    LP round-trip on 100 random regular refinements.
Outcome criterion_regularity() {
    Outcome o;
    for (int m = 1; m <= 10; ++m)
        if (!is_convexifying(harnack_triangulation(m), default_lift(m)))
            o.fail("default lift rejected at m=" + std::to_string(m));
    for (int m = 2; m <= 10; ++m) {
        Lift zero;
        for (const auto& p : standard_triangle(m).lattice_points) zero.values[p] = Rat(0);
        if (is_convexifying(harnack_triangulation(m), zero))
            o.fail("zero lift accepted at m=" + std::to_string(m));
    }
    std::mt19937 rng(99);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 2000) {
        ++attempts;
        int m = 2 + done % 4;
        auto tri = lower_hull_triangulation(m, rng);
        if (!tri) continue;
        auto lift = find_convexifier(*tri);
        if (!lift) {
            o.fail("LP failed on a regular refinement (m=" + std::to_string(m) + ")");
            break;
        }
        if (!is_convexifying(*tri, *lift)) {
            o.fail("round-trip certification failed (m=" + std::to_string(m) + ")");
            break;
        }
        ++done;
    }
    if (done < 100) o.fail("only " + std::to_string(done) + " refinements generated");
    return o;
}

// 10. 1000 random distributions at m <= 6 all glue to closed 1-manifolds with
//     component count within the Harnack bound.
Outcome criterion_manifold_fuzz() {
    Outcome o;
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 1000; ++iter) {
        int m = 1 + static_cast<int>(rng() % 6);
        auto d = random_signs(m, rng);
        try {
            auto proj = glue_projective(midlines(build_square(standard_regular(m), d)));
            if (proj.n_components > harnack_bound(m)) {
                o.fail("component bound violated at m=" + std::to_string(m) + " iter " +
                       std::to_string(iter));
                break;
            }
        } catch (const std::exception& e) {
            o.fail(std::string("gluing failed: ") + e.what());
            break;
        }
    }
    return o;
}

struct Criterion {
    const char* label;
    Outcome (*run)();
    double budget_seconds;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. Harnack schemes match closed forms, m=1..10", criterion_harnack_schemes, 10.0},
        {"2. component counts reach the Harnack bound, m=1..10", criterion_component_bound, 10.0},
        {"3. boundary intersections equal the degree, m=1..10", criterion_boundary_points, 10.0},
        {"4. Morse-Petrovskii identities, m=2..50", criterion_critical_identities, 1.0},
        {"5. Arnold chi-level verification, k=1..5", criterion_arnold_chi, 5.0},
        {"6. type facts: Harnack type I (m<=8); quartic census types", criterion_type_facts, 10.0},
        {"7. cubic census realizes exactly {<J>, <J | 1>}", criterion_cubic_census, 1.0},
        {"8. oracle equals combinatorics: Harnack m=1..4 + 50 random quartics",
         criterion_oracle, 300.0},
        {"9. regularity: default lift, zero lift, 100 LP round-trips", criterion_regularity,
         30.0},
        {"10. manifold fuzz: 1000 random distributions, m<=6", criterion_manifold_fuzz, 30.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        if (dt > c.budget_seconds)
            o.fail("took " + std::to_string(dt) + "s, budget " +
                   std::to_string(c.budget_seconds) + "s");
        std::printf("%s  %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.label, dt,
                    o.detail.empty() ? "" : " — ", o.detail.c_str());
        failures += !o.pass;
    }
    return failures;
}
