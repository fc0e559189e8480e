#include <doctest.h>

#include <random>
#include <stdexcept>

#include "tcurve/pipeline.hpp"
#include "tcurve/trace.hpp"

using namespace tcurve;

namespace {

AffineSummary combinatorial_summary(int m, const SignDistribution& d) {
    return affine_summary(affine_model(midlines(build_square(standard_regular(m), d))));
}

}  // namespace

TEST_CASE("patch polynomial coefficients from the default lift") {
    // m=1, t=1/2: -1 + x/2 + y/2
    auto p1 = patch_polynomial(harnack_signs(1), default_lift(1), 1);
    CHECK(p1.t == Rat(1, 2));
    CHECK(p1.r == 1);
    REQUIRE(p1.terms.size() == 3);
    CHECK(p1.evaluate(Rat(0), Rat(0)) == Rat(-1));
    CHECK(p1.evaluate(Rat(2), Rat(0)) == Rat(0));
    CHECK(p1.evaluate(Rat(0), Rat(4)) == Rat(1));

    // m=2: -1 + t x + t y + t^3 x y - t^4 x^2 - t^4 y^2, lift values 0,1,1,3,4,4
    auto p2 = patch_polynomial(harnack_signs(2), default_lift(2), 1);
    std::map<std::pair<int, int>, std::pair<int, long long>> expect = {
        {{0, 0}, {-1, 0}}, {{1, 0}, {1, 1}}, {{0, 1}, {1, 1}},
        {{1, 1}, {1, 3}}, {{2, 0}, {-1, 4}}, {{0, 2}, {-1, 4}},
    };
    for (const auto& term : p2.terms) {
        auto it = expect.find({term.p.i, term.p.j});
        REQUIRE(it != expect.end());
        CHECK(term.sign == it->second.first);
        CHECK(term.scaled_lift == it->second.second);
    }
}

TEST_CASE("sign_at exact evaluation") {
    auto p1 = patch_polynomial(harnack_signs(1), default_lift(1), 1);
    CHECK(sign_at(p1, Rat(2), Rat(0)) == 0);
    CHECK(sign_at(p1, Rat(0), Rat(0)) == -1);
    CHECK(sign_at(p1, Rat(3), Rat(1)) == 1);

    // m=2 at (1,1), t=1/16: -1 + 2t + t^3 - 2t^4 < 0
    auto p2 = patch_polynomial(harnack_signs(2), default_lift(2), 4);
    CHECK(sign_at(p2, Rat(1), Rat(1)) == -1);
    Rat t(1, 16);
    Rat expect = Rat(-1) + Rat(2) * t + t * t * t - Rat(2) * t * t * t * t;
    CHECK(p2.evaluate(Rat(1), Rat(1)) == expect);
}

TEST_CASE("flipping all signs negates the polynomial") {
    auto d = harnack_signs(2);
    SignDistribution neg = d;
    for (auto& s : neg.signs) s = static_cast<std::int8_t>(-s);
    auto p = patch_polynomial(d, default_lift(2), 3);
    auto q = patch_polynomial(neg, default_lift(2), 3);
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        Rat x(static_cast<int>(rng() % 2000) - 1000, 1 + static_cast<int>(rng() % 50));
        Rat y(static_cast<int>(rng() % 2000) - 1000, 1 + static_cast<int>(rng() % 50));
        CHECK(p.evaluate(x, y) == -q.evaluate(x, y));
        CHECK(sign_at(p, x, y) == -sign_at(q, x, y));
    }
}

TEST_CASE("rational lifts are cleared by a common denominator") {
    Lift half;
    for (const auto& [p, v] : default_lift(2).values) half.values[p] = v / Rat(2);
    auto poly = patch_polynomial(harnack_signs(2), half, 3);
    CHECK(poly.r == 2);
    CHECK(poly.t == Rat(BigInt(1), BigInt::pow2(6)));
    for (const auto& term : poly.terms)
        CHECK(poly.coefficient(term) ==
              Rat(BigInt(term.sign), BigInt::pow2(3 * static_cast<std::uint64_t>(term.scaled_lift))));
}

TEST_CASE("trace matches the combinatorial affine summary for small degrees") {
    TraceOptions opt;
    opt.grid_base = 64;  // faster unit runs; acceptance uses 128
    for (int m : {1, 2}) {
        auto d = harnack_signs(m);
        auto expect = combinatorial_summary(m, d);
        auto got = trace_affine(patch_polynomial(d, default_lift(m), 8), opt);
        CHECK(got.summary == expect);
    }
    // m=1: a line; m=2: two affine arcs from the oval crossing infinity twice
    auto s1 = combinatorial_summary(1, harnack_signs(1));
    CHECK(s1.affine_components == 1);
    CHECK(s1.unbounded_branch_ends == 2);
    CHECK(s1.bounded_components == 0);
    auto s2 = combinatorial_summary(2, harnack_signs(2));
    CHECK(s2.affine_components == 2);
    CHECK(s2.unbounded_branch_ends == 4);
}

TEST_CASE("all-plus conic traces to the hyperbola summary") {
    auto d = uniform_signs(2, 1);
    auto expect = combinatorial_summary(2, d);
    CHECK(expect.affine_components == 2);
    CHECK(expect.bounded_components == 0);
    TraceOptions opt;
    opt.grid_base = 64;
    auto got = trace_affine(patch_polynomial(d, default_lift(2), 8), opt);
    CHECK(got.summary == expect);
    // the positive quadrant carries no curve
    CHECK(got.quadrant_segments[0] == 0);
}

TEST_CASE("verify_patchwork stabilizes on harnack curves") {
    VerifyOptions opt;
    opt.trace.grid_base = 64;
    opt.s_max = 32;
    for (int m : {1, 2, 3}) {
        auto d = harnack_signs(m);
        auto rep = verify_patchwork(d, default_lift(m), combinatorial_summary(m, d), opt);
        CHECK(rep.match);
        CHECK(rep.stabilized_s <= 32);
    }
}

TEST_CASE("verify_patchwork flags a mismatching summary") {
    auto d = harnack_signs(2);
    AffineSummary wrong = combinatorial_summary(2, d);
    wrong.affine_components += 1;
    VerifyOptions opt;
    opt.trace.grid_base = 32;
    opt.s_max = 6;
    auto rep = verify_patchwork(d, default_lift(2), wrong, opt);
    CHECK_FALSE(rep.match);
    CHECK(rep.failure == "mismatch");
}

TEST_CASE("trace summaries are monotone-stable in s") {
    TraceOptions opt;
    opt.grid_base = 64;
    auto d = harnack_signs(2);
    auto lift = default_lift(2);
    for (int s = 2; s <= 8; ++s) {
        auto a = trace_affine(patch_polynomial(d, lift, s), opt).summary;
        auto b = trace_affine(patch_polynomial(d, lift, s + 1), opt).summary;
        if (a == b) {
            auto c = trace_affine(patch_polynomial(d, lift, s + 2), opt).summary;
            CHECK(c == a);
        }
    }
}

TEST_CASE("dyadic grid evaluation agrees with exact rational signs") {
    auto p = patch_polynomial(harnack_signs(3), default_lift(3), 4);
    std::mt19937 rng(29);
    for (int iter = 0; iter < 40; ++iter) {
        // random dyadic points, mirroring the sampler's value space
        long long mant = 1 + static_cast<long long>(rng() % (1 << 20));
        int exp = static_cast<int>(rng() % 40) - 20;
        Rat x = Rat(mant * ((rng() & 1) ? 1 : -1), 1) *
                (exp >= 0 ? Rat(BigInt::pow2(static_cast<std::uint64_t>(exp)), BigInt(1))
                          : Rat(BigInt(1), BigInt::pow2(static_cast<std::uint64_t>(-exp))));
        Rat y(static_cast<int>(rng() % 4000) - 2000, 1 + static_cast<int>(rng() % 100));
        CHECK(sign_at(p, x, y) == p.evaluate(x, y).sign());
    }
}
