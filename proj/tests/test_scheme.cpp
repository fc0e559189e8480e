#include <doctest.h>

#include <random>
#include <stdexcept>

#include "tcurve/closed_forms.hpp"
#include "tcurve/euler.hpp"
#include "tcurve/pipeline.hpp"

using namespace tcurve;

namespace {

CurveAnalysis harnack(int m) { return analyze(standard_regular(m), harnack_signs(m)); }

}  // namespace

TEST_CASE("classification of harnack curves") {
    auto a3 = harnack(3);
    CHECK(a3.cls.one_sided >= 0);
    CHECK(a3.cls.ovals == 1);
    auto a2 = harnack(2);
    CHECK(a2.cls.one_sided == -1);
    CHECK(a2.cls.ovals == 1);
    auto a5 = harnack(5);
    CHECK(a5.cls.one_sided >= 0);
    CHECK(a5.cls.ovals == 6);
}

TEST_CASE("harnack schemes match the closed-form predictions") {
    CHECK(viro_code(harnack(1).scheme) == "⟨J⟩");
    CHECK(viro_code(harnack(2).scheme) == "⟨1⟩");
    CHECK(viro_code(harnack(3).scheme) == "⟨J ⊔ 1⟩");
    CHECK(viro_code(harnack(4).scheme) == "⟨4⟩");
    CHECK(viro_code(harnack(6).scheme) == "⟨1⟨1⟩ ⊔ 9⟩");
    CHECK(viro_code(harnack(7).scheme) == "⟨J ⊔ 15⟩");
    CHECK(viro_code(harnack(8).scheme) == "⟨1⟨3⟩ ⊔ 18⟩");
}

TEST_CASE("viro code closed forms and ascii variant") {
    CHECK(viro_code(harnack_scheme(2)) == "⟨1⟩");
    CHECK(viro_code(harnack_scheme(5)) == "⟨J ⊔ 6⟩");
    CHECK(viro_code(harnack_scheme(8)) == "⟨1⟨3⟩ ⊔ 18⟩");
    CHECK(viro_code_ascii(harnack_scheme(8)) == "<1<3> | 18>");
    CHECK(viro_code_ascii(harnack_scheme(1)) == "<J>");

    RealScheme empty;
    empty.degree = 2;
    CHECK(viro_code(empty) == "⟨0⟩");

    // one oval inside another
    RealScheme nested;
    nested.degree = 4;
    nested.ovals.resize(2);
    nested.ovals[0].children = {1};
    nested.ovals[1].parent = 0;
    nested.ovals[1].depth = 1;
    nested.roots = {0};
    CHECK(viro_code(nested) == "⟨1⟨1⟩⟩");
}

TEST_CASE("viro code is canonical under child permutations") {
    // tree with children {leaf, leaf, 1<1>} assembled in two different orders
    auto build = [](bool reversed) {
        RealScheme s;
        s.degree = 6;
        s.ovals.resize(4);
        // oval 0: root with child structure; ovals 1,2: leaves; oval 3 inside 0
        if (!reversed) {
            s.roots = {0, 1, 2};
        } else {
            s.roots = {2, 1, 0};
        }
        s.ovals[0].children = {3};
        s.ovals[3].parent = 0;
        s.ovals[3].depth = 1;
        return s;
    };
    CHECK(viro_code(build(false)) == viro_code(build(true)));
    CHECK(viro_code(build(false)) == "⟨1⟨1⟩ ⊔ 2⟩");
}

TEST_CASE("region invariants for even degrees") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        int m = 2 * (1 + static_cast<int>(rng() % 2));
        SignDistribution d = uniform_signs(m, 1);
        for (auto& s : d.signs) s = (rng() & 1) ? 1 : -1;
        auto a = analyze(standard_regular(m), d);
        CHECK(a.regions.n_regions == a.cls.ovals + 1);
        int connected = 0;
        for (int r = 0; r < a.regions.n_regions; ++r)
            connected += a.regions.region_preimage_connected[static_cast<std::size_t>(r)];
        CHECK(connected == 1);
    }
}

TEST_CASE("euler characteristics of harnack curves") {
    auto a4 = harnack(4);
    auto e4 = euler_rp2(a4.square, a4.projective, a4.regions, a4.scheme);
    CHECK(e4.chi_plus == 4);
    CHECK(e4.chi_minus == -3);
    auto a6 = harnack(6);
    auto e6 = euler_rp2(a6.square, a6.projective, a6.regions, a6.scheme);
    CHECK(e6.chi_plus == 9);
    CHECK(e6.chi_minus == -8);

    RealScheme empty;
    empty.degree = 2;
    auto e0 = euler_from_scheme(empty);
    CHECK(e0.chi_plus == 0);
    CHECK(e0.chi_minus == 1);
}

TEST_CASE("arnold euler characteristics") {
    auto run = [](int m) {
        auto a = harnack(m);
        return arnold_euler(euler_rp2(a.square, a.projective, a.regions, a.scheme), m);
    };
    auto r2 = run(2);
    CHECK(r2.chi_a_plus == 2);
    CHECK(r2.chi_a_minus == 1);
    CHECK(r2.k1_disc_convention);
    auto r4 = run(4);
    CHECK(r4.chi_a_plus == 2);
    CHECK(r4.chi_a_minus == -5);
    CHECK(r4.crosscaps_minus == 7);
    auto r6 = run(6);
    CHECK(r6.chi_a_plus == 0);
    CHECK(r6.chi_a_minus == -17);
    CHECK_THROWS_AS(arnold_euler(harnack_scheme(3), 3), std::invalid_argument);
}

TEST_CASE("type of harnack curves and the line") {
    for (int m = 1; m <= 8; ++m) {
        auto a = harnack(m);
        CHECK(a.type.kind == CurveTypeKind::TypeI);
    }
}

TEST_CASE("closed form arithmetic") {
    auto c6 = critical_counts(6);
    CHECK(c6.c0 == 1);
    CHECK(c6.c1 == 15);
    CHECK(c6.c2 == 9);
    CHECK(c6.c1_minus == 12);
    CHECK(c6.c1_plus == 3);
    CHECK(c6.c1_prime == 2);
    auto c7 = critical_counts(7);
    CHECK(c7.c0 == 3);
    CHECK(c7.c1 == 21);
    CHECK(c7.c2 == 12);
    CHECK(c7.c1_minus == 18);
    CHECK(c7.c1_plus == 3);
    CHECK(c7.c1_prime == 0);
    auto c2 = critical_counts(2);
    CHECK(c2.c0 == 0);
    CHECK(c2.c1 == 1);
    CHECK(c2.c2 == 0);
    CHECK_THROWS_AS(critical_counts(1), std::invalid_argument);

    CHECK(harnack_bound(4) == 4);
    CHECK(harnack_bound(1) == 1);
    CHECK(harnack_bound(10) == 37);

    auto d1 = arnold_decomposition(1);
    CHECK(d1.p == 0);
    CHECK(d1.q_plus == 0);
    CHECK(d1.q_minus == 1);
    auto d2 = arnold_decomposition(2);
    CHECK(d2.q_minus == 7);
    auto d3 = arnold_decomposition(3);
    CHECK(d3.p == 1);
    CHECK(d3.q_plus == 1);
    CHECK(d3.q_minus == 18);

    for (int k = 1; k <= 10; ++k) {
        auto d = arnold_decomposition(k);
        CHECK(2 - (d.p + d.q_minus) == 1 - 3 * k * (k - 1));
        CHECK(2 - (d.p + d.q_plus) == 2 - static_cast<long long>(k - 1) * (k - 2));
    }
}

TEST_CASE("scheme counts against closed forms") {
    for (int m = 1; m <= 10; ++m) {
        auto s = harnack_scheme(m);
        if (m % 2 == 0)
            CHECK(s.ovals.size() == static_cast<std::size_t>(harnack_bound(m)));
        else
            CHECK(s.ovals.size() + 1 == static_cast<std::size_t>(harnack_bound(m)));
    }
}

TEST_CASE("cross check passes for harnack curves and names corrupted identities") {
    for (int m = 2; m <= 10; ++m) {
        auto rep = cross_check(harnack(m));
        CHECK(rep.all_pass);
    }
    auto a = harnack(6);
    a.scheme.ovals.push_back({});
    a.scheme.roots.push_back(static_cast<int>(a.scheme.ovals.size()) - 1);
    auto rep = cross_check(a);
    CHECK_FALSE(rep.all_pass);
    bool named = false;
    for (const auto& item : rep.items)
        if (!item.pass && item.identity == "scheme equals closed form") named = true;
    CHECK(named);
}
