#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "tcurve/closed_forms.hpp"
#include "tcurve/pipeline.hpp"

using namespace tcurve;

namespace {

SignDistribution random_signs(int m, std::mt19937& rng) {
    SignDistribution d = uniform_signs(m, 1);
    for (auto& s : d.signs) s = (rng() & 1) ? 1 : -1;
    return d;
}

}  // namespace

TEST_CASE("harnack signs follow the parity rule") {
    auto d = harnack_signs(4);
    CHECK(d.at({0, 0}) == -1);
    CHECK(d.at({1, 0}) == 1);
    CHECK(d.at({1, 1}) == 1);
    CHECK(d.at({2, 2}) == -1);
    auto d1 = harnack_signs(1);
    CHECK(d1.at({0, 0}) == -1);
    CHECK(d1.at({1, 0}) == 1);
    CHECK(d1.at({0, 1}) == 1);
}

TEST_CASE("modular sign extension") {
    auto d = harnack_signs(4);
    CHECK(extend_signs(d, Quadrant::Sx, {1, 1}) == -1);
    CHECK(extend_signs(d, Quadrant::Sy, {0, 2}) == -1);
    CHECK(extend_signs(d, Quadrant::S, {1, 1}) == 1);
    CHECK(extend_signs(d, Quadrant::Id, {1, 1}) == 1);
    // axis points get the same sign from both adjacent quadrants
    CHECK(extend_signs(d, Quadrant::Id, {0, 1}) == extend_signs(d, Quadrant::Sx, {0, 1}));
    CHECK(extended_sign_at(d, 0, 2) == extend_signs(d, Quadrant::Id, {0, 1}));
    CHECK(extended_sign_at(d, -2, 2) == extend_signs(d, Quadrant::Sx, {1, 1}));
}

TEST_CASE("square complex counts") {
    auto sq1 = build_square(standard_regular(1), harnack_signs(1));
    CHECK(sq1.triangles.size() == 4);
    // distinct lattice points of the square |x|+|y| <= 1
    std::set<std::pair<int, int>> pts;
    for (const auto& ct : sq1.triangles)
        for (const auto& v : ct.v) pts.insert({v.x, v.y});
    CHECK(pts.size() == 5);

    CHECK(build_square(standard_regular(2), harnack_signs(2)).triangles.size() == 16);
    CHECK_THROWS_AS(build_square(standard_regular(2), harnack_signs(3)), std::invalid_argument);
}

TEST_CASE("midline of a single mixed triangle") {
    auto sq = build_square(standard_regular(1), harnack_signs(1));
    auto g = midlines(sq);
    // base copy: (0,0) -, (1,0) +, (0,1) + gives segment (1/2,0)-(0,1/2)
    bool found = false;
    for (const auto& s : g.segments) {
        const auto& ct = sq.triangles[static_cast<std::size_t>(s.copy_triangle)];
        if (ct.q != Quadrant::Id) continue;
        GridPoint a = g.vertices[static_cast<std::size_t>(s.a)];
        GridPoint b = g.vertices[static_cast<std::size_t>(s.b)];
        if (a.x > b.x) std::swap(a, b);
        CHECK(a == GridPoint{0, 1});
        CHECK(b == GridPoint{1, 0});
        found = true;
    }
    CHECK(found);
    // the s copy of the degree-1 triangle is uniformly negative: 3 segments total
    CHECK(g.segments.size() == 3);
}

TEST_CASE("uniform triangles emit nothing") {
    SignDistribution d = uniform_signs(2, 1);
    auto sq = build_square(standard_regular(2), d);
    auto g = midlines(sq);
    for (const auto& s : g.segments) {
        const auto& ct = sq.triangles[static_cast<std::size_t>(s.copy_triangle)];
        CHECK(ct.q != Quadrant::Id);  // id copies are uniformly +
    }
    // the modular extension makes some reflected copies mixed: the all-plus
    // conic is a hyperbola, not an empty curve
    CHECK_FALSE(g.segments.empty());
}

TEST_CASE("projective gluing yields closed curves with expected components") {
    auto run = [](int m) {
        return glue_projective(midlines(build_square(standard_regular(m), harnack_signs(m))));
    };
    CHECK(run(1).n_components == 1);
    CHECK(run(2).n_components == 1);
    CHECK(run(4).n_components == 4);
}

TEST_CASE("affine model arc counts") {
    auto affine = [](int m, const SignDistribution& d) {
        return affine_model(midlines(build_square(standard_regular(m), d)));
    };
    auto a1 = affine(1, harnack_signs(1));
    CHECK(a1.n_components == 1);
    CHECK(a1.open_ends == 2);
    auto a2 = affine(2, harnack_signs(2));
    CHECK(a2.n_components == 2);
    CHECK(a2.open_ends == 4);
}

TEST_CASE("boundary points count intersections with the glued boundary") {
    auto bp = [](int m, const SignDistribution& d) {
        return boundary_points(glue_projective(midlines(build_square(standard_regular(m), d))));
    };
    CHECK(bp(4, harnack_signs(4)) == 4);
    CHECK(bp(7, harnack_signs(7)) == 7);
    // all-plus degree 2 is a hyperbola: two points at infinity
    CHECK(bp(2, uniform_signs(2, 1)) == 2);
}

TEST_CASE("negating every sign leaves the curve graph unchanged") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        int m = 1 + static_cast<int>(rng() % 4);
        auto d = random_signs(m, rng);
        SignDistribution neg = d;
        for (auto& s : neg.signs) s = static_cast<std::int8_t>(-s);
        auto g1 = midlines(build_square(standard_regular(m), d));
        auto g2 = midlines(build_square(standard_regular(m), neg));
        REQUIRE(g1.segments.size() == g2.segments.size());
        REQUIRE(g1.vertices.size() == g2.vertices.size());
        for (std::size_t i = 0; i < g1.vertices.size(); ++i)
            CHECK(g1.vertices[i] == g2.vertices[i]);
        for (std::size_t i = 0; i < g1.segments.size(); ++i) {
            CHECK(g1.segments[i].a == g2.segments[i].a);
            CHECK(g1.segments[i].b == g2.segments[i].b);
        }
    }
}

TEST_CASE("fuzz: degree-2 manifold, boundary parity, component bound") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        int m = 1 + static_cast<int>(rng() % 5);
        auto d = random_signs(m, rng);
        auto proj = glue_projective(midlines(build_square(standard_regular(m), d)));
        int bp = boundary_points(proj);
        CHECK(bp <= m);
        CHECK(bp % 2 == m % 2);
        CHECK(proj.n_components <= harnack_bound(m));
    }
}
