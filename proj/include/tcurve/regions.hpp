#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tcurve/curve.hpp"
#include "tcurve/square.hpp"

namespace tcurve {

// The complement of the curve in the glued square, as merged triangle pieces.
// A mixed triangle contributes a major piece (index 0, majority sign) and a
// minor piece (index 1, the corner cut off at the minority vertex); a uniform
// triangle contributes a single piece.
struct RegionComplex {
    int degree = 0;

    std::vector<int> piece_offset;  // per copy triangle; size = #triangles + 1
    std::vector<std::int8_t> piece_sign;
    std::vector<int> piece_region;

    int n_regions = 0;
    std::vector<std::int8_t> region_sign;            // 0 when mixed across the gluing (odd m)
    std::vector<std::uint8_t> region_sign_consistent;
    // connected preimage in the orientation double cover (two sheets glued
    // crosswise along the square boundary)
    std::vector<std::uint8_t> region_preimage_connected;

    // per curve component: the one or two adjacent regions, sorted; a
    // one-sided component touches a single region on both sides
    std::vector<std::array<int, 2>> component_regions;

    int piece_of(int copy_triangle, int which) const {
        return piece_offset[static_cast<std::size_t>(copy_triangle)] + which;
    }
    int region_of(int copy_triangle, int which) const {
        return piece_region[static_cast<std::size_t>(piece_of(copy_triangle, which))];
    }
};

RegionComplex build_regions(const SquareComplex& sq, const CurveGraph& projective);

}  // namespace tcurve
