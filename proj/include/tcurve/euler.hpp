#pragma once

#include "tcurve/regions.hpp"
#include "tcurve/scheme.hpp"

namespace tcurve {

// Euler characteristics of the halves RP2_+ = {F >= 0} and RP2_-, after
// normalizing the sign of F so the root (non-orientable) region is negative.
struct EulerReport {
    long long chi_plus = 0;
    long long chi_minus = 0;
    bool flipped = false;  // global sign flip applied to match the convention
};

// chi_plus is computed from the cellulation of the closed positive regions and
// independently as P - N over the scheme; a disagreement throws. Even degree only.
EulerReport euler_rp2(const SquareComplex& sq, const CurveGraph& projective,
                      const RegionComplex& regions, const RealScheme& scheme);

// The P - N route alone, for schemes without a backing complex.
EulerReport euler_from_scheme(const RealScheme& scheme);

struct ArnoldReport {
    long long genus = 0;
    long long chi_a_plus = 0;
    long long chi_a_minus = 0;
    long long crosscaps_minus = 0;  // 2 - chi(A_-)
    // degree 2: A_+ is a disc; the reported chi (= 2) is that of the glued closed surface
    bool k1_disc_convention = false;
};

// chi(A_pm) = (1 - g_m) + chi(RP2_pm) with g_m = (m-1)(m-2)/2. Even degree only.
ArnoldReport arnold_euler(const EulerReport& rp2, int m);
ArnoldReport arnold_euler(const RealScheme& scheme, int m);

}  // namespace tcurve
