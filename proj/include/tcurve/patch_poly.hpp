#pragma once

#include <vector>

#include "tcurve/lattice.hpp"
#include "tcurve/rational.hpp"
#include "tcurve/signs.hpp"

namespace tcurve {

// The polynomial b_t = sum eps_{i,j} x^i y^j t^{nu(i,j)} at t = 2^{-s*r},
// where r clears the lift denominators so every coefficient is dyadic:
// |coefficient| = 2^{-s * scaled_lift} with scaled_lift = r * nu(i,j).
struct PatchPolynomial {
    int degree = 0;
    int s = 1;
    long long r = 1;
    Rat t;  // 2^{-s*r}

    struct Term {
        LatticePoint p;
        int sign = 1;
        long long scaled_lift = 0;  // r * nu(p), a nonnegative integer
    };
    std::vector<Term> terms;  // one per lift vertex, lexicographic order

    Rat coefficient(const Term& term) const;
    Rat evaluate(const Rat& x, const Rat& y) const;
};

// Support is the lift's domain (the triangulation vertices); s >= 1.
PatchPolynomial patch_polynomial(const SignDistribution& d, const Lift& lift, int s);

// Exact sign via big-rational arithmetic. When a single monomial dominates the
// sum of all others, the dominant-term shortcut is computed as well and
// checked against the exact value.
int sign_at(const PatchPolynomial& p, const Rat& x, const Rat& y);

}  // namespace tcurve
