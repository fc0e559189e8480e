#pragma once

#include <string>
#include <vector>

#include "tcurve/pipeline.hpp"
#include "tcurve/scheme.hpp"

namespace tcurve {

// Critical point counts of a Harnack polynomial of type H^0.
struct CriticalCounts {
    long long c0 = 0, c1 = 0, c2 = 0;
    long long c1_minus = 0, c1_plus = 0, c1_prime = 0;
};

// m >= 2; the tuple satisfies c0+c1+c2 = (m-1)^2, c0-c1+c2 = 1-m,
// c1_minus + c1_plus = c1 by construction.
CriticalCounts critical_counts(int m);

// (m-1)(m-2)/2 + 1, the maximal component count in degree m.
long long harnack_bound(int m);

// Predicted Harnack scheme: <1<(k-1)(k-2)/2> u 3k(k-1)/2> for m = 2k,
// <J u k(2k-1)> for m = 2k+1.
RealScheme harnack_scheme(int m);

// Theorem-level decomposition of the Arnold surfaces of H_2k.
struct ArnoldDecomposition {
    long long p = 0, q_plus = 0, q_minus = 0;
};
ArnoldDecomposition arnold_decomposition(int k);

struct CheckItem {
    std::string identity;
    bool pass = false;
    std::string expected, actual;
};
struct CrossCheckReport {
    std::vector<CheckItem> items;
    bool all_pass = true;
};

// Consistency of a patchworked Harnack curve against the closed forms:
// scheme string, component count, boundary intersections, the oval <->
// critical point correspondence (which only covers ovals missing the line
// at infinity), and for even degree the Arnold Euler characteristics.
CrossCheckReport cross_check(const CurveAnalysis& analysis);

}  // namespace tcurve
