#pragma once

#include "tcurve/curve.hpp"
#include "tcurve/curve_type.hpp"
#include "tcurve/regions.hpp"
#include "tcurve/scheme.hpp"
#include "tcurve/square.hpp"

namespace tcurve {

// Everything the combinatorial construction produces for one sign distribution.
struct CurveAnalysis {
    int degree = 0;
    SquareComplex square;
    CurveGraph square_graph;
    CurveGraph projective;
    Classification cls;
    RegionComplex regions;
    RealScheme scheme;
    TypeVerdict type;
    int boundary_pts = 0;
};

CurveAnalysis analyze(const RegularTriangulation& t, const SignDistribution& d);

// Standard triangulation with the default lift, certified once per degree.
const RegularTriangulation& standard_regular(int m);

}  // namespace tcurve
