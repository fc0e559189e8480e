#pragma once

#include <json.hpp>
#include <string>

#include "tcurve/closed_forms.hpp"
#include "tcurve/euler.hpp"
#include "tcurve/pipeline.hpp"
#include "tcurve/trace.hpp"

namespace tcurve {

using json = nlohmann::ordered_json;

// file formats: lattice points as [i, j]; signs as a flat array in
// lexicographic (i, j) order; lift values as exact rational strings "p/q";
// curve vertices as doubled integers with a quadrant tag
json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json to_json(const Lift& lift, int degree);
Lift lift_from_json(const json& j);

json to_json(const SignDistribution& d);
SignDistribution signs_from_json(const json& j);

json to_json(const CurveGraph& g);
json to_json(const RealScheme& s);
json to_json(const CrossCheckReport& rep);
json to_json(const EulerReport& rep);
json to_json(const ArnoldReport& rep);
json to_json(const AffineSummary& s);
json to_json(const VerifyReport& rep);

const char* type_name(CurveTypeKind k);

// whole-run report for the build command
json build_report(const CurveAnalysis& a);

}  // namespace tcurve
