#include "tcurve/pipeline.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tcurve {

CurveAnalysis analyze(const RegularTriangulation& t, const SignDistribution& d) {
    CurveAnalysis a;
    a.degree = d.degree;
    a.square = build_square(t, d);
    a.square_graph = midlines(a.square);
    a.projective = glue_projective(a.square_graph);
    a.cls = classify_components(a.projective);
    a.regions = build_regions(a.square, a.projective);
    a.scheme = nesting_tree(a.projective, a.cls, a.regions);
    a.type = curve_type(a.square, a.projective);
    a.boundary_pts = boundary_points(a.projective);
    return a;
}

const RegularTriangulation& standard_regular(int m) {
    static std::mutex mu;
    static std::map<int, RegularTriangulation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        RegularTriangulation reg = certify(harnack_triangulation(m), default_lift(m));
        if (!reg.certified)
            throw std::logic_error("standard_regular: default lift failed certification");
        it = cache.emplace(m, std::move(reg)).first;
    }
    return it->second;
}

}  // namespace tcurve
