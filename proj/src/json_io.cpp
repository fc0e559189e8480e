#include "tcurve/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcurve {

json to_json(const Triangulation& t) {
    json tris = json::array();
    for (const Triangle& tr : t.triangles)
        tris.push_back({{tr.v[0].i, tr.v[0].j}, {tr.v[1].i, tr.v[1].j}, {tr.v[2].i, tr.v[2].j}});
    return {{"degree", t.degree}, {"triangles", tris}};
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.degree = j.at("degree").get<int>();
    for (const auto& tr : j.at("triangles")) {
        if (tr.size() != 3) throw std::invalid_argument("triangulation: triangle needs 3 vertices");
        Triangle out;
        for (int k = 0; k < 3; ++k)
            out.v[static_cast<std::size_t>(k)] = {tr[static_cast<std::size_t>(k)][0].get<int>(),
                                                  tr[static_cast<std::size_t>(k)][1].get<int>()};
        t.triangles.push_back(out);
    }
    return t;
}

json to_json(const Lift& lift, int degree) {
    json vals = json::array();
    for (const auto& [p, v] : lift.values) vals.push_back({p.i, p.j, v.to_string()});
    return {{"degree", degree}, {"values", vals}};
}

Lift lift_from_json(const json& j) {
    Lift l;
    for (const auto& row : j.at("values")) {
        LatticePoint p{row[0].get<int>(), row[1].get<int>()};
        l.values[p] = Rat::from_string(row[2].get<std::string>());
    }
    return l;
}

json to_json(const SignDistribution& d) {
    json signs = json::array();
    for (std::int8_t s : d.signs) signs.push_back(static_cast<int>(s));
    return {{"degree", d.degree}, {"signs", signs}};
}

SignDistribution signs_from_json(const json& j) {
    SignDistribution d;
    d.degree = j.at("degree").get<int>();
    std::size_t expect = standard_triangle(d.degree).lattice_points.size();
    for (const auto& v : j.at("signs")) {
        int s = v.get<int>();
        if (s != 1 && s != -1) throw std::invalid_argument("signs: entries must be +1 or -1");
        d.signs.push_back(static_cast<std::int8_t>(s));
    }
    if (d.signs.size() != expect)
        throw std::invalid_argument("signs: expected one entry per lattice point of T_m");
    return d;
}

json to_json(const CurveGraph& g) {
    const char* mode = g.mode == CurveMode::Square      ? "square"
                       : g.mode == CurveMode::Projective ? "projective"
                                                         : "affine";
    json verts = json::array();
    for (const GridPoint& p : g.vertices)
        verts.push_back({{"x", p.x}, {"y", p.y}, {"quadrant", quadrant_name(quadrant_of(p))}});
    json segs = json::array();
    for (const auto& s : g.segments) segs.push_back({s.a, s.b});
    json out{{"mode", mode}, {"degree", g.degree}, {"vertices", verts}, {"segments", segs}};
    if (!g.segment_component.empty()) {
        out["components"] = g.segment_component;
        out["component_count"] = g.n_components;
    }
    if (g.mode == CurveMode::Affine) out["open_ends"] = g.open_ends;
    return out;
}

namespace {

json nesting_node(const RealScheme& s, int oval);

json nesting_children(const RealScheme& s, std::vector<int> children) {
    // same canonical child order as the Viro string
    std::vector<std::pair<std::string, json>> items;
    for (int c : children) items.push_back({oval_encoding(s, c), nesting_node(s, c)});
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    json arr = json::array();
    for (auto& [k, node] : items) {
        (void)k;
        arr.push_back(node);
    }
    return arr;
}

json nesting_node(const RealScheme& s, int oval) {
    return nesting_children(s, s.ovals[static_cast<std::size_t>(oval)].children);
}

}  // namespace

json to_json(const RealScheme& s) {
    return {{"degree", s.degree},
            {"one_sided", s.one_sided},
            {"nesting", nesting_children(s, s.roots)},
            {"viro_code", viro_code(s)},
            {"viro_code_ascii", viro_code_ascii(s)}};
}

json to_json(const CrossCheckReport& rep) {
    json items = json::array();
    for (const auto& item : rep.items)
        items.push_back({{"identity", item.identity},
                         {"pass", item.pass},
                         {"expected", item.expected},
                         {"actual", item.actual}});
    return {{"all_pass", rep.all_pass}, {"checks", items}};
}

json to_json(const EulerReport& rep) {
    return {{"chi_plus", rep.chi_plus}, {"chi_minus", rep.chi_minus}, {"flipped", rep.flipped}};
}

json to_json(const ArnoldReport& rep) {
    json out{{"genus", rep.genus},
             {"chi_a_plus", rep.chi_a_plus},
             {"chi_a_minus", rep.chi_a_minus},
             {"crosscaps_minus", rep.crosscaps_minus}};
    if (rep.k1_disc_convention)
        out["note"] = "degree 2: A+ is a disc; chi refers to the glued closed surface";
    return out;
}

json to_json(const AffineSummary& s) {
    return {{"components", s.affine_components},
            {"bounded", s.bounded_components},
            {"open_ends", s.unbounded_branch_ends},
            {"nesting", s.bounded_nesting}};
}

json to_json(const VerifyReport& rep) {
    json out{{"match", rep.match},
             {"s", rep.stabilized_s},
             {"grid", rep.grid},
             {"combinatorial", to_json(rep.combinatorial)},
             {"traced", to_json(rep.traced)},
             {"quadrant_segments",
              {{"++", rep.quadrant_segments[0]},
               {"-+", rep.quadrant_segments[1]},
               {"+-", rep.quadrant_segments[2]},
               {"--", rep.quadrant_segments[3]}}}};
    if (!rep.failure.empty()) out["failure"] = rep.failure;
    return out;
}

const char* type_name(CurveTypeKind k) {
    switch (k) {
        case CurveTypeKind::TypeI: return "I";
        case CurveTypeKind::TypeII: return "II";
        case CurveTypeKind::EmptyCurve: return "empty";
    }
    return "?";
}

json build_report(const CurveAnalysis& a) {
    json out{{"degree", a.degree},
             {"viro_code", viro_code(a.scheme)},
             {"viro_code_ascii", viro_code_ascii(a.scheme)},
             {"type", type_name(a.type.kind)},
             {"components", a.projective.n_components},
             {"ovals", a.cls.ovals},
             {"one_sided", a.scheme.one_sided},
             {"boundary_points", a.boundary_pts},
             {"scheme", to_json(a.scheme)}};
    if (a.degree % 2 == 0) {
        EulerReport euler = euler_rp2(a.square, a.projective, a.regions, a.scheme);
        out["euler"] = to_json(euler);
        out["arnold"] = to_json(arnold_euler(euler, a.degree));
    }
    out["curve"] = to_json(a.projective);
    return out;
}

}  // namespace tcurve
