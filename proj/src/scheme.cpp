#include "tcurve/scheme.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tcurve {

Classification classify_components(const CurveGraph& projective) {
    if (projective.mode != CurveMode::Projective)
        throw std::invalid_argument("classify_components: expects a projective-mode graph");

    Classification cls;
    cls.boundary_crossings.assign(static_cast<std::size_t>(projective.n_components), 0);

    std::vector<int> comp_of_vertex(projective.vertices.size(), -1);
    for (std::size_t s = 0; s < projective.segments.size(); ++s) {
        comp_of_vertex[static_cast<std::size_t>(projective.segments[s].a)] =
            projective.segment_component[s];
        comp_of_vertex[static_cast<std::size_t>(projective.segments[s].b)] =
            projective.segment_component[s];
    }
    for (std::size_t v = 0; v < projective.vertices.size(); ++v) {
        if (projective.on_boundary(projective.vertices[v]))
            ++cls.boundary_crossings[static_cast<std::size_t>(comp_of_vertex[v])];
    }

    cls.kind.assign(static_cast<std::size_t>(projective.n_components), ComponentKind::Oval);
    for (int c = 0; c < projective.n_components; ++c) {
        if (cls.boundary_crossings[static_cast<std::size_t>(c)] % 2 == 1) {
            if (cls.one_sided >= 0)
                throw std::logic_error("classify_components: two one-sided components");
            cls.one_sided = c;
            cls.kind[static_cast<std::size_t>(c)] = ComponentKind::OneSided;
        } else {
            ++cls.ovals;
        }
    }
    return cls;
}

int RealScheme::count_even() const {
    int n = 0;
    for (const Oval& o : ovals) n += o.depth % 2 == 0;
    return n;
}

int RealScheme::count_odd() const {
    int n = 0;
    for (const Oval& o : ovals) n += o.depth % 2 == 1;
    return n;
}

RealScheme nesting_tree(const CurveGraph& projective, const Classification& cls,
                        const RegionComplex& regions) {
    const int m = projective.degree;
    RealScheme scheme;
    scheme.degree = m;
    scheme.one_sided = cls.one_sided >= 0;
    if (scheme.one_sided != (m % 2 == 1))
        throw std::logic_error("nesting_tree: one-sided component does not match degree parity");

    if (static_cast<std::size_t>(regions.n_regions) != cls.ovals + 1u)
        throw std::logic_error("nesting_tree: region count != ovals + 1");

    // root region
    int root = -1;
    if (m % 2 == 0) {
        for (int r = 0; r < regions.n_regions; ++r) {
            if (regions.region_preimage_connected[static_cast<std::size_t>(r)]) {
                if (root >= 0) throw std::logic_error("nesting_tree: two candidate root regions");
                root = r;
            }
        }
        if (root < 0 && regions.n_regions == 1) root = 0;  // empty curve
    } else {
        const auto& pr = regions.component_regions[static_cast<std::size_t>(cls.one_sided)];
        if (pr[0] != pr[1])
            throw std::logic_error("nesting_tree: one-sided component borders two regions");
        root = pr[0];
    }
    if (root < 0) throw std::logic_error("nesting_tree: no root region");

    // oval components and the region tree
    std::vector<int> oval_of_component(static_cast<std::size_t>(projective.n_components), -1);
    std::vector<int> region_depth(static_cast<std::size_t>(regions.n_regions), -1);
    // region -> (adjacent region, oval index) via its bounding ovals
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(regions.n_regions));
    for (int c = 0; c < projective.n_components; ++c) {
        if (cls.kind[static_cast<std::size_t>(c)] != ComponentKind::Oval) continue;
        int idx = static_cast<int>(scheme.ovals.size());
        oval_of_component[static_cast<std::size_t>(c)] = idx;
        RealScheme::Oval o;
        o.component = c;
        o.boundary_crossings = cls.boundary_crossings[static_cast<std::size_t>(c)];
        scheme.ovals.push_back(o);
        const auto& pr = regions.component_regions[static_cast<std::size_t>(c)];
        if (pr[0] == pr[1]) throw std::logic_error("nesting_tree: oval does not separate");
        adj[static_cast<std::size_t>(pr[0])].push_back({pr[1], idx});
        adj[static_cast<std::size_t>(pr[1])].push_back({pr[0], idx});
    }

    std::vector<int> region_owner(static_cast<std::size_t>(regions.n_regions), -1);
    std::vector<int> queue{root};
    region_depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int r = queue[head];
        for (auto [r2, oval] : adj[static_cast<std::size_t>(r)]) {
            if (region_depth[static_cast<std::size_t>(r2)] >= 0) continue;
            region_depth[static_cast<std::size_t>(r2)] =
                region_depth[static_cast<std::size_t>(r)] + 1;
            region_owner[static_cast<std::size_t>(r2)] = oval;
            auto& o = scheme.ovals[static_cast<std::size_t>(oval)];
            o.depth = region_depth[static_cast<std::size_t>(r)];
            o.parent = region_owner[static_cast<std::size_t>(r)];
            o.inside_sign = regions.region_sign_consistent[static_cast<std::size_t>(r2)]
                                ? regions.region_sign[static_cast<std::size_t>(r2)]
                                : std::int8_t{0};
            queue.push_back(r2);
        }
    }
    for (int r = 0; r < regions.n_regions; ++r)
        if (region_depth[static_cast<std::size_t>(r)] < 0)
            throw std::logic_error("nesting_tree: region graph not connected");

    for (std::size_t i = 0; i < scheme.ovals.size(); ++i) {
        int p = scheme.ovals[i].parent;
        if (p < 0)
            scheme.roots.push_back(static_cast<int>(i));
        else
            scheme.ovals[static_cast<std::size_t>(p)].children.push_back(static_cast<int>(i));
    }
    return scheme;
}

namespace {

struct Glyphs {
    const char* open;
    const char* close;
    const char* join;
    const char* times;
};

std::string encode_forest(const RealScheme& s, const std::vector<int>& children,
                          const Glyphs& g);

std::string encode_oval(const RealScheme& s, int oval, const Glyphs& g) {
    const auto& children = s.ovals[static_cast<std::size_t>(oval)].children;
    if (children.empty()) return "1";
    return std::string("1") + g.open + encode_forest(s, children, g) + g.close;
}

std::string encode_forest(const RealScheme& s, const std::vector<int>& children,
                          const Glyphs& g) {
    std::map<std::string, int, std::greater<>> groups;
    for (int c : children) ++groups[encode_oval(s, c, g)];
    std::string out;
    for (const auto& [enc, count] : groups) {
        if (!out.empty()) out += g.join;
        if (enc == "1") {
            out += std::to_string(count);
        } else if (count == 1) {
            out += enc;
        } else {
            out += std::to_string(count) + g.times + enc;
        }
    }
    return out;
}

std::string encode(const RealScheme& s, const Glyphs& g) {
    std::string body = encode_forest(s, s.roots, g);
    if (s.one_sided) {
        if (body.empty()) return std::string(g.open) + "J" + g.close;
        return std::string(g.open) + "J" + g.join + body + g.close;
    }
    if (body.empty()) return std::string(g.open) + "0" + g.close;
    return g.open + body + g.close;
}

}  // namespace

std::string viro_code(const RealScheme& s) {
    return encode(s, {"⟨", "⟩", " ⊔ ", " × "});
}

std::string viro_code_ascii(const RealScheme& s) { return encode(s, {"<", ">", " | ", " x "}); }

std::string oval_encoding(const RealScheme& s, int oval) {
    return encode_oval(s, oval, {"<", ">", " | ", " x "});
}

}  // namespace tcurve
