#pragma once

#include <string>
#include <vector>

#include "tcurve/curve.hpp"
#include "tcurve/regions.hpp"

namespace tcurve {

enum class ComponentKind { Oval, OneSided };

struct Classification {
    std::vector<ComponentKind> kind;       // per curve component
    std::vector<int> boundary_crossings;   // per curve component
    int one_sided = -1;                    // component id, -1 if none
    int ovals = 0;
};

// A component is one-sided iff it crosses the glued boundary an odd number of
// times (odd intersection with the line at infinity).
Classification classify_components(const CurveGraph& projective);

// Rooted nesting forest of ovals. Depth-0 ovals are the even (outer) ones.
struct RealScheme {
    int degree = 0;
    bool one_sided = false;

    struct Oval {
        int parent = -1;
        std::vector<int> children;
        int depth = 0;
        // pipeline annotations; -1 / 0 on synthetic schemes
        int component = -1;
        int boundary_crossings = 0;
        std::int8_t inside_sign = 0;
    };
    std::vector<Oval> ovals;
    std::vector<int> roots;

    int count_even() const;
    int count_odd() const;
    int components() const { return static_cast<int>(ovals.size()) + (one_sided ? 1 : 0); }
};

RealScheme nesting_tree(const CurveGraph& projective, const Classification& cls,
                        const RegionComplex& regions);

// Canonical Viro string: children sorted by subtree encoding (descending),
// runs of bare ovals collapsed to their count, J prefixed for odd degree.
std::string viro_code(const RealScheme& s);
// Same encoding over ASCII glyphs: ⟨ -> "<", ⟩ -> ">", ⊔ -> "|", × -> "x".
std::string viro_code_ascii(const RealScheme& s);
// Canonical encoding of a single oval's subtree (the children sort key).
std::string oval_encoding(const RealScheme& s, int oval);

}  // namespace tcurve
