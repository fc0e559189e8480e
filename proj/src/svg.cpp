#include "tcurve/svg.hpp"

#include <cmath>
#include <sstream>

#include "tcurve/curve_type.hpp"

namespace tcurve {

namespace {

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* style) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << -y1 << "\" x2=\"" << x2 << "\" y2=\"" << -y2
        << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const CurveAnalysis& a, bool orientation_arrows) {
    const int m = a.degree;
    const double R = 2.0 * m + 1.0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
        << -R << " " << -R << " " << 2 * R << " " << 2 * R << "\">\n";
    out << "<rect x=\"" << -R << "\" y=\"" << -R << "\" width=\"" << 2 * R << "\" height=\""
        << 2 * R << "\" fill=\"white\"/>\n";

    // triangulation in light strokes (coordinates are doubled)
    const char* grid_style = "stroke=\"#d8d8d8\" stroke-width=\"0.045\"";
    for (const CopyTriangle& ct : a.square.triangles)
        for (int k = 0; k < 3; ++k)
            line(out, ct.v[static_cast<std::size_t>(k)].x, ct.v[static_cast<std::size_t>(k)].y,
                 ct.v[(static_cast<std::size_t>(k) + 1) % 3].x,
                 ct.v[(static_cast<std::size_t>(k) + 1) % 3].y, grid_style);

    // sign glyphs at the extended lattice points
    const char* glyph_style = "stroke=\"#555555\" stroke-width=\"0.1\"";
    for (int x = -m; x <= m; ++x) {
        int span = m - std::abs(x);
        for (int y = -span; y <= span; ++y) {
            int sg = extended_sign_at(a.square.signs, 2 * x, 2 * y);
            line(out, 2 * x - 0.22, 2 * y, 2 * x + 0.22, 2 * y, glyph_style);
            if (sg > 0) line(out, 2 * x, 2 * y - 0.22, 2 * x, 2 * y + 0.22, glyph_style);
        }
    }

    // one polyline per component, walking the glued cycle in square coordinates
    const CurveGraph& sqg = a.square_graph;
    const CurveGraph& proj = a.projective;
    std::vector<std::array<std::pair<int, int>, 2>> incident(
        proj.vertices.size(), {std::pair<int, int>{-1, -1}, std::pair<int, int>{-1, -1}});
    for (std::size_t s = 0; s < proj.segments.size(); ++s) {
        for (int end = 0; end < 2; ++end) {
            int v = end == 0 ? proj.segments[s].a : proj.segments[s].b;
            auto& slots = incident[static_cast<std::size_t>(v)];
            (slots[0].first < 0 ? slots[0] : slots[1]) = {static_cast<int>(s), end};
        }
    }
    std::vector<bool> used(proj.segments.size(), false);
    int hue_index = 0;
    for (std::size_t start = 0; start < proj.segments.size(); ++start) {
        if (used[start]) continue;
        int hue = (hue_index++ * 67) % 360;
        out << "<path fill=\"none\" stroke=\"hsl(" << hue
            << ",70%,45%)\" stroke-width=\"0.13\" stroke-linecap=\"round\" d=\"";
        int seg = static_cast<int>(start), lead_end = 0;
        GridPoint pen = sqg.vertices[static_cast<std::size_t>(sqg.segments[start].a)];
        out << "M" << pen.x << " " << -pen.y;
        while (!used[static_cast<std::size_t>(seg)]) {
            used[static_cast<std::size_t>(seg)] = true;
            const auto& sq_seg = sqg.segments[static_cast<std::size_t>(seg)];
            GridPoint from = sqg.vertices[static_cast<std::size_t>(lead_end == 0 ? sq_seg.a
                                                                                 : sq_seg.b)];
            GridPoint to = sqg.vertices[static_cast<std::size_t>(lead_end == 0 ? sq_seg.b
                                                                               : sq_seg.a)];
            if (!(from == pen)) out << "M" << from.x << " " << -from.y;  // glued jump
            out << "L" << to.x << " " << -to.y;
            pen = to;
            // continue through the projective vertex at the trailing end
            int pv = lead_end == 0 ? proj.segments[static_cast<std::size_t>(seg)].b
                                   : proj.segments[static_cast<std::size_t>(seg)].a;
            const auto& slots = incident[static_cast<std::size_t>(pv)];
            auto next = slots[0].first == seg ? slots[1] : slots[0];
            seg = next.first;
            lead_end = next.second;
        }
        out << "\"/>\n";
    }

    if (orientation_arrows && a.type.kind == CurveTypeKind::TypeI) {
        const char* arrow_style = "fill=\"#222222\"";
        for (std::size_t s = 0; s < proj.segments.size(); ++s) {
            const auto& sq_seg = sqg.segments[s];
            bool ab = segment_reference_ab(a.square, proj.segments[s]);
            int base = a.square.triangles[static_cast<std::size_t>(sq_seg.copy_triangle)]
                           .base_index;
            if (a.type.flips[static_cast<std::size_t>(base)]) ab = !ab;
            GridPoint pa = sqg.vertices[static_cast<std::size_t>(ab ? sq_seg.a : sq_seg.b)];
            GridPoint pb = sqg.vertices[static_cast<std::size_t>(ab ? sq_seg.b : sq_seg.a)];
            double mx = (pa.x + pb.x) / 2.0, my = (pa.y + pb.y) / 2.0;
            double dx = pb.x - pa.x, dy = pb.y - pa.y;
            double len = std::sqrt(dx * dx + dy * dy);
            dx /= len;
            dy /= len;
            double nx = -dy, ny = dx;
            out << "<polygon points=\"" << mx + 0.3 * dx << "," << -(my + 0.3 * dy) << " "
                << mx - 0.18 * dx + 0.15 * nx << "," << -(my - 0.18 * dy + 0.15 * ny) << " "
                << mx - 0.18 * dx - 0.15 * nx << "," << -(my - 0.18 * dy - 0.15 * ny) << "\" "
                << arrow_style << "/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace tcurve
