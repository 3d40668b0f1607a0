#include "yoshigrip/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

YoshimuraParams YoshimuraParams::uniform(double alpha, double length, int units, int rows,
                                         double handle_offset) {
    YoshimuraParams p;
    p.alpha_deg.assign(static_cast<std::size_t>(rows), alpha);
    p.crease_length_mm.assign(static_cast<std::size_t>(rows), length);
    p.num_units = units;
    p.num_rows = rows;
    p.handle_offset_mm = handle_offset;
    return p;
}

void YoshimuraParams::validate() const {
    if (num_rows < 1) throw InvalidParams("num_rows", "must be >= 1");
    if (num_units < 3) throw InvalidParams("num_units", "must be >= 3");
    if (alpha_deg.size() != static_cast<std::size_t>(num_rows))
        throw InvalidParams("alpha_deg", "vector length must equal num_rows");
    if (crease_length_mm.size() != static_cast<std::size_t>(num_rows))
        throw InvalidParams("crease_length_mm", "vector length must equal num_rows");
    for (double a : alpha_deg) {
        if (!(a > 0.0 && a < 90.0))
            throw InvalidParams("alpha_deg", "each entry must satisfy 0 < alpha < 90");
    }
    for (double l : crease_length_mm) {
        if (!(l > 0.0)) throw InvalidParams("crease_length_mm", "each entry must be > 0");
    }
    if (!(handle_offset_mm >= 0.0)) throw InvalidParams("handle_offset_mm", "must be >= 0");

    // Stacked rows share their diagonal edges, and stacking interleaves the
    // strips by half a row height; both the mid-vertex spacing L and the
    // row height L*tan(alpha) must therefore agree across rows.
    for (int i = 1; i < num_rows; ++i) {
        if (crease_length_mm[i] != crease_length_mm[0])
            throw IncompatibleRows("mid-vertex spacing differs between rows " +
                                   std::to_string(i + 1) + " and 1");
        if (alpha_deg[i] != alpha_deg[0])
            throw IncompatibleRows("shared diagonal edges cannot match: alpha differs between rows " +
                                   std::to_string(i + 1) + " and 1");
    }
}

double YoshimuraParams::alpha_rad() const { return alpha_deg.at(0) * kDegToRad; }
double YoshimuraParams::length() const { return crease_length_mm.at(0); }
double YoshimuraParams::row_height() const { return length() * std::tan(alpha_rad()); }
double YoshimuraParams::diagonal_length() const { return 0.5 * length() / std::cos(alpha_rad()); }

int CreasePattern2D::vertex_at(int line, int col) const {
    if (line < 0 || line >= num_lines()) return -1;
    const int m = params.num_units;
    if (col < 0 || col > 2 * m) return -1;
    if (line % 2 != col % 2) return -1;  // even lines hold even columns, odd lines odd
    int base = 0;
    for (int l = 0; l < line; ++l) base += (l % 2 == 0) ? m + 1 : m;
    const int slot = (line % 2 == 0) ? col / 2 : (col - 1) / 2;
    return base + slot;
}

CreasePattern2D::LipFacet CreasePattern2D::lip_facet(int row, bool left) const {
    const int m = params.num_units;
    const int col = left ? 0 : 2 * m;
    const int mid_col = left ? 1 : 2 * m - 1;
    LipFacet lf;
    lf.base = vertex_at(row - 1, col);
    lf.mid = vertex_at(row, mid_col);
    lf.top = vertex_at(row + 1, col);
    lf.facet_index = -1;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Facet& f = facets[i];
        const auto has = [&](int v) { return f.a == v || f.b == v || f.c == v; };
        if (has(lf.base) && has(lf.mid) && has(lf.top)) {
            lf.facet_index = static_cast<int>(i);
            break;
        }
    }
    return lf;
}

namespace {

double signed_area2(const Pt2& a, const Pt2& b, const Pt2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

CreasePattern2D build_pattern(const YoshimuraParams& params) {
    params.validate();

    const int m = params.num_units;
    const int n = params.num_rows;
    const double L = params.length();
    const double half = 0.5 * L;
    const double hh = 0.5 * params.row_height();  // line spacing H/2

    CreasePattern2D pat;
    pat.params = params;

    // Vertices, line by line from the bottom saw-tooth upward.
    for (int line = 0; line <= n + 1; ++line) {
        const double y = line * hh;
        if (line % 2 == 0) {
            for (int j = 0; j <= m; ++j) {
                pat.vertices.push_back({j * L, y});
                pat.vertex_line.push_back(line);
                pat.vertex_col.push_back(2 * j);
            }
        } else {
            for (int k = 0; k < m; ++k) {
                pat.vertices.push_back({k * L + half, y});
                pat.vertex_line.push_back(line);
                pat.vertex_col.push_back(2 * k + 1);
            }
        }
    }

    auto at = [&](int line, int col) {
        int v = pat.vertex_at(line, col);
        if (v < 0) throw Error("internal: missing vertex (" + std::to_string(line) + "," +
                               std::to_string(col) + ")");
        return v;
    };
    auto add_facet = [&](int a, int b, int c) {
        if (signed_area2(pat.vertices[a], pat.vertices[b], pat.vertices[c]) < 0.0) std::swap(b, c);
        pat.facets.push_back({a, b, c});
    };

    // Facets, row by row. Odd rows: half unit, m-1 full diamonds, half unit.
    // Even rows: m full diamonds. Each full diamond = down + up triangle.
    for (int row = 1; row <= n; ++row) {
        if (row % 2 == 1) {
            add_facet(at(row - 1, 0), at(row, 1), at(row + 1, 0));  // left lip
            for (int k = 0; k + 1 < m; ++k) {
                const int c0 = 2 * k + 1, c1 = 2 * k + 3, ca = 2 * k + 2;
                add_facet(at(row, c0), at(row, c1), at(row - 1, ca));
                add_facet(at(row, c0), at(row, c1), at(row + 1, ca));
            }
            add_facet(at(row - 1, 2 * m), at(row, 2 * m - 1), at(row + 1, 2 * m));  // right lip
        } else {
            for (int j = 0; j < m; ++j) {
                const int c0 = 2 * j, c1 = 2 * j + 2, ca = 2 * j + 1;
                add_facet(at(row, c0), at(row, c1), at(row - 1, ca));
                add_facet(at(row, c0), at(row, c1), at(row + 1, ca));
            }
        }
    }

    // Edges: collect from facets, classify by line structure and sharing.
    // For each edge remember which facet traverses it v0 -> v1 (ccw) and
    // which v1 -> v0; that ordering fixes the fold-angle sign convention.
    std::map<std::pair<int, int>, std::pair<int, int>> edge_facets;
    for (std::size_t fi = 0; fi < pat.facets.size(); ++fi) {
        const Facet& f = pat.facets[fi];
        const int vs[3][2] = {{f.a, f.b}, {f.b, f.c}, {f.c, f.a}};
        for (auto& e : vs) {
            const bool forward = e[0] < e[1];
            auto key = std::minmax(e[0], e[1]);
            auto& slot = edge_facets.try_emplace({key.first, key.second}, -1, -1).first->second;
            (forward ? slot.first : slot.second) = static_cast<int>(fi);
        }
    }
    for (const auto& [key, facets] : edge_facets) {
        Crease cr;
        cr.v0 = key.first;
        cr.v1 = key.second;
        const bool interior = facets.first >= 0 && facets.second >= 0;
        const bool same_line = pat.vertex_line[cr.v0] == pat.vertex_line[cr.v1];
        cr.kind = interior ? (same_line ? CreaseKind::Valley : CreaseKind::Mountain)
                           : CreaseKind::Boundary;
        pat.creases.push_back(cr);
        if (facets.first >= 0) {
            pat.crease_facets.emplace_back(facets.first, facets.second);
        } else {
            pat.crease_facets.emplace_back(facets.second, -1);
        }
    }

    return pat;
}

std::vector<double> pattern_edge_lengths(const CreasePattern2D& pattern) {
    std::vector<double> lengths;
    lengths.reserve(pattern.creases.size());
    for (const Crease& c : pattern.creases) {
        const Pt2& a = pattern.vertices[static_cast<std::size_t>(c.v0)];
        const Pt2& b = pattern.vertices[static_cast<std::size_t>(c.v1)];
        lengths.push_back(std::hypot(b.x - a.x, b.y - a.y));
    }
    return lengths;
}

}  // namespace yoshigrip
