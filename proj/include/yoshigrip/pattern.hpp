#ifndef YOSHIGRIP_PATTERN_HPP
#define YOSHIGRIP_PATTERN_HPP

#include <cstddef>
#include <vector>

namespace yoshigrip {

// Design vector for the Yoshimura gripper sheet. Angles live in degrees at
// this boundary; everything downstream works in radians.
struct YoshimuraParams {
    std::vector<double> alpha_deg;         // per-row crease angle, 0 < alpha < 90
    std::vector<double> crease_length_mm;  // per-row horizontal crease length, > 0
    int num_units = 6;                     // diamond units per row, >= 3
    int num_rows = 2;                      // stacked rows, >= 1
    double handle_offset_mm = 10.0;        // rigid handle tab length, >= 0

    // Uniform-design helper: same alpha/L in every row.
    static YoshimuraParams uniform(double alpha_deg, double length_mm, int units, int rows,
                                   double handle_offset_mm);

    // Throws InvalidParams / IncompatibleRows.
    void validate() const;

    double alpha_rad() const;      // common crease angle, radians
    double length() const;         // common crease length L, mm
    double row_height() const;     // H = L * tan(alpha), mm
    double diagonal_length() const;  // (L/2) / cos(alpha), mm
};

struct Pt2 {
    double x = 0.0;
    double y = 0.0;
};

enum class CreaseKind { Mountain, Valley, Boundary };

struct Crease {
    int v0 = 0;
    int v1 = 0;  // v0 < v1
    CreaseKind kind = CreaseKind::Boundary;
};

// Triangle, counter-clockwise in the flat sheet (normal toward the chamber).
struct Facet {
    int a = 0;
    int b = 0;
    int c = 0;
};

// Flat crease pattern. The sheet is a grid of horizontal vertex lines
// spaced H/2 apart; line 0 is the bottom saw-tooth, line i is row i's
// mid-line, line n+1 the top saw-tooth. Odd rows hold m-1 full diamond
// units plus a half unit at each lateral end whose outer edge is the
// straight vertical "lip"; even rows hold m full diamonds. The bottom-left
// lip corner sits at the origin and all coordinates are nonnegative.
struct CreasePattern2D {
    std::vector<Pt2> vertices;
    std::vector<Crease> creases;
    std::vector<Facet> facets;
    YoshimuraParams params;

    // Facets adjoining each crease, indexed like `creases`; second entry is
    // -1 for boundary edges. The first entry is the facet whose ccw
    // traversal runs v0 -> v1.
    std::vector<std::pair<int, int>> crease_facets;

    // Structural coordinates of each vertex: horizontal line index
    // (0..n+1) and half-unit column (0..2*m). Even lines carry vertices at
    // even columns, odd lines at odd columns.
    std::vector<int> vertex_line;
    std::vector<int> vertex_col;

    int num_lines() const { return params.num_rows + 2; }
    // Index of the vertex at (line, col); -1 when absent.
    int vertex_at(int line, int col) const;

    // Lip facet/edge bookkeeping for row `row` (odd rows only), left or
    // right side: {corner/base vertex on line row-1, mid vertex, top vertex
    // on line row+1}.
    struct LipFacet {
        int facet_index;
        int base;  // lip-edge endpoint on line row-1
        int mid;   // in-sheet vertex of the lip triangle
        int top;   // lip-edge endpoint on line row+1
    };
    LipFacet lip_facet(int row, bool left) const;
};

// Generate the crease pattern for validated params.
CreasePattern2D build_pattern(const YoshimuraParams& params);

// Length of every crease and boundary edge, indexed like pattern.creases.
std::vector<double> pattern_edge_lengths(const CreasePattern2D& pattern);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_PATTERN_HPP
