#ifndef YOSHIGRIP_EXPORTERS_HPP
#define YOSHIGRIP_EXPORTERS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "yoshigrip/grasp.hpp"
#include "yoshigrip/kinematics.hpp"
#include "yoshigrip/mechanics.hpp"
#include "yoshigrip/optimize.hpp"
#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

// All exports are deterministic byte streams: fixed 6-decimal printing,
// element order = index order, toolkit version embedded as a comment line
// (a "toolkit_version" field in JSON documents).

// Laser-cut pattern: one SVG in millimetre user units with three layer
// groups named "mountain", "valley" and "cut".
std::string export_svg(const CreasePattern2D& pattern);

// Folded mesh snapshot: Wavefront OBJ, vertices in mm, 1-based faces.
std::string export_obj(const FoldedGeometry& geom);

std::string write_fold_curve_csv(const FoldCurve& curve);
std::string write_force_curve_csv(const ForceCurve& curve);
std::string write_sweep_csv(const SweepResult& result);
std::string write_sweep_argmax_json(const SweepResult& result);
std::string write_grasp_report_json(const GraspReport& report, const ObjectSpec& obj);

// Stage-and-rename write; the destination never holds a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

// Round-trip readers (fidelity checks and OBJ re-import).
struct ParsedObj {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based
};
ParsedObj parse_obj(const std::string& text);

// Segment endpoints per SVG layer group name.
std::map<std::string, std::vector<std::array<double, 4>>> parse_svg_segments(
    const std::string& text);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_EXPORTERS_HPP
