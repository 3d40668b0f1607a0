#ifndef YOSHIGRIP_KINEMATICS_HPP
#define YOSHIGRIP_KINEMATICS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "yoshigrip/geometry.hpp"
#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

// One rigid fold state of the sheet. Vertex order matches the pattern.
// Fold angles are signed dihedral fold angles per crease (pi minus the
// dihedral between the adjoining facets), positive in the mountain sense
// with respect to the chamber (+z) side; boundary edges carry 0.
struct FoldedGeometry {
    std::shared_ptr<const CreasePattern2D> pattern;
    std::vector<Vec3> vertices3d;
    std::vector<double> fold_angles;
    double driver_rho = 0.0;
    double fraction = 0.0;  // (theta_deg + 180) / 180
    Vec3 handle_left;
    Vec3 handle_right;
    bool branch_ambiguous = false;
};

struct Measurement {
    double opening_angle_deg = -180.0;  // theta in [-180, 0]
    double handle_separation_mm = 0.0;  // x
    double tip_aperture_mm = 0.0;       // a
};

struct FoldCurveSample {
    double fraction;
    double theta_deg;
    double handle_sep_mm;
    double tip_aperture_mm;
    double transmission_ratio;
};

struct FoldCurve {
    std::vector<FoldCurveSample> samples;
    YoshimuraParams params;
};

// Point at distance r1/r2/r3 from the anchors; see geometry.hpp. Re-exported
// here because sphere intersection is the vertex-placement primitive of the
// fold solver.
using yoshigrip::trilaterate;

// Solve the uniform symmetric fold mode at the given row-1 valley dihedral
// driver_rho in [0, pi]. The first full diamond's down triangle keeps its
// flat coordinates (canonical frame: flat state == pattern coordinates);
// every other vertex is placed sequentially by sphere-sphere-sphere or
// sphere-sphere-plane intersection, branches chosen by continuity with
// `previous` when given, otherwise by the convention that the chamber opens
// toward +z. Throws UnreachableState when the intersections cannot satisfy
// the sheet's edge lengths (within 1e-9 relative).
FoldedGeometry solve_fold(std::shared_ptr<const CreasePattern2D> pattern, double driver_rho,
                          const FoldedGeometry* previous = nullptr);

// Opening angle theta = -(pi - gamma) with gamma the angle between the
// inward normals of the two lip facets, handle separation, tip aperture.
Measurement measure(const FoldedGeometry& geom);

// Driver value of the fully closed state (theta = 0), found by bisection;
// capped at pi when the design cannot close.
double closed_driver(std::shared_ptr<const CreasePattern2D> pattern);

// Fold state whose opening angle is theta = -180 deg * (1 - f), by
// bisection on the driver (f = 0 and f = 1 short-circuit to flat/closed).
FoldedGeometry fold_at_fraction(std::shared_ptr<const CreasePattern2D> pattern, double f);
FoldedGeometry fold_at_fraction(const YoshimuraParams& params, double f);

// As above but reusing a precomputed closed_driver value (pass < 0 to
// compute it); lets curve samplers solve it once per design.
FoldedGeometry fold_at_fraction_hint(std::shared_ptr<const CreasePattern2D> pattern, double f,
                                     double rho_max_hint);

// Fold trajectory sampled uniformly in actuation progress (driver dihedral
// normalized to its closed value, so theta runs from -180 at sample 0 to 0
// at the last sample), with central-difference transmission ratio
// TR = d(tip aperture)/d(handle separation).
FoldCurve fold_curve(const YoshimuraParams& params, int num_samples);

// Plane capping the mouth: through the two lip-edge midpoints, containing
// their connecting segment and the symmetrized lip-edge direction; the
// normal points out of the chamber. Used by the grasp module.
struct MouthPlane {
    Vec3 point;       // left lip-edge midpoint
    Vec3 outward;     // unit normal pointing out of the chamber
    Vec3 lip_mid_l;
    Vec3 lip_mid_r;
};
MouthPlane mouth_plane(const FoldedGeometry& geom);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_KINEMATICS_HPP
