#ifndef YOSHIGRIP_GRASP_HPP
#define YOSHIGRIP_GRASP_HPP

#include <string>
#include <vector>

#include "yoshigrip/kinematics.hpp"
#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

enum class ObjectKind { Sphere, MultiSphere, Buried };

struct ObjectSpec {
    ObjectKind kind = ObjectKind::Sphere;
    std::vector<double> diameters_mm = {40.0};
    double burial_depth_mm = 0.0;  // buried objects: depth below the seabed plane

    void validate() const;
};

enum class GraspType { Wrap, Pinch, Scoop, Multi };

const char* to_string(GraspType t);
const char* to_string(ObjectKind k);

struct ChamberMetrics {
    double volume_mm3 = 0.0;
    double max_inscribed_sphere_mm = 0.0;  // diameter
    double aperture_mm = 0.0;
    Vec3 inscribed_center;
};

// Chamber of one fold state: the region bounded by the facet shell and the
// mouth plane, measured by voxel sampling (`resolution` cells along the
// largest extent). Fractions below 0.2 report zeros (no chamber yet).
// Throws OpenChamber when a chamber is expected but nothing is enclosed.
ChamberMetrics chamber_metrics(const FoldedGeometry& geom, int resolution = 128);

struct GraspReport {
    GraspType grasp_type = GraspType::Wrap;
    bool feasible = false;
    double chamber_volume_mm3 = 0.0;
    double max_inscribed_sphere_mm = 0.0;
    double aperture_mm = 0.0;
    int contact_count = 0;
    double pullout_proxy = 0.0;
    double best_fraction = 0.0;
};

// Geometric feasibility of grasping `obj` with the given design, scanning
// the fold path. Infeasibility is a result, not an error.
GraspReport classify(const YoshimuraParams& params, const ObjectSpec& obj, double mu = 0.5);

// Friction-cone-projected pull-out resistance of a wrapped sphere at the
// tightest feasible fraction: the area-fraction-weighted sum over contact
// samples of max(0, -n.z_hat + mu |n x z_hat|), with z_hat the extraction
// direction (out through the mouth) and n the inward facet normal.
// Throws NoWrap when the sphere cannot be wrapped.
double pullout_proxy(const YoshimuraParams& params, double diameter_mm, double mu,
                     int* contact_count = nullptr, int samples_per_edge = 16);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_GRASP_HPP
