#include "yoshigrip/grasp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {

constexpr double kChamberMinFraction = 0.2;
constexpr double kNearClosedFraction = 0.95;  // pinch is assessed here
constexpr double kMultiPackingFactor = 0.7;   // declared engineering constant
constexpr double kContactShellTol = 0.05;     // contact band, fraction of radius
constexpr int kScanResolution = 64;           // voxel resolution for fold-path scans

double sphere_volume(double diameter) {
    return std::numbers::pi / 6.0 * diameter * diameter * diameter;
}

// Moller-Trumbore, counting crossings of ray origin + t*dir, t > eps.
bool ray_hits_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                       const Vec3& c) {
    const Vec3 e1 = b - a;
    const Vec3 e2 = c - a;
    const Vec3 p = dir.cross(e2);
    const double det = e1.dot(p);
    if (std::abs(det) < 1e-14) return false;
    const double inv = 1.0 / det;
    const Vec3 t = origin - a;
    const double u = t.dot(p) * inv;
    if (u < 0.0 || u > 1.0) return false;
    const Vec3 q = t.cross(e1);
    const double v = dir.dot(q) * inv;
    if (v < 0.0 || u + v > 1.0) return false;
    const double d = e2.dot(q) * inv;
    return d > 1e-9;
}

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Ericson, Real-Time Collision Detection, closest point on triangle.
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return dist(p, a);
    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return dist(p, b);
    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return dist(p, a + v * ab);
    }
    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return dist(p, c);
    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return dist(p, a + w * ac);
    }
    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return dist(p, b + w * (c - b));
    }
    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return dist(p, a + v * ab + w * ac);
}

struct Shell {
    std::vector<Vec3> a, b, c;   // triangle vertices
    std::vector<Vec3> inward;    // unit normals toward the chamber
    std::vector<double> area;

    explicit Shell(const FoldedGeometry& g) {
        const CreasePattern2D& pat = *g.pattern;
        for (const Facet& f : pat.facets) {
            a.push_back(g.vertices3d[static_cast<std::size_t>(f.a)]);
            b.push_back(g.vertices3d[static_cast<std::size_t>(f.b)]);
            c.push_back(g.vertices3d[static_cast<std::size_t>(f.c)]);
            const Vec3 n = (b.back() - a.back()).cross(c.back() - a.back());
            area.push_back(0.5 * n.norm());
            inward.push_back(n.normalized());
        }
    }
    std::size_t size() const { return a.size(); }
    int crossings(const Vec3& origin, const Vec3& dir) const {
        int k = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (ray_hits_triangle(origin, dir, a[i], b[i], c[i])) ++k;
        return k;
    }
    double distance(const Vec3& p) const {
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < size(); ++i)
            d = std::min(d, point_triangle_distance(p, a[i], b[i], c[i]));
        return d;
    }
};

}  // namespace

void ObjectSpec::validate() const {
    if (diameters_mm.empty()) throw InvalidParams("diameters_mm", "at least one diameter required");
    for (double d : diameters_mm)
        if (!(d > 0.0)) throw InvalidParams("diameters_mm", "all diameters must be > 0");
    if (!(burial_depth_mm >= 0.0)) throw InvalidParams("burial_depth_mm", "must be >= 0");
    if (kind == ObjectKind::MultiSphere && diameters_mm.size() < 2)
        throw InvalidParams("diameters_mm", "multi_sphere needs >= 2 diameters");
    if (kind != ObjectKind::MultiSphere && diameters_mm.size() != 1)
        throw InvalidParams("diameters_mm", "sphere/buried objects take exactly one diameter");
}

const char* to_string(GraspType t) {
    switch (t) {
        case GraspType::Wrap: return "wrap";
        case GraspType::Pinch: return "pinch";
        case GraspType::Scoop: return "scoop";
        case GraspType::Multi: return "multi";
    }
    return "?";
}

const char* to_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::Sphere: return "sphere";
        case ObjectKind::MultiSphere: return "multi_sphere";
        case ObjectKind::Buried: return "buried";
    }
    return "?";
}

namespace {

// Chamber analysis shared by the public metrics and the pull-out nesting:
// tracks both the bounded-region ball (clearance to shell and mouth plane)
// and the wall-only clearance used to seat a wrapped object.
struct ChamberAnalysis {
    ChamberMetrics metrics;
    Vec3 wall_center;
    double wall_clearance = 0.0;  // radius, facet distance only
};

ChamberAnalysis analyze_chamber(const FoldedGeometry& geom, int resolution) {
    ChamberAnalysis out_a;
    ChamberMetrics& out = out_a.metrics;
    const MouthPlane mp = mouth_plane(geom);
    out.aperture_mm = dist(mp.lip_mid_l, mp.lip_mid_r);
    if (geom.fraction < kChamberMinFraction) return out_a;  // no chamber yet
    if (resolution < 8) throw InvalidParams("resolution", "must be >= 8");

    const Shell shell(geom);
    Vec3 lo(1e300, 1e300, 1e300), hi(-1e300, -1e300, -1e300);
    for (const Vec3& v : geom.vertices3d) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    const double max_dim = std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
    const double s = max_dim / resolution;
    const int nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / s)));
    const int ny = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / s)));
    const int nz = std::max(1, static_cast<int>(std::ceil((hi.z - lo.z) / s)));

    // A voxel centre is in the chamber when it lies on the inner side of
    // the mouth plane, sees open water toward the mouth, and has shell
    // behind it away from the mouth.
    std::vector<Vec3> inside;
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            for (int iz = 0; iz < nz; ++iz) {
                const Vec3 p = lo + Vec3((ix + 0.5) * s, (iy + 0.5) * s, (iz + 0.5) * s);
                if (mp.outward.dot(p - mp.point) >= 0.0) continue;
                if (shell.crossings(p, mp.outward) != 0) continue;
                if (shell.crossings(p, -mp.outward) == 0) continue;
                inside.push_back(p);
            }
        }
    }
    if (inside.empty()) {
        throw OpenChamber("no enclosed region at fraction " + std::to_string(geom.fraction) +
                          "; mouth centre (" + std::to_string(0.5 * (mp.lip_mid_l.x + mp.lip_mid_r.x)) +
                          ", " + std::to_string(0.5 * (mp.lip_mid_l.y + mp.lip_mid_r.y)) + ", " +
                          std::to_string(0.5 * (mp.lip_mid_l.z + mp.lip_mid_r.z)) + ")");
    }
    out.volume_mm3 = static_cast<double>(inside.size()) * s * s * s;

    // Largest ball inside the bounded region: clearance to the shell and to
    // the mouth plane (the chamber's other boundary). The wall-only
    // clearance seats wrapped objects for the pull-out analysis.
    double best = -1.0;
    for (const Vec3& p : inside) {
        const double wall = shell.distance(p);
        const double d = std::min(wall, -mp.outward.dot(p - mp.point));
        if (d > best) {
            best = d;
            out.inscribed_center = p;
        }
        if (wall > out_a.wall_clearance) {
            out_a.wall_clearance = wall;
            out_a.wall_center = p;
        }
    }
    out.max_inscribed_sphere_mm = 2.0 * best;
    return out_a;
}

}  // namespace

ChamberMetrics chamber_metrics(const FoldedGeometry& geom, int resolution) {
    return analyze_chamber(geom, resolution).metrics;
}

namespace {

struct PathScan {
    std::vector<double> fractions;
    std::vector<ChamberMetrics> metrics;
    std::vector<double> wall_clearances;  // facet-only, radius
};

PathScan scan_fold_path(const YoshimuraParams& params, int resolution) {
    auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(params));
    const double rho_max = closed_driver(pattern);
    PathScan scan;
    for (int i = 0; i <= 16; ++i) {
        const double f = kChamberMinFraction + (1.0 - kChamberMinFraction) * i / 16.0;
        scan.fractions.push_back(f);
        try {
            const ChamberAnalysis ca =
                analyze_chamber(fold_at_fraction_hint(pattern, f, rho_max), resolution);
            scan.metrics.push_back(ca.metrics);
            scan.wall_clearances.push_back(ca.wall_clearance);
        } catch (const OpenChamber&) {
            scan.metrics.push_back(ChamberMetrics{});  // nothing enclosed at this state
            scan.wall_clearances.push_back(0.0);
        }
    }
    return scan;
}


// Index of the tightest fraction at which a sphere of the given diameter
// can be wrapped: the chamber deepens as folding progresses, so the
// snuggest hold is the first fraction whose inscribed sphere admits the
// object, provided it passed the mouth at some earlier fraction. -1 when
// infeasible.
int tightest_wrap_index(const PathScan& scan, double diameter) {
    for (std::size_t i = 0; i < scan.fractions.size(); ++i) {
        if (scan.metrics[i].max_inscribed_sphere_mm < diameter) continue;
        bool enters = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (scan.metrics[j].aperture_mm >= diameter) enters = true;
        }
        if (enters) return static_cast<int>(i);
    }
    return -1;
}

double pullout_resistance(const FoldedGeometry& geom, const Vec3& center, double diameter,
                          double mu, int samples_per_edge, int* contact_count) {
    const Shell shell(geom);
    const Vec3 zhat = mouth_plane(geom).outward;
    const double radius = 0.5 * diameter;
    double resist = 0.0;
    double total_area = 0.0;
    int contacts = 0;
    for (std::size_t t = 0; t < shell.size(); ++t) {
        total_area += shell.area[t];
        const int q = samples_per_edge;
        const int pts = (q + 1) * (q + 2) / 2;
        const double w = shell.area[t] / pts;
        for (int i = 0; i <= q; ++i) {
            for (int j = 0; j <= q - i; ++j) {
                const double u = (i + 1.0 / 3.0) / (q + 1);
                const double v = (j + 1.0 / 3.0) / (q + 1);
                const Vec3 p = shell.a[t] + u * (shell.b[t] - shell.a[t]) +
                               v * (shell.c[t] - shell.a[t]);
                if (std::abs(dist(p, center) - radius) > kContactShellTol * radius) continue;
                ++contacts;
                const Vec3& n = shell.inward[t];
                const double normal_opposition = -n.dot(zhat);
                const double tangential = n.cross(zhat).norm();
                resist += w * std::max(0.0, normal_opposition + mu * tangential);
            }
        }
    }
    if (contact_count) *contact_count = contacts;
    return resist / total_area;
}

}  // namespace

GraspReport classify(const YoshimuraParams& params, const ObjectSpec& obj, double mu) {
    params.validate();
    obj.validate();
    const PathScan scan = scan_fold_path(params, kScanResolution);

    double vol_max = 0.0, insc_max = 0.0;
    std::size_t vol_max_i = 0;
    for (std::size_t i = 0; i < scan.metrics.size(); ++i) {
        insc_max = std::max(insc_max, scan.metrics[i].max_inscribed_sphere_mm);
        if (scan.metrics[i].volume_mm3 > vol_max) {
            vol_max = scan.metrics[i].volume_mm3;
            vol_max_i = i;
        }
    }

    GraspReport rep;
    const auto fill_metrics = [&](std::size_t i) {
        rep.best_fraction = scan.fractions[i];
        rep.chamber_volume_mm3 = scan.metrics[i].volume_mm3;
        rep.max_inscribed_sphere_mm = scan.metrics[i].max_inscribed_sphere_mm;
        rep.aperture_mm = scan.metrics[i].aperture_mm;
    };

    switch (obj.kind) {
        case ObjectKind::Sphere: {
            const double d = obj.diameters_mm[0];
            const int wrap_i = tightest_wrap_index(scan, d);
            if (wrap_i >= 0) {
                rep.grasp_type = GraspType::Wrap;
                rep.feasible = true;
                fill_metrics(static_cast<std::size_t>(wrap_i));
                rep.pullout_proxy = pullout_proxy(params, d, mu, &rep.contact_count);
                return rep;
            }
            // Fall back to a lip pinch near closure.
            std::size_t near_i = 0;
            for (std::size_t i = 0; i < scan.fractions.size(); ++i) {
                if (std::abs(scan.fractions[i] - kNearClosedFraction) <
                    std::abs(scan.fractions[near_i] - kNearClosedFraction)) {
                    near_i = i;
                }
            }
            rep.grasp_type = GraspType::Pinch;
            rep.feasible = d <= scan.metrics[near_i].aperture_mm;
            fill_metrics(near_i);
            return rep;
        }
        case ObjectKind::Buried: {
            const double d = obj.diameters_mm[0];
            rep.grasp_type = GraspType::Scoop;
            const double lip_len = params.row_height() * ((params.num_rows + 1) / 2);
            rep.feasible = vol_max >= sphere_volume(d) && obj.burial_depth_mm <= lip_len;
            fill_metrics(vol_max_i);
            return rep;
        }
        case ObjectKind::MultiSphere: {
            double total = 0.0;
            for (double d : obj.diameters_mm) total += sphere_volume(d);
            rep.grasp_type = GraspType::Multi;
            rep.feasible = total <= kMultiPackingFactor * vol_max;
            fill_metrics(vol_max_i);
            return rep;
        }
    }
    return rep;
}

double pullout_proxy(const YoshimuraParams& params, double diameter_mm, double mu,
                     int* contact_count, int samples_per_edge) {
    params.validate();
    if (!(diameter_mm > 0.0)) throw InvalidParams("diameter_mm", "must be > 0");
    if (!(mu >= 0.0)) throw InvalidParams("mu", "must be >= 0");

    const PathScan scan = scan_fold_path(params, kScanResolution);
    if (tightest_wrap_index(scan, diameter_mm) < 0)
        throw NoWrap("sphere of diameter " + std::to_string(diameter_mm) +
                     " mm cannot be wrapped by this design");

    auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(params));
    const double rho_max = closed_driver(pattern);

    // The tightest hold is the wall-snug state: the first fraction whose
    // wall clearance just admits the sphere, the configuration the pull-out
    // rig measures (ball seated against the shell, mouth still open around
    // the extraction string). Below the scan floor the object is smaller
    // than any pocket on the path and the hold is loose.
    int snug_i = -1;
    for (std::size_t i = 0; i < scan.fractions.size(); ++i) {
        if (2.0 * scan.wall_clearances[i] >= diameter_mm) {
            snug_i = static_cast<int>(i);
            break;
        }
    }
    if (snug_i < 0) snug_i = static_cast<int>(scan.fractions.size()) - 1;
    double f_hi = scan.fractions[static_cast<std::size_t>(snug_i)];
    double f_lo = snug_i > 0 ? scan.fractions[static_cast<std::size_t>(snug_i - 1)] : f_hi;
    for (int it = 0; it < 12 && f_hi - f_lo > 1e-4; ++it) {
        const double mid = 0.5 * (f_lo + f_hi);
        double wall = 0.0;
        try {
            wall = analyze_chamber(fold_at_fraction_hint(pattern, mid, rho_max), kScanResolution)
                       .wall_clearance;
        } catch (const OpenChamber&) {
        }
        if (2.0 * wall >= diameter_mm) f_hi = mid; else f_lo = mid;
    }

    const FoldedGeometry g = fold_at_fraction_hint(pattern, f_hi, rho_max);
    // Recompute the seat at full resolution for the contact test.
    const ChamberAnalysis ca = analyze_chamber(g, 128);
    return pullout_resistance(g, ca.wall_center, diameter_mm, mu, samples_per_edge,
                              contact_count);
}

}  // namespace yoshigrip
