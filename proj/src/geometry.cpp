#include "yoshigrip/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {
constexpr double kNegativeDiscTol = 1e-12;  // relative, on squared offsets
}

Vec3 trilaterate(const Vec3& p1, const Vec3& p2, const Vec3& p3,
                 double r1, double r2, double r3, Branch branch) {
    const Vec3 v21 = p2 - p1;
    const Vec3 v31 = p3 - p1;
    const double d = v21.norm();
    const double scale = std::max({d, v31.norm(), r1, r2, r3});
    if (d <= 0.0 || v21.cross(v31).norm() < 1e-12 * scale * scale) {
        throw CollinearAnchors();
    }

    // Orthonormal frame with p1 at the origin and p2 on the +x axis.
    const Vec3 ex = v21 / d;
    const double i = ex.dot(v31);
    const Vec3 ey = (v31 - i * ex).normalized();
    const Vec3 ez = ex.cross(ey);
    const double j = ey.dot(v31);

    const double x = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    const double y = (r1 * r1 - r3 * r3 + i * i + j * j) / (2.0 * j) - (i / j) * x;
    double z2 = r1 * r1 - x * x - y * y;
    if (z2 < -kNegativeDiscTol * scale * scale) {
        throw NoIntersection("spheres do not meet (offset^2 = " + std::to_string(z2) + ")");
    }
    const double z = std::sqrt(std::max(z2, 0.0));

    const double s = (branch == Branch::Plus) ? 1.0 : -1.0;
    return p1 + x * ex + y * ey + (s * z) * ez;
}

Vec3 sphere_sphere_plane(const Vec3& p1, const Vec3& p2, double r1, double r2,
                         const Plane& plane, Branch branch) {
    const Vec3 v21 = p2 - p1;
    const double d = v21.norm();
    const double scale = std::max({d, r1, r2, 1e-30});

    // Difference of the two sphere equations is itself a plane.
    const Vec3 na = v21 / d;
    const double ca = (r1 * r1 - r2 * r2 + p2.norm2() - p1.norm2()) / (2.0 * d);
    const Vec3& nb = plane.normal;
    const double cb = plane.offset;

    const double ab = na.dot(nb);
    const double det = 1.0 - ab * ab;
    if (det < 1e-14) {
        throw NoIntersection("sphere axis perpendicular to the target plane");
    }

    // Point on the line common to both planes, plus its direction.
    const double alpha = (ca - cb * ab) / det;
    const double beta = (cb - ca * ab) / det;
    const Vec3 x0 = alpha * na + beta * nb;
    const Vec3 u = na.cross(nb);

    const Vec3 w = x0 - p1;
    const double uu = u.norm2();
    const double uw = u.dot(w);
    double disc = uw * uw - uu * (w.norm2() - r1 * r1);
    if (disc < -kNegativeDiscTol * scale * scale * scale * scale) {
        throw NoIntersection("circle misses the plane (disc = " + std::to_string(disc) + ")");
    }
    disc = std::max(disc, 0.0);

    const double s = (branch == Branch::Plus) ? 1.0 : -1.0;
    const double t = (-uw + s * std::sqrt(disc)) / uu;
    return x0 + t * u;
}

}  // namespace yoshigrip
