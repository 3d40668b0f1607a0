#ifndef YOSHIGRIP_GEOMETRY_HPP
#define YOSHIGRIP_GEOMETRY_HPP

#include <cmath>

namespace yoshigrip {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Branch selector for two-solution intersections: which side of the anchor
// plane (for trilateration) or of the two candidate points generally.
enum class Branch { Plus, Minus };

// Point at distance r1/r2/r3 from p1/p2/p3. The two solutions are mirror
// images across the plane (p1,p2,p3); `branch` picks the half-space along
// the plane normal (p2-p1) x (p3-p1).
//
// Throws CollinearAnchors when the anchors do not span a plane and
// NoIntersection when the squared out-of-plane offset falls below -1e-12
// (relative to the problem scale). Small negative offsets are clamped to
// zero, which yields the tangent (in-plane) solution.
Vec3 trilaterate(const Vec3& p1, const Vec3& p2, const Vec3& p3,
                 double r1, double r2, double r3, Branch branch);

// A plane in point-normal form; `normal` need not be unit length on input,
// it is normalized on construction.
struct Plane {
    Vec3 normal;
    double offset;  // plane is { p : dot(p, normal) = offset }

    Plane(const Vec3& n, double off) : normal(n.normalized()), offset(off / n.norm()) {}
    static Plane through(const Vec3& point, const Vec3& n) {
        Vec3 u = n.normalized();
        return Plane(u, u.dot(point));
    }
    double signed_distance(const Vec3& p) const { return normal.dot(p) - offset; }
    Vec3 reflect(const Vec3& p) const { return p - 2.0 * signed_distance(p) * normal; }
};

// Point at distance r1 from p1 and r2 from p2, lying on `plane`. The two
// solutions sit on either side of the plane through p1, p2 perpendicular to
// `plane`; `branch` picks the sign along (p2-p1) x plane.normal.
// Same error conventions as trilaterate().
Vec3 sphere_sphere_plane(const Vec3& p1, const Vec3& p2, double r1, double r2,
                         const Plane& plane, Branch branch);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_GEOMETRY_HPP
