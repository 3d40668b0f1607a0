#include "yoshigrip/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIsometryRelTol = 1e-9;

// Scalars of the uniform symmetric fold mode at valley dihedral rho.
// Folding tilts each apex-to-crease segment (length H/2) by rho/2 out of
// its vertex-ring plane, so consecutive vertex rings sit h apart along a
// common axis and the in-plane apex offset is u = (H/2) sin(rho/2).
// Matching u against the ring chord geometry closes the unit turn phi via
// tan(phi/4) = tan(alpha) sin(rho/2).
struct ModeScalars {
    double h;    // ring spacing, (H/2) cos(rho/2)
    double dX;   // diamond cross-apex distance, H cos(rho/2)
    double G;    // second-neighbour chord along a ring, 2 L cos(phi/2)
    Vec3 axis;   // ring-plane normal in the canonical frame
};

ModeScalars mode_scalars(const YoshimuraParams& p, double rho) {
    const double H = p.row_height();
    const double L = p.length();
    ModeScalars s;
    s.h = 0.5 * H * std::cos(0.5 * rho);
    s.dX = H * std::cos(0.5 * rho);
    const double phi = 4.0 * std::atan(std::tan(p.alpha_rad()) * std::sin(0.5 * rho));
    s.G = 2.0 * L * std::cos(0.5 * phi);
    s.axis = Vec3(0.0, std::cos(0.5 * rho), std::sin(0.5 * rho));
    return s;
}

double fold_angle_at(const CreasePattern2D& pat, const std::vector<Vec3>& pos, int ci) {
    const Crease& c = pat.creases[static_cast<std::size_t>(ci)];
    const auto [f1, f2] = pat.crease_facets[static_cast<std::size_t>(ci)];
    if (f2 < 0) return 0.0;
    const Vec3 e = (pos[c.v1] - pos[c.v0]).normalized();
    auto normal = [&](int fi) {
        const Facet& f = pat.facets[static_cast<std::size_t>(fi)];
        return (pos[f.b] - pos[f.a]).cross(pos[f.c] - pos[f.a]).normalized();
    };
    const Vec3 n1 = normal(f1);
    const Vec3 n2 = normal(f2);
    const double s = n1.cross(n2).dot(e);
    const double ct = std::clamp(n1.dot(n2), -1.0, 1.0);
    return std::atan2(s, ct);  // positive = mountain w.r.t. the chamber side
}

class FoldSolver {
public:
    FoldSolver(std::shared_ptr<const CreasePattern2D> pattern, double rho,
               const FoldedGeometry* previous)
        : pat_ptr(std::move(pattern)),
          pat(*pat_ptr),
          p(pat.params),
          rho(rho),
          prev(previous),
          ms(mode_scalars(p, rho)),
          L(p.length()),
          H(p.row_height()),
          D(p.diagonal_length()),
          m(p.num_units),
          n(p.num_rows),
          pos(pat.vertices.size()),
          placed(pat.vertices.size(), false) {
        for (std::size_t ci = 0; ci < pat.creases.size(); ++ci) {
            crease_index[{pat.creases[ci].v0, pat.creases[ci].v1}] = static_cast<int>(ci);
        }
    }

    FoldedGeometry run() {
        if (rho == 0.0) {
            for (std::size_t i = 0; i < pat.vertices.size(); ++i) {
                pos[i] = {pat.vertices[i].x, pat.vertices[i].y, 0.0};
            }
        } else {
            sweep();
        }
        validate();
        return finish();
    }

private:
    std::shared_ptr<const CreasePattern2D> pat_ptr;
    const CreasePattern2D& pat;
    const YoshimuraParams& p;
    double rho;
    const FoldedGeometry* prev;
    ModeScalars ms;
    double L, H, D;
    int m, n;
    std::vector<Vec3> pos;
    std::vector<char> placed;
    std::map<std::pair<int, int>, int> crease_index;
    bool ambiguous = false;

    int vid(int line, int col) const {
        const int v = pat.vertex_at(line, col);
        if (v < 0) throw Error("internal: no vertex at line " + std::to_string(line) +
                               " col " + std::to_string(col));
        return v;
    }
    const Vec3& at(int line, int col) const { return pos[static_cast<std::size_t>(vid(line, col))]; }
    void set(int line, int col, const Vec3& v) {
        const int i = vid(line, col);
        pos[static_cast<std::size_t>(i)] = v;
        placed[static_cast<std::size_t>(i)] = true;
    }
    Plane ring(int line) const { return Plane(ms.axis, line * ms.h); }

    // Candidate selection by the caller's structural score (smaller =
    // better). When the scores tie the state is at a genuine bifurcation
    // (the flat sheet): continuity with `previous` resolves it when
    // available, otherwise the first candidate is taken and distinct
    // candidates raise the ambiguity flag.
    Vec3 choose(int line, int col, const Vec3& a, const Vec3& b, double score_a, double score_b) {
        const bool tied =
            std::abs(score_a - score_b) <= 1e-9 * (std::abs(score_a) + std::abs(score_b));
        if (!tied) return score_a <= score_b ? a : b;
        if (prev) {
            const Vec3& ref = prev->vertices3d[static_cast<std::size_t>(vid(line, col))];
            return dist(a, ref) <= dist(b, ref) ? a : b;
        }
        if (dist(a, b) > 1e-9 * L) ambiguous = true;
        return score_a <= score_b ? a : b;
    }

    // Place the remaining apex of a diamond: spheres to both crease ends
    // (diagonal length) and the cross-apex sphere to the opposite apex;
    // branch picked so the crease folds in the valley sense.
    void place_cross(int line, int col, int mid_line, int cl, int cr, int opp_line) {
        const Vec3& e0 = at(mid_line, cl);
        const Vec3& e1 = at(mid_line, cr);
        const Vec3& q = at(opp_line, col);
        Vec3 a, b;
        try {
            a = trilaterate(e0, e1, q, D, D, ms.dX, Branch::Plus);
            b = trilaterate(e0, e1, q, D, D, ms.dX, Branch::Minus);
        } catch (const NoIntersection& e) {
            throw UnreachableState(e.what());
        }
        const int ci = crease_index.at(std::minmax(vid(mid_line, cl), vid(mid_line, cr)));
        const int v = vid(line, col);
        auto valley_score = [&](const Vec3& c) {
            pos[static_cast<std::size_t>(v)] = c;
            return std::abs(fold_angle_at(pat, pos, ci) + rho);  // want fold == -rho
        };
        const double sa = valley_score(a);
        const double sb = valley_score(b);
        set(line, col, choose(line, col, a, b, sa, sb));
    }

    // Place the free vertex of a lip triangle. The other two lip vertices
    // (vm: the in-sheet vertex, vb: the far lip-edge endpoint) are already
    // pinned; the flap is posed so the lip facet plane stays parallel to
    // the fold axis (the driven-ear convention: the opening angle then
    // measures the pure turn of the mouth and reaches zero at closure).
    void place_lip_flap(int line, int col, int mid_line, int mid_col, int base_line, int base_col,
                        int ref_line, int ref_col) {
        const Vec3& vm = at(mid_line, mid_col);
        const Vec3& vb = at(base_line, base_col);
        const Plane facet_plane = Plane::through(vm, (vb - vm).cross(ms.axis));
        Vec3 a, b;
        try {
            a = sphere_sphere_plane(vm, vb, D, H, facet_plane, Branch::Plus);
            b = sphere_sphere_plane(vm, vb, D, H, facet_plane, Branch::Minus);
        } catch (const NoIntersection& e) {
            throw UnreachableState(e.what());
        }
        const Vec3& ref = at(ref_line, ref_col);
        set(line, col, choose(line, col, a, b, -dist(a, ref), -dist(b, ref)));
    }

    // Place a vertex on its ring plane from two spheres; branch picked by
    // comparing the distance to a reference vertex with its expected value
    // (or maximizing it when expected < 0).
    void place_ring(int line, int col, int l1, int c1, double r1, int l2, int c2, double r2,
                    int lref, int cref, double expected) {
        const Vec3& p1 = at(l1, c1);
        const Vec3& p2 = at(l2, c2);
        Vec3 a, b;
        try {
            a = sphere_sphere_plane(p1, p2, r1, r2, ring(line), Branch::Plus);
            b = sphere_sphere_plane(p1, p2, r1, r2, ring(line), Branch::Minus);
        } catch (const NoIntersection& e) {
            throw UnreachableState(e.what());
        }
        const Vec3& ref = at(lref, cref);
        double sa, sb;
        if (expected >= 0.0) {
            sa = std::abs(dist(a, ref) - expected);
            sb = std::abs(dist(b, ref) - expected);
        } else {
            sa = -dist(a, ref);
            sb = -dist(b, ref);
        }
        set(line, col, choose(line, col, a, b, sa, sb));
    }

    // Ring placement selected by winding: continuing a ring polyline
    // prev2 -> prev1 -> v, the chamber-side curl winds about +axis, so the
    // admissible candidate makes the turn triple product positive when
    // traversed toward increasing columns (`forward`), negative otherwise.
    // (Both chord branches are otherwise legitimate mirror modes.)
    void place_ring_turn(int line, int col, int l1, int c1, double r1, int l2, int c2, double r2,
                         int lp2, int cp2, int lp1, int cp1, bool forward) {
        const Vec3& p1 = at(l1, c1);
        const Vec3& p2 = at(l2, c2);
        Vec3 a, b;
        try {
            a = sphere_sphere_plane(p1, p2, r1, r2, ring(line), Branch::Plus);
            b = sphere_sphere_plane(p1, p2, r1, r2, ring(line), Branch::Minus);
        } catch (const NoIntersection& e) {
            throw UnreachableState(e.what());
        }
        const Vec3 seg = at(lp1, cp1) - at(lp2, cp2);
        const double sign = forward ? -1.0 : 1.0;
        const auto score = [&](const Vec3& cand) {
            return sign * seg.cross(cand - at(lp1, cp1)).dot(ms.axis);
        };
        set(line, col, choose(line, col, a, b, score(a), score(b)));
    }

    void sweep() {
        const double half = 0.5 * L;
        const double hh = 0.5 * H;

        // Canonical frame: the first full diamond's down triangle keeps its
        // flat (pattern) coordinates.
        set(1, 1, {half, hh, 0.0});
        set(1, 3, {half + L, hh, 0.0});
        set(0, 2, {L, 0.0, 0.0});
        place_cross(2, 2, 1, 1, 3, 0);

        // Remaining row-1 mid vertices march along ring 1. The second
        // neighbour chord G encodes the uniform turn per unit; the winding
        // test keeps the arc curling around the chamber consistently.
        for (int k = 2; k < m; ++k) {
            const int col = 2 * k + 1;
            place_ring_turn(1, col, 1, col - 2, L, 1, col - 4, ms.G,
                            1, col - 4, 1, col - 2, true);
            // Line-2 vertex above the junction (row-2 mid, or for n = 1 the
            // top saw-tooth posed on the ring).
            place_ring(2, 2 * k, 1, col - 2, D, 1, col, D, 2, 2 * k - 2, L);
        }

        // Lateral ends of line 2 (row-2 end mids, or the n = 1 lip tops
        // posed on the ring).
        place_ring_turn(2, 0, 2, 2, L, 1, 1, D, 2, 4, 2, 2, false);
        place_ring_turn(2, 2 * m, 2, 2 * m - 2, L, 1, 2 * m - 1, D,
                        2, 2 * m - 4, 2, 2 * m - 2, true);

        // Rows 3..n, line by line.
        for (int i = 3; i <= n; ++i) {
            if (i % 2 == 1) {  // odd row: m mids at odd columns
                place_cross(i, 1, i - 1, 0, 2, i - 2);
                for (int k = 1; k < m; ++k) {
                    place_ring(i, 2 * k + 1, i - 1, 2 * k, D, i - 1, 2 * k + 2, D,
                               i, 2 * k - 1, L);
                }
            } else {  // even row: m+1 mids at even columns
                place_cross(i, 2, i - 1, 1, 3, i - 2);
                for (int j = 2; j < m; ++j) {
                    place_ring(i, 2 * j, i - 1, 2 * j - 1, D, i - 1, 2 * j + 1, D,
                               i, 2 * j - 2, L);
                }
                place_ring_turn(i, 0, i, 2, L, i - 1, 1, D, i, 4, i, 2, false);
                place_ring_turn(i, 2 * m, i, 2 * m - 2, L, i - 1, 2 * m - 1, D,
                                i, 2 * m - 4, i, 2 * m - 2, true);
            }
        }

        // Top saw-tooth line n+1 (line 2 already done when n == 1).
        if (n >= 2) {
            const int t = n + 1;
            if (t % 2 == 1) {  // apexes at odd columns
                for (int k = 0; k < m; ++k) {
                    place_cross(t, 2 * k + 1, n, 2 * k, 2 * k + 2, n - 1);
                }
            } else {  // apexes at even columns plus the two lip tops
                for (int k = 1; k < m; ++k) {
                    place_cross(t, 2 * k, n, 2 * k - 1, 2 * k + 1, n - 1);
                }
                place_lip_flap(t, 0, n, 1, n - 1, 0, n, 3);
                place_lip_flap(t, 2 * m, n, 2 * m - 1, n - 1, 2 * m, n, 2 * m - 3);
            }
        }

        // Bottom saw-tooth apexes and lip corners. The corner branch
        // reference must sit off the lip diagonal (vertices on it are
        // equidistant from both flap candidates), hence column 4.
        for (int k = 2; k < m; ++k) {
            place_cross(0, 2 * k, 1, 2 * k - 1, 2 * k + 1, 2);
        }
        place_lip_flap(0, 0, 1, 1, 2, 0, 0, 4);
        place_lip_flap(0, 2 * m, 1, 2 * m - 1, 2, 2 * m, 0, 2 * m - 4);
    }

    void validate() const {
        const auto ref_lengths = pattern_edge_lengths(pat);
        for (std::size_t ci = 0; ci < pat.creases.size(); ++ci) {
            const Crease& c = pat.creases[ci];
            const double got = dist(pos[static_cast<std::size_t>(c.v0)],
                                    pos[static_cast<std::size_t>(c.v1)]);
            const double want = ref_lengths[ci];
            if (std::abs(got - want) > kIsometryRelTol * want) {
                throw UnreachableState(
                    "edge " + std::to_string(c.v0) + "-" + std::to_string(c.v1) +
                    " length " + std::to_string(got) + " vs flat " + std::to_string(want) +
                    " (driver " + std::to_string(rho) + ")");
            }
        }
    }

    FoldedGeometry finish() const {
        FoldedGeometry g;
        g.pattern = pat_ptr;
        g.vertices3d = pos;
        g.driver_rho = rho;
        g.branch_ambiguous = ambiguous;
        g.fold_angles.resize(pat.creases.size(), 0.0);
        for (std::size_t ci = 0; ci < pat.creases.size(); ++ci) {
            if (pat.creases[ci].kind != CreaseKind::Boundary) {
                g.fold_angles[ci] = fold_angle_at(pat, pos, static_cast<int>(ci));
            }
        }
        auto handle = [&](bool left) {
            const auto lip = pat.lip_facet(1, left);
            const int top_line = (n % 2 == 0) ? n : n + 1;
            const Vec3& bottom = pos[static_cast<std::size_t>(vid(0, left ? 0 : 2 * m))];
            const Vec3& top =
                pos[static_cast<std::size_t>(vid(top_line, left ? 0 : 2 * m))];
            const Vec3 mid = 0.5 * (bottom + top);
            const Vec3 e = (top - bottom).normalized();
            const Vec3 toward = mid - pos[static_cast<std::size_t>(lip.mid)];
            const Vec3 out = (toward - toward.dot(e) * e).normalized();
            return mid + p.handle_offset_mm * out;
        };
        g.handle_left = handle(true);
        g.handle_right = handle(false);
        Measurement meas = measure_with(pat, g);
        g.fraction = (meas.opening_angle_deg + 180.0) / 180.0;
        return g;
    }

public:
    // Opening angle from the signed, unwrapped turn between the lip
    // normals about the fold axis. Agrees with the acos form of measure()
    // everywhere below closure but keeps its sign at the theta = 0 touch
    // point, which makes the closed-state root search well posed.
    static double signed_opening_deg(const CreasePattern2D& pat, const FoldedGeometry& g,
                                     double rho) {
        auto facet_normal = [&](int fi) {
            const Facet& f = pat.facets[static_cast<std::size_t>(fi)];
            return (g.vertices3d[f.b] - g.vertices3d[f.a])
                .cross(g.vertices3d[f.c] - g.vertices3d[f.a])
                .normalized();
        };
        const Vec3 nl = facet_normal(pat.lip_facet(1, true).facet_index);
        const Vec3 nr = facet_normal(pat.lip_facet(1, false).facet_index);
        const Vec3 axis(0.0, std::cos(0.5 * rho), std::sin(0.5 * rho));
        double turn = std::atan2(nl.cross(nr).dot(axis), std::clamp(nl.dot(nr), -1.0, 1.0));
        if (turn < 0.0) turn += 2.0 * kPi;
        return (turn - kPi) * 180.0 / kPi;
    }

    static Measurement measure_with(const CreasePattern2D& pat, const FoldedGeometry& g) {
        const int n = pat.params.num_rows;
        const int m = pat.params.num_units;
        auto facet_normal = [&](int fi) {
            const Facet& f = pat.facets[static_cast<std::size_t>(fi)];
            return (g.vertices3d[f.b] - g.vertices3d[f.a])
                .cross(g.vertices3d[f.c] - g.vertices3d[f.a])
                .normalized();
        };
        const auto lipL = pat.lip_facet(1, true);
        const auto lipR = pat.lip_facet(1, false);
        const Vec3 nl = facet_normal(lipL.facet_index);
        const Vec3 nr = facet_normal(lipR.facet_index);
        const double gamma = std::acos(std::clamp(nl.dot(nr), -1.0, 1.0));

        const int top_line = (n % 2 == 0) ? n : n + 1;
        auto lip_mid = [&](bool left) {
            const int col = left ? 0 : 2 * m;
            const Vec3& bottom = g.vertices3d[static_cast<std::size_t>(pat.vertex_at(0, col))];
            const Vec3& top =
                g.vertices3d[static_cast<std::size_t>(pat.vertex_at(top_line, col))];
            return 0.5 * (bottom + top);
        };

        Measurement out;
        out.opening_angle_deg = (gamma - kPi) * 180.0 / kPi;
        out.handle_separation_mm = dist(g.handle_left, g.handle_right);
        out.tip_aperture_mm = dist(lip_mid(true), lip_mid(false));
        return out;
    }
};

}  // namespace

FoldedGeometry solve_fold(std::shared_ptr<const CreasePattern2D> pattern, double driver_rho,
                          const FoldedGeometry* previous) {
    if (!pattern) throw InvalidParams("pattern", "null pattern");
    if (!(driver_rho >= 0.0 && driver_rho <= kPi))
        throw InvalidParams("driver_rho", "must lie in [0, pi]");
    FoldSolver solver(std::move(pattern), driver_rho, previous);
    return solver.run();
}

Measurement measure(const FoldedGeometry& geom) {
    if (!geom.pattern) throw InvalidParams("geom", "geometry carries no pattern");
    return FoldSolver::measure_with(*geom.pattern, geom);
}

double closed_driver(std::shared_ptr<const CreasePattern2D> pattern) {
    const int kSteps = 256;
    auto signed_theta = [&](double rho) {
        const FoldedGeometry g = solve_fold(pattern, rho);
        return FoldSolver::signed_opening_deg(*pattern, g, rho);
    };
    double lo = 0.0;
    for (int k = 1; k <= kSteps; ++k) {
        const double rho = kPi * k / kSteps;
        double theta;
        try {
            theta = signed_theta(rho);
        } catch (const UnreachableState&) {
            return lo;  // cap at the last reachable driver
        }
        if (theta >= 0.0) {
            // First crossing is bracketed in [lo, rho]; bisect for theta = 0.
            double hi = rho;
            for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (signed_theta(mid) >= 0.0) hi = mid;
                else lo = mid;
            }
            return 0.5 * (lo + hi);
        }
        lo = rho;
    }
    return kPi;  // design never closes; cap at the flat-folded driver
}

FoldedGeometry fold_at_fraction(std::shared_ptr<const CreasePattern2D> pattern, double f) {
    return fold_at_fraction_hint(pattern, f, -1.0);
}

FoldedGeometry fold_at_fraction_hint(std::shared_ptr<const CreasePattern2D> pattern, double f,
                                     double rho_max_hint) {
    if (!(f >= 0.0 && f <= 1.0)) throw InvalidParams("fraction", "must lie in [0, 1]");
    if (f == 0.0) return solve_fold(pattern, 0.0);
    const double rho_max = rho_max_hint >= 0.0 ? rho_max_hint : closed_driver(pattern);
    if (f == 1.0) return solve_fold(pattern, rho_max);

    const double target = -180.0 * (1.0 - f);
    double lo = 0.0, hi = rho_max;
    double t_lo = -180.0;
    double t_hi = measure(solve_fold(pattern, rho_max)).opening_angle_deg;
    if (!(t_lo <= target && target <= t_hi + 1e-9)) {
        throw RootNotBracketed("theta target " + std::to_string(target) + " outside [" +
                               std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]");
    }
    FoldedGeometry best = solve_fold(pattern, 0.5 * (lo + hi));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        best = solve_fold(pattern, mid);
        const double t = measure(best).opening_angle_deg;
        if (std::abs(t - target) < 1e-6 || hi - lo < 1e-15) break;
        if (t < target) lo = mid; else hi = mid;
    }
    return best;
}

FoldedGeometry fold_at_fraction(const YoshimuraParams& params, double f) {
    auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(params));
    return fold_at_fraction(pattern, f);
}

FoldCurve fold_curve(const YoshimuraParams& params, int num_samples) {
    if (num_samples < 11) throw InvalidParams("num_samples", "must be >= 11");
    auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(params));
    const double rho_max = closed_driver(pattern);

    // The folding-process coordinate of the trajectory is actuation
    // progress: the driver dihedral normalized to its closed value. Its
    // endpoints coincide with theta = -180 (flat) and theta = 0 (closed),
    // and theta's path between them depends on the crease angle, unlike
    // the opening-angle fraction used by fold_at_fraction.
    FoldCurve curve;
    curve.params = params;
    curve.samples.resize(static_cast<std::size_t>(num_samples));
    for (int i = 0; i < num_samples; ++i) {
        const double f = static_cast<double>(i) / (num_samples - 1);
        const FoldedGeometry g = solve_fold(pattern, f * rho_max);
        const Measurement msr = measure(g);
        auto& s = curve.samples[static_cast<std::size_t>(i)];
        s.fraction = f;
        s.theta_deg = msr.opening_angle_deg;
        s.handle_sep_mm = msr.handle_separation_mm;
        s.tip_aperture_mm = msr.tip_aperture_mm;
        s.transmission_ratio = 0.0;
    }
    auto& ss = curve.samples;
    const auto tr = [&](std::size_t i0, std::size_t i1) {
        const double dx = ss[i1].handle_sep_mm - ss[i0].handle_sep_mm;
        const double da = ss[i1].tip_aperture_mm - ss[i0].tip_aperture_mm;
        if (std::abs(dx) < 1e-15 * params.length())
            throw DegenerateTransmission("handle separation stationary over a curve step");
        return da / dx;
    };
    const std::size_t last = ss.size() - 1;
    ss[0].transmission_ratio = tr(0, 1);
    ss[last].transmission_ratio = tr(last - 1, last);
    for (std::size_t i = 1; i < last; ++i) ss[i].transmission_ratio = tr(i - 1, i + 1);
    return curve;
}

MouthPlane mouth_plane(const FoldedGeometry& geom) {
    const CreasePattern2D& pat = *geom.pattern;
    const int n = pat.params.num_rows;
    const int m = pat.params.num_units;
    const int top_line = (n % 2 == 0) ? n : n + 1;
    auto vert = [&](int line, int col) -> const Vec3& {
        return geom.vertices3d[static_cast<std::size_t>(pat.vertex_at(line, col))];
    };
    MouthPlane mp;
    const Vec3 bl = vert(0, 0), tl = vert(top_line, 0);
    const Vec3 br = vert(0, 2 * m), tr_ = vert(top_line, 2 * m);
    mp.lip_mid_l = 0.5 * (bl + tl);
    mp.lip_mid_r = 0.5 * (br + tr_);
    mp.point = mp.lip_mid_l;
    const Vec3 u = mp.lip_mid_r - mp.lip_mid_l;
    const Vec3 v = (tl - bl).normalized() + (tr_ - br).normalized();
    Vec3 nrm = u.cross(v);
    if (nrm.norm() < 1e-12 * pat.params.length()) nrm = Vec3(0, 0, 1);
    nrm = nrm.normalized();
    Vec3 centroid{0, 0, 0};
    for (const Vec3& q : geom.vertices3d) centroid += q;
    centroid = centroid / static_cast<double>(geom.vertices3d.size());
    if (nrm.dot(centroid - 0.5 * (mp.lip_mid_l + mp.lip_mid_r)) > 0.0) nrm = -nrm;
    mp.outward = nrm;
    return mp;
}

}  // namespace yoshigrip
