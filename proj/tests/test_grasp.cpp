#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "yoshigrip/errors.hpp"
#include "yoshigrip/grasp.hpp"

using namespace yoshigrip;

namespace {
const YoshimuraParams kDefault = YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0);

FoldedGeometry state_at(const YoshimuraParams& p, double f) {
    auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(p));
    return fold_at_fraction(pattern, f);
}
}  // namespace

TEST_CASE("object validation") {
    ObjectSpec ok;
    ok.validate();
    ObjectSpec none;
    none.diameters_mm.clear();
    CHECK_THROWS_AS(none.validate(), InvalidParams);
    ObjectSpec neg;
    neg.diameters_mm = {-1.0};
    CHECK_THROWS_AS(neg.validate(), InvalidParams);
    ObjectSpec multi;
    multi.kind = ObjectKind::MultiSphere;
    multi.diameters_mm = {40.0};
    CHECK_THROWS_AS(multi.validate(), InvalidParams);
    ObjectSpec buried;
    buried.kind = ObjectKind::Buried;
    buried.burial_depth_mm = -2.0;
    CHECK_THROWS_AS(buried.validate(), InvalidParams);
}

TEST_CASE("no chamber below the onset fraction") {
    const ChamberMetrics cm = chamber_metrics(state_at(kDefault, 0.1), 32);
    CHECK(cm.volume_mm3 == 0.0);
    CHECK(cm.max_inscribed_sphere_mm == 0.0);
    CHECK(cm.aperture_mm > 0.0);
}

TEST_CASE("chamber metrics converge under voxel refinement") {
    const FoldedGeometry g = state_at(kDefault, 0.8);
    const ChamberMetrics coarse = chamber_metrics(g, 64);
    const ChamberMetrics fine = chamber_metrics(g, 128);
    CHECK(std::abs(coarse.volume_mm3 - fine.volume_mm3) <= 0.05 * fine.volume_mm3);
    CHECK(std::abs(coarse.max_inscribed_sphere_mm - fine.max_inscribed_sphere_mm) <=
          0.05 * fine.max_inscribed_sphere_mm);
}

TEST_CASE("chamber metrics scale with the design") {
    const FoldedGeometry small = state_at(kDefault, 0.7);
    const FoldedGeometry big = state_at(YoshimuraParams::uniform(25.0, 80.0, 6, 2, 20.0), 0.7);
    const ChamberMetrics a = chamber_metrics(small, 64);
    const ChamberMetrics b = chamber_metrics(big, 64);
    CHECK(b.volume_mm3 == doctest::Approx(8.0 * a.volume_mm3).epsilon(0.01));
    CHECK(b.max_inscribed_sphere_mm ==
          doctest::Approx(2.0 * a.max_inscribed_sphere_mm).epsilon(0.01));
}

TEST_CASE("wrap classification against chamber metrics") {
    ObjectSpec small;
    small.diameters_mm = {45.0};  // well inside the ~147 mm deep chamber
    const GraspReport rep = classify(kDefault, small);
    CHECK(rep.grasp_type == GraspType::Wrap);
    CHECK(rep.feasible);
    CHECK(rep.best_fraction >= 0.2);
    CHECK(rep.max_inscribed_sphere_mm >= 45.0);
    CHECK(rep.pullout_proxy > 0.0);
    CHECK(rep.contact_count > 0);

    ObjectSpec huge;
    huge.diameters_mm = {400.0};  // larger than the flat sheet extent
    const GraspReport rep2 = classify(kDefault, huge);
    CHECK_FALSE(rep2.feasible);
}

TEST_CASE("multi-object capacity bound") {
    ObjectSpec two;
    two.kind = ObjectKind::MultiSphere;
    two.diameters_mm = {40.0, 50.0};  // combined ~99e3 mm^3 vs 0.7 * ~162e3
    const GraspReport ok = classify(kDefault, two);
    CHECK(ok.grasp_type == GraspType::Multi);
    CHECK(ok.feasible);

    ObjectSpec over;
    over.kind = ObjectKind::MultiSphere;
    over.diameters_mm = {140.0, 140.0};  // combined volume exceeds the chamber
    const GraspReport bad = classify(kDefault, over);
    CHECK_FALSE(bad.feasible);
}

TEST_CASE("scoop needs volume and a shallow burial") {
    ObjectSpec buried;
    buried.kind = ObjectKind::Buried;
    buried.diameters_mm = {50.0};
    buried.burial_depth_mm = 5.0;
    CHECK(classify(kDefault, buried).feasible);

    buried.burial_depth_mm = 500.0;  // deeper than the lip edge
    CHECK_FALSE(classify(kDefault, buried).feasible);
}

TEST_CASE("classification is deterministic") {
    ObjectSpec obj;
    obj.diameters_mm = {50.0};
    const GraspReport a = classify(kDefault, obj);
    const GraspReport b = classify(kDefault, obj);
    CHECK(a.best_fraction == b.best_fraction);
    CHECK(a.chamber_volume_mm3 == b.chamber_volume_mm3);
    CHECK(a.pullout_proxy == b.pullout_proxy);
    CHECK(a.contact_count == b.contact_count);
}

TEST_CASE("feasibility verdicts are scale invariant") {
    ObjectSpec obj;
    obj.diameters_mm = {50.0};
    const GraspReport a = classify(kDefault, obj);
    ObjectSpec obj2;
    obj2.diameters_mm = {100.0};
    const GraspReport b = classify(YoshimuraParams::uniform(25.0, 80.0, 6, 2, 20.0), obj2);
    CHECK(a.feasible == b.feasible);
    CHECK(a.grasp_type == b.grasp_type);
    CHECK(b.best_fraction == doctest::Approx(a.best_fraction).epsilon(1e-9));
}

TEST_CASE("pull-out proxy: trend over diameters, mu monotonicity, refinement") {
    double prev = -1.0;
    for (double d : {40.0, 50.0, 63.0}) {
        const double v = pullout_proxy(kDefault, d, 0.5);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(pullout_proxy(kDefault, 50.0, 0.0) <= pullout_proxy(kDefault, 50.0, 0.4));
    CHECK(pullout_proxy(kDefault, 50.0, 0.4) <= pullout_proxy(kDefault, 50.0, 0.9));

    // Sampling-refinement oracle: ~10x more facet points, within 5%.
    const double base = pullout_proxy(kDefault, 50.0, 0.5, nullptr, 16);
    const double fine = pullout_proxy(kDefault, 50.0, 0.5, nullptr, 51);
    CHECK(std::abs(base - fine) <= 0.05 * std::max(base, fine));

    CHECK_THROWS_AS(pullout_proxy(kDefault, 400.0, 0.5), NoWrap);
    CHECK_THROWS_AS(pullout_proxy(kDefault, 50.0, -0.1), InvalidParams);
}
