#include "yoshigrip/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {

// Internal step for the chain-rule derivatives, in fraction units. Kept
// independent of the curve's sample grid so the reported force is a local
// derivative, not a grid secant.
constexpr double kDerivStep = 1e-3;

struct FoldContext {
    std::shared_ptr<const CreasePattern2D> pattern;
    double rho_max;

    explicit FoldContext(const YoshimuraParams& params)
        : pattern(std::make_shared<const CreasePattern2D>(build_pattern(params))),
          rho_max(closed_driver(pattern)) {}

    FoldedGeometry at(double f) const { return fold_at_fraction_hint(pattern, f, rho_max); }
};

struct Rates {
    double dx_df;       // handle separation rate
    double da_df;       // tip aperture rate
    double dE_df;       // energy rate via per-crease spring torques
};

Rates rates_at(const FoldContext& ctx, const EnergyModel& model, const FoldedGeometry& here,
               double f) {
    const double f0 = std::max(0.0, f - kDerivStep);
    const double f1 = std::min(1.0, f + kDerivStep);
    const FoldedGeometry ga = ctx.at(f0);
    const FoldedGeometry gb = ctx.at(f1);
    const Measurement ma = measure(ga);
    const Measurement mb = measure(gb);
    const double df = f1 - f0;

    Rates r;
    r.dx_df = (mb.handle_separation_mm - ma.handle_separation_mm) / df;
    r.da_df = (mb.tip_aperture_mm - ma.tip_aperture_mm) / df;
    r.dE_df = 0.0;
    for (std::size_t i = 0; i < model.crease_lengths.size(); ++i) {
        if (model.crease_kinds[i] == CreaseKind::Boundary) continue;
        const double torque = model.stiffness_per_length * model.crease_lengths[i] *
                              (here.fold_angles[i] - model.rest_angles[i]);
        r.dE_df += torque * (gb.fold_angles[i] - ga.fold_angles[i]) / df;
    }
    return r;
}

}  // namespace

EnergyModel EnergyModel::for_params(const YoshimuraParams& params, double stiffness_per_length,
                                    double rest_fraction) {
    if (!(stiffness_per_length > 0.0))
        throw InvalidParams("stiffness_per_length", "must be > 0");
    if (!(rest_fraction >= 0.0 && rest_fraction <= 1.0))
        throw InvalidParams("rest_fraction", "must lie in [0, 1]");
    const FoldedGeometry rest = fold_at_fraction(params, rest_fraction);
    EnergyModel model;
    model.stiffness_per_length = stiffness_per_length;
    model.rest_fraction = rest_fraction;
    model.rest_angles = rest.fold_angles;
    model.crease_lengths = pattern_edge_lengths(*rest.pattern);
    model.crease_kinds.reserve(rest.pattern->creases.size());
    for (const Crease& c : rest.pattern->creases) model.crease_kinds.push_back(c.kind);
    return model;
}

void EnergyModel::validate() const {
    if (!(stiffness_per_length > 0.0))
        throw InvalidParams("stiffness_per_length", "must be > 0");
    if (!(rest_fraction >= 0.0 && rest_fraction <= 1.0))
        throw InvalidParams("rest_fraction", "must lie in [0, 1]");
    if (rest_angles.size() != crease_lengths.size() || rest_angles.size() != crease_kinds.size())
        throw ModelMismatch("rest angle / length / kind vectors differ in size");
}

double energy(const EnergyModel& model, const FoldedGeometry& geom) {
    model.validate();
    if (geom.fold_angles.size() != model.rest_angles.size())
        throw ModelMismatch("geometry has " + std::to_string(geom.fold_angles.size()) +
                            " creases, model has " + std::to_string(model.rest_angles.size()));
    double e = 0.0;
    for (std::size_t i = 0; i < model.rest_angles.size(); ++i) {
        if (model.crease_kinds[i] == CreaseKind::Boundary) continue;
        const double d = geom.fold_angles[i] - model.rest_angles[i];
        e += 0.5 * model.stiffness_per_length * model.crease_lengths[i] * d * d;
    }
    return e;
}

ForceCurve force_curves(const EnergyModel& model, const YoshimuraParams& params, int num_samples) {
    model.validate();
    if (num_samples < 21) throw InvalidParams("num_samples", "must be >= 21");

    const FoldContext ctx(params);
    if (model.rest_angles.size() != ctx.pattern->creases.size())
        throw ModelMismatch("model was built for a different pattern");

    ForceCurve curve;
    curve.params = params;
    curve.flat_handle_separation_mm = measure(ctx.at(0.0)).handle_separation_mm;
    curve.samples.resize(static_cast<std::size_t>(num_samples));

    const double L = params.length();
    for (int i = 0; i < num_samples; ++i) {
        const double f = static_cast<double>(i) / (num_samples - 1);
        const FoldedGeometry g = ctx.at(f);
        const Measurement msr = measure(g);
        const Rates r = rates_at(ctx, model, g, f);

        ForceSample& s = curve.samples[static_cast<std::size_t>(i)];
        s.fraction = f;
        s.pull_distance_mm = curve.flat_handle_separation_mm - msr.handle_separation_mm;
        s.pull_force = r.dE_df / (-r.dx_df);
        s.pinch_valid = std::abs(r.da_df) > 1e-12 * L;
        s.pinch_force = s.pinch_valid ? s.pull_force * (r.dx_df / r.da_df) : 0.0;
        s.stiffness = 0.0;
    }

    auto& ss = curve.samples;
    for (std::size_t i = 1; i < ss.size(); ++i) {
        if (!(ss[i].pull_distance_mm > ss[i - 1].pull_distance_mm))
            throw Error("pull distance not strictly monotone across samples");
    }
    const auto slope = [&](std::size_t i0, std::size_t i1) {
        return (ss[i1].pull_force - ss[i0].pull_force) /
               (ss[i1].pull_distance_mm - ss[i0].pull_distance_mm);
    };
    const std::size_t last = ss.size() - 1;
    ss[0].stiffness = slope(0, 1);
    ss[last].stiffness = slope(last - 1, last);
    for (std::size_t i = 1; i < last; ++i) ss[i].stiffness = slope(i - 1, i + 1);
    return curve;
}

double pinch_sensitivity(const EnergyModel& model, const YoshimuraParams& params,
                         double stage_fraction) {
    model.validate();
    if (!(stage_fraction > 0.0 && stage_fraction < 1.0))
        throw InvalidParams("stage_fraction", "must be strictly interior to (0, 1)");

    const FoldContext ctx(params);
    if (model.rest_angles.size() != ctx.pattern->creases.size())
        throw ModelMismatch("model was built for a different pattern");

    const double step = std::min({5e-3, stage_fraction, 1.0 - stage_fraction});
    const double L = params.length();
    const auto pinch_at = [&](double f) {
        const FoldedGeometry g = ctx.at(f);
        const Rates r = rates_at(ctx, model, g, f);
        if (std::abs(r.da_df) <= 1e-12 * L)
            throw DegenerateTransmission("aperture stationary at fraction " + std::to_string(f));
        return (r.dE_df / (-r.dx_df)) * (r.dx_df / r.da_df);
    };
    const double p0 = pinch_at(stage_fraction - step);
    const double p1 = pinch_at(stage_fraction + step);
    const double d0 = -measure(ctx.at(stage_fraction - step)).handle_separation_mm;
    const double d1 = -measure(ctx.at(stage_fraction + step)).handle_separation_mm;
    return (p1 - p0) / (d1 - d0);
}

}  // namespace yoshigrip
