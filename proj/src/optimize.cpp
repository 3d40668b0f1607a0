#include "yoshigrip/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <thread>

#include "yoshigrip/errors.hpp"
#include "yoshigrip/grasp.hpp"
#include "yoshigrip/kinematics.hpp"
#include "yoshigrip/mechanics.hpp"
#include "yoshigrip/version.hpp"

namespace yoshigrip {

namespace {

double evaluate_objective(const SweepSpec& spec, const YoshimuraParams& params) {
    switch (spec.objective) {
        case Objective::TransmissionAtStage: {
            auto pattern = std::make_shared<const CreasePattern2D>(build_pattern(params));
            const double rho_max = closed_driver(pattern);
            const double step = std::min({5e-3, spec.stage_fraction, 1.0 - spec.stage_fraction});
            const Measurement m0 =
                measure(fold_at_fraction_hint(pattern, spec.stage_fraction - step, rho_max));
            const Measurement m1 =
                measure(fold_at_fraction_hint(pattern, spec.stage_fraction + step, rho_max));
            const double dx = m1.handle_separation_mm - m0.handle_separation_mm;
            if (std::abs(dx) < 1e-12 * params.length())
                throw DegenerateTransmission("handle separation stationary at the stage");
            return (m1.tip_aperture_mm - m0.tip_aperture_mm) / dx;
        }
        case Objective::PinchSensitivity: {
            const EnergyModel model = EnergyModel::for_params(params);
            return pinch_sensitivity(model, params, spec.stage_fraction);
        }
        case Objective::MaxInscribedSphere: {
            const FoldedGeometry g = fold_at_fraction(params, spec.stage_fraction);
            return chamber_metrics(g, 64).max_inscribed_sphere_mm;
        }
    }
    throw InvalidParams("objective", "unknown objective");
}

YoshimuraParams cell_params(const YoshimuraParams& base, double alpha_deg, double length_mm) {
    const double offset_ratio = base.handle_offset_mm / base.length();
    return YoshimuraParams::uniform(alpha_deg, length_mm, base.num_units, base.num_rows,
                                    offset_ratio * length_mm);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string spec_fingerprint(const SweepSpec& spec, const YoshimuraParams& base) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g|%.17g|%d|%.17g|%.17g|%d|%s|%.17g|%d|%d|%.17g",
                  spec.alpha_lo_deg, spec.alpha_hi_deg, spec.alpha_steps, spec.length_lo_mm,
                  spec.length_hi_mm, spec.length_steps, to_string(spec.objective),
                  spec.stage_fraction, base.num_units, base.num_rows,
                  base.handle_offset_mm / base.length());
    char out[64];
    std::snprintf(out, sizeof out, "%s %s spec:%016llx", kToolkitName, kToolkitVersion,
                  static_cast<unsigned long long>(fnv1a(buf)));
    return out;
}

}  // namespace

const char* to_string(Objective o) {
    switch (o) {
        case Objective::TransmissionAtStage: return "transmission_at_stage";
        case Objective::PinchSensitivity: return "pinch_sensitivity";
        case Objective::MaxInscribedSphere: return "max_inscribed_sphere";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(alpha_lo_deg > 0.0 && alpha_hi_deg < 90.0))
        throw InvalidParams("alpha_range_deg", "must lie inside (0, 90)");
    if (alpha_steps >= 2 && !(alpha_lo_deg < alpha_hi_deg))
        throw InvalidParams("alpha_range_deg", "lo must be < hi");
    if (alpha_steps < 1) throw InvalidParams("alpha_steps", "must be >= 1");
    if (!(length_lo_mm > 0.0)) throw InvalidParams("length_range_mm", "must be > 0");
    if (length_steps >= 2 && !(length_lo_mm < length_hi_mm))
        throw InvalidParams("length_range_mm", "lo must be < hi");
    if (length_steps < 1) throw InvalidParams("length_steps", "must be >= 1");
    if (!(stage_fraction > 0.0 && stage_fraction < 1.0))
        throw InvalidParams("stage_fraction", "must lie strictly inside (0, 1)");
}

SweepResult grid_sweep(const SweepSpec& spec, const YoshimuraParams& base) {
    spec.validate();
    base.validate();

    std::vector<std::pair<double, double>> cells;
    for (int i = 0; i < spec.alpha_steps; ++i) {
        const double a = spec.alpha_steps == 1
                             ? spec.alpha_lo_deg
                             : spec.alpha_lo_deg + (spec.alpha_hi_deg - spec.alpha_lo_deg) * i /
                                                       (spec.alpha_steps - 1);
        for (int j = 0; j < spec.length_steps; ++j) {
            const double l = spec.length_steps == 1
                                 ? spec.length_lo_mm
                                 : spec.length_lo_mm + (spec.length_hi_mm - spec.length_lo_mm) *
                                                           j / (spec.length_steps - 1);
            cells.emplace_back(a, l);
        }
    }

    SweepResult result;
    result.rows.resize(cells.size());
    result.provenance = spec_fingerprint(spec, base);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, cells.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                SweepRow row{cells[i].first, cells[i].second, 0.0, false};
                try {
                    row.objective_value =
                        evaluate_objective(spec, cell_params(base, row.alpha_deg, row.length_mm));
                    row.feasible = true;
                } catch (const Error&) {
                    row.feasible = false;
                    row.objective_value = 0.0;
                }
                result.rows[i] = row;
            }
        });
    }
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& r = result.rows[i];
        if (!r.feasible) continue;
        if (result.argmax_index < 0 ||
            r.objective_value > result.rows[static_cast<std::size_t>(result.argmax_index)]
                                    .objective_value) {
            result.argmax_index = static_cast<int>(i);
        }
    }
    if (result.argmax_index < 0) throw AllInfeasible();
    return result;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double width_tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > width_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::pair<double, double> refine_alpha(const SweepSpec& spec, const YoshimuraParams& base,
                                       double alpha_lo_deg, double alpha_hi_deg) {
    spec.validate();
    if (!(alpha_lo_deg < alpha_hi_deg))
        throw InvalidParams("bracket", "alpha_lo must be < alpha_hi");
    const double length = spec.length_lo_mm;
    const auto value = [&](double alpha) {
        return evaluate_objective(spec, cell_params(base, alpha, length));
    };

    const double mid = 0.5 * (alpha_lo_deg + alpha_hi_deg);
    const double f_lo = value(alpha_lo_deg);
    const double f_mid = value(mid);
    const double f_hi = value(alpha_hi_deg);
    if (!(f_mid >= f_lo && f_mid >= f_hi)) {
        throw NotUnimodal("no interior maximum detected on [" + std::to_string(alpha_lo_deg) +
                          ", " + std::to_string(alpha_hi_deg) + "] deg");
    }

    const double alpha_star = golden_section_max(value, alpha_lo_deg, alpha_hi_deg, 0.1);
    return {alpha_star, value(alpha_star)};
}

}  // namespace yoshigrip
