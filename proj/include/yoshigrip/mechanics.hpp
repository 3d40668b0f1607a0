#ifndef YOSHIGRIP_MECHANICS_HPP
#define YOSHIGRIP_MECHANICS_HPP

#include <vector>

#include "yoshigrip/kinematics.hpp"
#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

// Crease torsional-spring surrogate: every non-boundary crease is a linear
// torsional spring of stiffness (stiffness_per_length * crease length),
// unstressed at the fold state of rest_fraction. Forces are normalized
// (k = 1 by default); the model reproduces curve shapes and orderings, not
// newtons.
struct EnergyModel {
    double stiffness_per_length = 1.0;
    double rest_fraction = 0.5;
    std::vector<double> rest_angles;     // per crease, radians, signed
    std::vector<double> crease_lengths;  // per crease, mm
    std::vector<CreaseKind> crease_kinds;

    // Rest angles from the fold state at f0.
    static EnergyModel for_params(const YoshimuraParams& params, double stiffness_per_length = 1.0,
                                  double rest_fraction = 0.5);
    void validate() const;
};

// E = sum over creases of 1/2 k * length * (rho - rho0)^2; zero exactly at
// the rest state. Throws ModelMismatch when crease counts differ.
double energy(const EnergyModel& model, const FoldedGeometry& geom);

struct ForceSample {
    double fraction;
    double pull_distance_mm;  // measured from the flat-state handle separation
    double pull_force;        // dE/d(pull distance), normalized
    double pinch_force;       // pull force / transmission ratio, normalized
    bool pinch_valid;         // false at degenerate-transmission samples
    double stiffness;         // d(pull force)/d(pull distance), normalized
};

struct ForceCurve {
    std::vector<ForceSample> samples;
    double flat_handle_separation_mm = 0.0;
    YoshimuraParams params;
};

// Quasi-static force curves over the fold path. The pull force comes from
// the chain rule through the single degree of freedom (per-crease spring
// torques times finite-difference crease rates), so it vanishes exactly at
// the rest sample; the pinch force is the virtual-work transmission
// P = F / TR. num_samples must be >= 21 (use an odd count so the rest
// fraction is sampled exactly).
ForceCurve force_curves(const EnergyModel& model, const YoshimuraParams& params, int num_samples);

// d(pinch force)/d(pull distance) at an interior stage fraction, by central
// differences.
double pinch_sensitivity(const EnergyModel& model, const YoshimuraParams& params,
                         double stage_fraction);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_MECHANICS_HPP
