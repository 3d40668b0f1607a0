#ifndef YOSHIGRIP_OPTIMIZE_HPP
#define YOSHIGRIP_OPTIMIZE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

enum class Objective { TransmissionAtStage, PinchSensitivity, MaxInscribedSphere };

const char* to_string(Objective o);

struct SweepSpec {
    double alpha_lo_deg = 17.5;
    double alpha_hi_deg = 35.0;
    int alpha_steps = 8;
    double length_lo_mm = 40.0;
    double length_hi_mm = 40.0;
    int length_steps = 1;  // 1 pins the length at length_lo
    Objective objective = Objective::PinchSensitivity;
    double stage_fraction = 0.75;

    void validate() const;
};

struct SweepRow {
    double alpha_deg;
    double length_mm;
    double objective_value;  // 0 when infeasible
    bool feasible;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // lexicographic by (alpha, length)
    int argmax_index = -1;       // max over feasible rows
    std::string provenance;      // toolkit version + spec hash
};

// Evaluate the objective over the full (alpha, length) grid. The base
// design supplies unit/row counts; handle offsets scale with length so the
// grid stays a similarity family. Cells whose kinematics fail anywhere on
// the fold path are flagged infeasible and excluded from the argmax.
// Throws AllInfeasible when nothing on the grid evaluates.
SweepResult grid_sweep(const SweepSpec& spec, const YoshimuraParams& base);

// Golden-section search for the maximizer of f on [lo, hi] down to the
// given bracket width.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double width_tol);

// Locate the objective's interior maximum over alpha on a bracket that
// contains one (three-point unimodality test at entry, else NotUnimodal).
// Returns (alpha_star_deg, objective value), bracket refined to 0.1 deg.
std::pair<double, double> refine_alpha(const SweepSpec& spec, const YoshimuraParams& base,
                                       double alpha_lo_deg, double alpha_hi_deg);

}  // namespace yoshigrip

#endif  // YOSHIGRIP_OPTIMIZE_HPP
