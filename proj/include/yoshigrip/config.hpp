#ifndef YOSHIGRIP_CONFIG_HPP
#define YOSHIGRIP_CONFIG_HPP

#include <optional>
#include <string>

#include "yoshigrip/grasp.hpp"
#include "yoshigrip/optimize.hpp"
#include "yoshigrip/pattern.hpp"

namespace yoshigrip {

// Everything the CLI needs for one run. Angles are accepted in degrees
// only; unknown keys are rejected. Defaults: alpha 25 deg, L 40 mm, m = 6,
// n = 2, handle offset L/4, rest fraction 0.5, unit stiffness.
struct DesignConfig {
    YoshimuraParams params;
    double stiffness_per_length = 1.0;
    double rest_fraction = 0.5;
    double friction_mu = 0.5;
    std::string out_dir = ".";
    int curve_samples = 101;
    int force_samples = 101;
    std::optional<SweepSpec> sweep;
    std::optional<ObjectSpec> object;
};

// Parse and validate a JSON configuration document.
// Throws ParseError (malformed JSON, with byte position) or
// ValidationError (field, value, violated constraint).
DesignConfig load_config(const std::string& json_text);

// The documented default configuration (equal to load_config("{}")).
DesignConfig default_config();

}  // namespace yoshigrip

#endif  // YOSHIGRIP_CONFIG_HPP
