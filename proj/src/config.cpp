#include "yoshigrip/config.hpp"

#include <set>
#include <string>

#include <json.hpp>

#include "yoshigrip/errors.hpp"

namespace yoshigrip {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& scope) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key))
            throw ValidationError(scope.empty() ? key : scope + "." + key, "present",
                                  "unknown key");
    }
}

double require_number(const json& v, const std::string& field) {
    if (!v.is_number()) throw ValidationError(field, v.dump(), "must be a number");
    return v.get<double>();
}

int require_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ValidationError(field, v.dump(), "must be an integer");
    return v.get<int>();
}

std::vector<double> require_number_array(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty())
        throw ValidationError(field, v.dump(), "must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(require_number(e, field));
    return out;
}

}  // namespace

DesignConfig default_config() {
    DesignConfig cfg;
    cfg.params = YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0);
    return cfg;
}

DesignConfig load_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(e.what()) + " (byte " + std::to_string(e.byte) + ")");
    }
    if (!doc.is_object()) throw ValidationError("<root>", doc.dump(), "must be a JSON object");

    reject_unknown_keys(doc, {"alpha_deg", "crease_length_mm", "num_units", "num_rows",
                              "handle_offset_mm", "stiffness_per_length", "rest_fraction",
                              "friction_mu", "out_dir", "curve_samples", "force_samples",
                              "sweep", "object"},
                        "");

    DesignConfig cfg = default_config();
    YoshimuraParams& p = cfg.params;

    if (doc.contains("num_rows")) p.num_rows = require_int(doc["num_rows"], "num_rows");
    if (doc.contains("num_units")) p.num_units = require_int(doc["num_units"], "num_units");
    if (p.num_rows < 1) throw ValidationError("num_rows", std::to_string(p.num_rows), ">= 1");
    if (p.num_units < 3) throw ValidationError("num_units", std::to_string(p.num_units), ">= 3");

    if (doc.contains("alpha_deg")) {
        auto a = require_number_array(doc["alpha_deg"], "alpha_deg");
        if (a.size() == 1) a.assign(static_cast<std::size_t>(p.num_rows), a[0]);
        p.alpha_deg = a;
    } else {
        p.alpha_deg.assign(static_cast<std::size_t>(p.num_rows), 25.0);
    }
    if (doc.contains("crease_length_mm")) {
        auto l = require_number_array(doc["crease_length_mm"], "crease_length_mm");
        if (l.size() == 1) l.assign(static_cast<std::size_t>(p.num_rows), l[0]);
        p.crease_length_mm = l;
    } else {
        p.crease_length_mm.assign(static_cast<std::size_t>(p.num_rows), 40.0);
    }
    // Default handle tab: a quarter unit, so scaled designs stay similar.
    p.handle_offset_mm = doc.contains("handle_offset_mm")
                             ? require_number(doc["handle_offset_mm"], "handle_offset_mm")
                             : 0.25 * p.crease_length_mm.front();

    try {
        p.validate();
    } catch (const InvalidParams& e) {
        throw ValidationError(e.field, "<see message>", e.what());
    } catch (const IncompatibleRows& e) {
        throw ValidationError("crease_length_mm/alpha_deg", "<vectors>", e.what());
    }

    if (doc.contains("stiffness_per_length")) {
        cfg.stiffness_per_length = require_number(doc["stiffness_per_length"], "stiffness_per_length");
        if (!(cfg.stiffness_per_length > 0.0))
            throw ValidationError("stiffness_per_length", std::to_string(cfg.stiffness_per_length),
                                  "> 0");
    }
    if (doc.contains("rest_fraction")) {
        cfg.rest_fraction = require_number(doc["rest_fraction"], "rest_fraction");
        if (!(cfg.rest_fraction >= 0.0 && cfg.rest_fraction <= 1.0))
            throw ValidationError("rest_fraction", std::to_string(cfg.rest_fraction), "in [0, 1]");
    }
    if (doc.contains("friction_mu")) {
        cfg.friction_mu = require_number(doc["friction_mu"], "friction_mu");
        if (!(cfg.friction_mu >= 0.0))
            throw ValidationError("friction_mu", std::to_string(cfg.friction_mu), ">= 0");
    }
    if (doc.contains("out_dir")) {
        if (!doc["out_dir"].is_string())
            throw ValidationError("out_dir", doc["out_dir"].dump(), "must be a string");
        cfg.out_dir = doc["out_dir"].get<std::string>();
    }
    if (doc.contains("curve_samples")) {
        cfg.curve_samples = require_int(doc["curve_samples"], "curve_samples");
        if (cfg.curve_samples < 11)
            throw ValidationError("curve_samples", std::to_string(cfg.curve_samples), ">= 11");
    }
    if (doc.contains("force_samples")) {
        cfg.force_samples = require_int(doc["force_samples"], "force_samples");
        if (cfg.force_samples < 21)
            throw ValidationError("force_samples", std::to_string(cfg.force_samples), ">= 21");
    }

    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        if (!sw.is_object()) throw ValidationError("sweep", sw.dump(), "must be an object");
        reject_unknown_keys(sw, {"alpha_deg", "length_mm", "objective", "stage_fraction"}, "sweep");
        SweepSpec spec;
        if (sw.contains("alpha_deg")) {
            const json& r = sw["alpha_deg"];
            if (!r.is_array() || r.size() != 3)
                throw ValidationError("sweep.alpha_deg", r.dump(), "must be [lo, hi, steps]");
            spec.alpha_lo_deg = require_number(r[0], "sweep.alpha_deg[0]");
            spec.alpha_hi_deg = require_number(r[1], "sweep.alpha_deg[1]");
            spec.alpha_steps = require_int(r[2], "sweep.alpha_deg[2]");
        }
        if (sw.contains("length_mm")) {
            const json& r = sw["length_mm"];
            if (!r.is_array() || r.size() != 3)
                throw ValidationError("sweep.length_mm", r.dump(), "must be [lo, hi, steps]");
            spec.length_lo_mm = require_number(r[0], "sweep.length_mm[0]");
            spec.length_hi_mm = require_number(r[1], "sweep.length_mm[1]");
            spec.length_steps = require_int(r[2], "sweep.length_mm[2]");
        } else {
            spec.length_lo_mm = spec.length_hi_mm = p.length();
            spec.length_steps = 1;
        }
        if (sw.contains("objective")) {
            const std::string name = sw["objective"].is_string()
                                         ? sw["objective"].get<std::string>()
                                         : throw ValidationError("sweep.objective",
                                                                 sw["objective"].dump(),
                                                                 "must be a string");
            if (name == "transmission_at_stage") spec.objective = Objective::TransmissionAtStage;
            else if (name == "pinch_sensitivity") spec.objective = Objective::PinchSensitivity;
            else if (name == "max_inscribed_sphere") spec.objective = Objective::MaxInscribedSphere;
            else throw ValidationError("sweep.objective", name,
                                       "one of transmission_at_stage, pinch_sensitivity, "
                                       "max_inscribed_sphere");
        }
        if (sw.contains("stage_fraction"))
            spec.stage_fraction = require_number(sw["stage_fraction"], "sweep.stage_fraction");
        try {
            spec.validate();
        } catch (const InvalidParams& e) {
            throw ValidationError("sweep." + e.field, "<see message>", e.what());
        }
        cfg.sweep = spec;
    }

    if (doc.contains("object")) {
        const json& ob = doc["object"];
        if (!ob.is_object()) throw ValidationError("object", ob.dump(), "must be an object");
        reject_unknown_keys(ob, {"kind", "diameters_mm", "burial_depth_mm"}, "object");
        ObjectSpec spec;
        if (ob.contains("kind")) {
            if (!ob["kind"].is_string())
                throw ValidationError("object.kind", ob["kind"].dump(), "must be a string");
            const std::string k = ob["kind"].get<std::string>();
            if (k == "sphere") spec.kind = ObjectKind::Sphere;
            else if (k == "multi_sphere") spec.kind = ObjectKind::MultiSphere;
            else if (k == "buried") spec.kind = ObjectKind::Buried;
            else throw ValidationError("object.kind", k, "one of sphere, multi_sphere, buried");
        }
        if (ob.contains("diameters_mm"))
            spec.diameters_mm = require_number_array(ob["diameters_mm"], "object.diameters_mm");
        if (ob.contains("burial_depth_mm"))
            spec.burial_depth_mm = require_number(ob["burial_depth_mm"], "object.burial_depth_mm");
        try {
            spec.validate();
        } catch (const InvalidParams& e) {
            throw ValidationError("object." + e.field, "<see message>", e.what());
        }
        cfg.object = spec;
    }

    return cfg;
}

}  // namespace yoshigrip
