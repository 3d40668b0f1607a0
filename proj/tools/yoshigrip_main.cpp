// Command-line front end: design, simulate and export Yoshimura-pattern
// origami grippers.
//
// Subcommands:
//   pattern    write the laser-cut crease pattern (SVG)
//   fold       write the folded mesh at --fraction (OBJ)
//   curve      write the fold trajectory (CSV)
//   mechanics  write the quasi-static force curves (CSV)
//   grasp      write the grasp feasibility report (JSON)
//   sweep      write the design sweep table (CSV) and its argmax (JSON)
//
// Exit codes: 0 success, 1 configuration/validation error, 2 infeasible
// kinematics. Diagnostics go to stderr; no stack traces for user errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yoshigrip/config.hpp"
#include "yoshigrip/errors.hpp"
#include "yoshigrip/exporters.hpp"
#include "yoshigrip/grasp.hpp"
#include "yoshigrip/kinematics.hpp"
#include "yoshigrip/mechanics.hpp"
#include "yoshigrip/optimize.hpp"
#include "yoshigrip/pattern.hpp"
#include "yoshigrip/version.hpp"

namespace {

using namespace yoshigrip;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void check_format(const std::string& format, const std::string& expected,
                  const std::string& subcommand) {
    if (!format.empty() && format != expected)
        throw ValidationError("--format", format, subcommand + " writes " + expected + " only");
}

struct Cli {
    std::string config_path;
    std::string out_dir;
    int samples = 0;
    double fraction = 0.5;
    std::string format;
};

int run(const std::string& subcommand, const Cli& cli) {
    DesignConfig cfg = load_config(slurp(cli.config_path));
    const std::string out_dir = cli.out_dir.empty() ? cfg.out_dir : cli.out_dir;
    auto out_path = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    if (subcommand == "pattern") {
        check_format(cli.format, "svg", "pattern");
        const CreasePattern2D pattern = build_pattern(cfg.params);
        const std::string path = out_path("pattern.svg");
        atomic_write_file(path, export_svg(pattern));
        std::cout << path << "\n";
        return 0;
    }
    if (subcommand == "fold") {
        check_format(cli.format, "obj", "fold");
        if (!(cli.fraction >= 0.0 && cli.fraction <= 1.0))
            throw ValidationError("--fraction", std::to_string(cli.fraction), "in [0, 1]");
        const FoldedGeometry geom = fold_at_fraction(cfg.params, cli.fraction);
        const std::string path = out_path("fold.obj");
        atomic_write_file(path, export_obj(geom));
        std::cout << path << "\n";
        return 0;
    }
    if (subcommand == "curve") {
        check_format(cli.format, "csv", "curve");
        const int n = cli.samples > 0 ? cli.samples : cfg.curve_samples;
        const FoldCurve curve = fold_curve(cfg.params, n);
        const std::string path = out_path("curve.csv");
        atomic_write_file(path, write_fold_curve_csv(curve));
        std::cout << path << "\n";
        return 0;
    }
    if (subcommand == "mechanics") {
        check_format(cli.format, "csv", "mechanics");
        const int n = cli.samples > 0 ? cli.samples : cfg.force_samples;
        const EnergyModel model =
            EnergyModel::for_params(cfg.params, cfg.stiffness_per_length, cfg.rest_fraction);
        const ForceCurve curve = force_curves(model, cfg.params, n);
        const std::string path = out_path("mechanics.csv");
        atomic_write_file(path, write_force_curve_csv(curve));
        std::cout << path << "\n";
        return 0;
    }
    if (subcommand == "grasp") {
        check_format(cli.format, "json", "grasp");
        const ObjectSpec obj = cfg.object.value_or(ObjectSpec{});
        const GraspReport report = classify(cfg.params, obj, cfg.friction_mu);
        const std::string path = out_path("grasp.json");
        atomic_write_file(path, write_grasp_report_json(report, obj));
        std::cout << path << "\n";
        return 0;
    }
    if (subcommand == "sweep") {
        check_format(cli.format, "csv", "sweep");
        if (!cfg.sweep) throw ValidationError("sweep", "missing", "config must carry a sweep spec");
        const SweepResult result = grid_sweep(*cfg.sweep, cfg.params);
        const std::string csv_path = out_path("sweep.csv");
        const std::string json_path = out_path("sweep_argmax.json");
        atomic_write_file(csv_path, write_sweep_csv(result));
        atomic_write_file(json_path, write_sweep_argmax_json(result));
        std::cout << csv_path << "\n" << json_path << "\n";
        return 0;
    }
    throw ValidationError("subcommand", subcommand, "unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(yoshigrip::kToolkitName) + " " + yoshigrip::kToolkitVersion +
                 " - Yoshimura origami gripper design toolkit"};
    app.require_subcommand(1);

    Cli cli;
    std::string chosen;
    for (const char* name : {"pattern", "fold", "curve", "mechanics", "grasp", "sweep"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", cli.config_path, "JSON configuration file")->required();
        sub->add_option("--out", cli.out_dir, "output directory (default: config out_dir)");
        sub->add_option("--samples", cli.samples, "sample count override");
        sub->add_option("--fraction", cli.fraction, "folding fraction in [0, 1]");
        sub->add_option("--format", cli.format, "output format (subcommand-dependent)");
        sub->callback([&chosen, name]() { chosen = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run(chosen, cli);
    } catch (const yoshigrip::UnreachableState& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const yoshigrip::RootNotBracketed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const yoshigrip::AllInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const yoshigrip::NoWrap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const yoshigrip::OpenChamber& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const yoshigrip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
