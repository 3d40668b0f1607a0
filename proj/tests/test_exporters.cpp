#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "yoshigrip/exporters.hpp"
#include "yoshigrip/pattern.hpp"

using namespace yoshigrip;

namespace {
FoldedGeometry default_state(double f) {
    auto pattern = std::make_shared<const CreasePattern2D>(
        build_pattern(YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0)));
    return fold_at_fraction(pattern, f);
}
}  // namespace

TEST_CASE("svg valley layer of the 3-unit strip holds exactly two unit segments") {
    const auto pat = build_pattern(YoshimuraParams::uniform(45.0, 2.0, 3, 1, 0.5));
    const std::string svg = export_svg(pat);
    const auto groups = parse_svg_segments(svg);
    REQUIRE(groups.count("valley"));
    REQUIRE(groups.count("mountain"));
    REQUIRE(groups.count("cut"));
    const auto& valleys = groups.at("valley");
    REQUIRE(valleys.size() == 2);
    for (const auto& seg : valleys) {
        CHECK(seg[1] == seg[3]);  // horizontal
        CHECK(std::abs(std::abs(seg[2] - seg[0]) - 2.0) <= 1e-6);
    }
}

TEST_CASE("svg round-trip recovers every vertex within 1e-6 mm") {
    const auto pat = build_pattern(YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0));
    const std::string svg = export_svg(pat);
    const auto groups = parse_svg_segments(svg);
    std::size_t segments = 0;
    for (const auto& [name, segs] : groups) segments += segs.size();
    CHECK(segments == pat.creases.size());
    for (const auto& [name, segs] : groups) {
        for (const auto& seg : segs) {
            for (int end = 0; end < 2; ++end) {
                double best = 1e300;
                for (const Pt2& v : pat.vertices) {
                    best = std::min(best, std::hypot(v.x - seg[2 * end], v.y - seg[2 * end + 1]));
                }
                CHECK(best <= 1e-6);
            }
        }
    }
}

TEST_CASE("svg viewBox doubles with the design") {
    const auto view_box = [](const std::string& svg) {
        const auto pos = svg.find("viewBox=\"");
        REQUIRE(pos != std::string::npos);
        double x0, y0, w, h;
        REQUIRE(std::sscanf(svg.c_str() + pos, "viewBox=\"%lf %lf %lf %lf\"", &x0, &y0, &w, &h) == 4);
        return std::array<double, 2>{w, h};
    };
    const auto small = view_box(export_svg(build_pattern(YoshimuraParams::uniform(25, 40, 6, 2, 10))));
    const auto big = view_box(export_svg(build_pattern(YoshimuraParams::uniform(25, 80, 6, 2, 20))));
    CHECK(small[0] == 240.0);
    CHECK(big[0] == 2.0 * small[0]);
    CHECK(std::abs(big[1] - 2.0 * small[1]) <= 2e-6);  // print precision
}

TEST_CASE("svg export is deterministic and carries the version comment") {
    const auto pat = build_pattern(YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0));
    CHECK(export_svg(pat) == export_svg(pat));
    CHECK(export_svg(pat).find("<!-- yoshigrip") != std::string::npos);
}

TEST_CASE("obj flat state has all-zero z coordinates") {
    const std::string obj = export_obj(default_state(0.0));
    std::istringstream in(obj);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        const auto last = line.rfind(' ');
        CHECK(line.substr(last + 1) == "0.000000");
    }
}

TEST_CASE("obj round-trip: face count and print-precision vertices") {
    const FoldedGeometry g = default_state(0.5);
    const ParsedObj parsed = parse_obj(export_obj(g));
    CHECK(parsed.faces.size() == 24);
    REQUIRE(parsed.vertices.size() == g.vertices3d.size());
    for (std::size_t i = 0; i < parsed.vertices.size(); ++i) {
        CHECK(dist(parsed.vertices[i], g.vertices3d[i]) <= 1e-6 * std::sqrt(3.0));
    }
    for (const auto& f : parsed.faces) {
        const Facet& want = g.pattern->facets[(std::size_t)(&f - parsed.faces.data())];
        CHECK(f[0] == want.a);
        CHECK(f[1] == want.b);
        CHECK(f[2] == want.c);
    }
}

TEST_CASE("csv headers match the documented contracts byte-exactly") {
    const auto params = YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0);
    const std::string curve = write_fold_curve_csv(fold_curve(params, 11));
    std::istringstream in(curve);
    std::string comment, header;
    std::getline(in, comment);
    std::getline(in, header);
    CHECK(comment.rfind("# yoshigrip", 0) == 0);
    CHECK(header == "fraction,theta_deg,handle_sep_mm,tip_aperture_mm,transmission_ratio");

    const EnergyModel model = EnergyModel::for_params(params);
    const std::string force = write_force_curve_csv(force_curves(model, params, 21));
    std::istringstream fin(force);
    std::getline(fin, comment);
    std::getline(fin, header);
    CHECK(header == "pull_distance_mm,pull_force,pinch_force,stiffness");
}

TEST_CASE("csv numeric fields round-trip at print precision") {
    const auto params = YoshimuraParams::uniform(25.0, 40.0, 6, 2, 10.0);
    const FoldCurve curve = fold_curve(params, 11);
    const std::string csv = write_fold_curve_csv(curve);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // comment
    std::getline(in, line);  // header
    std::size_t row = 0;
    while (std::getline(in, line)) {
        double f, th, x, a, tr;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &f, &th, &x, &a, &tr) == 5);
        CHECK(std::abs(th - curve.samples[row].theta_deg) <= 5e-7);
        CHECK(std::abs(x - curve.samples[row].handle_sep_mm) <= 5e-7);
        ++row;
    }
    CHECK(row == curve.samples.size());
}

TEST_CASE("atomic write leaves the target and no temp file") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "yoshigrip_test_out";
    fs::remove_all(dir);
    const std::string path = (dir / "nested" / "file.txt").string();
    atomic_write_file(path, "payload");
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == "payload");
    CHECK_FALSE(fs::exists(path + ".tmp"));
    fs::remove_all(dir);
}
