#include "yoshigrip/exporters.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "yoshigrip/errors.hpp"
#include "yoshigrip/version.hpp"

namespace yoshigrip {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string version_comment_csv() {
    return std::string("# ") + kToolkitName + " " + kToolkitVersion + "\n";
}

void append_segment(std::string& out, const Pt2& a, const Pt2& b) {
    out += "      <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
           "\" y2=\"" + fmt(b.y) + "\"/>\n";
}

}  // namespace

std::string export_svg(const CreasePattern2D& pattern) {
    double w = 0.0, h = 0.0;
    for (const Pt2& v : pattern.vertices) {
        w = std::max(w, v.x);
        h = std::max(h, v.y);
    }
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += std::string("<!-- ") + kToolkitName + " " + kToolkitVersion + " -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "mm\" height=\"" +
           fmt(h) + "mm\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";

    const struct {
        CreaseKind kind;
        const char* name;
        const char* stroke;
        const char* dash;
    } layers[] = {
        {CreaseKind::Mountain, "mountain", "#d62728", " stroke-dasharray=\"2,1\""},
        {CreaseKind::Valley, "valley", "#1f77b4", " stroke-dasharray=\"4,1,1,1\""},
        {CreaseKind::Boundary, "cut", "#000000", ""},
    };
    for (const auto& layer : layers) {
        out += std::string("    <g id=\"") + layer.name + "\" fill=\"none\" stroke=\"" +
               layer.stroke + "\" stroke-width=\"0.25\"" + layer.dash + ">\n";
        for (const Crease& c : pattern.creases) {
            if (c.kind != layer.kind) continue;
            append_segment(out, pattern.vertices[static_cast<std::size_t>(c.v0)],
                           pattern.vertices[static_cast<std::size_t>(c.v1)]);
        }
        out += "    </g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string export_obj(const FoldedGeometry& geom) {
    std::string out;
    out += std::string("# ") + kToolkitName + " " + kToolkitVersion + "\n";
    for (const Vec3& v : geom.vertices3d) {
        out += "v " + fmt(v.x) + " " + fmt(v.y) + " " + fmt(v.z) + "\n";
    }
    for (const Facet& f : geom.pattern->facets) {
        out += "f " + std::to_string(f.a + 1) + " " + std::to_string(f.b + 1) + " " +
               std::to_string(f.c + 1) + "\n";
    }
    return out;
}

std::string write_fold_curve_csv(const FoldCurve& curve) {
    std::string out = version_comment_csv();
    out += "fraction,theta_deg,handle_sep_mm,tip_aperture_mm,transmission_ratio\n";
    for (const FoldCurveSample& s : curve.samples) {
        out += fmt(s.fraction) + "," + fmt(s.theta_deg) + "," + fmt(s.handle_sep_mm) + "," +
               fmt(s.tip_aperture_mm) + "," + fmt(s.transmission_ratio) + "\n";
    }
    return out;
}

std::string write_force_curve_csv(const ForceCurve& curve) {
    std::string out = version_comment_csv();
    out += "pull_distance_mm,pull_force,pinch_force,stiffness\n";
    for (const ForceSample& s : curve.samples) {
        out += fmt(s.pull_distance_mm) + "," + fmt(s.pull_force) + "," +
               (s.pinch_valid ? fmt(s.pinch_force) : std::string()) + "," + fmt(s.stiffness) +
               "\n";
    }
    return out;
}

std::string write_sweep_csv(const SweepResult& result) {
    std::string out = version_comment_csv();
    out += "# " + result.provenance + "\n";
    out += "alpha_deg,length_mm,objective,feasible\n";
    for (const SweepRow& r : result.rows) {
        out += fmt(r.alpha_deg) + "," + fmt(r.length_mm) + "," + fmt(r.objective_value) + "," +
               (r.feasible ? "1" : "0") + "\n";
    }
    return out;
}

std::string write_sweep_argmax_json(const SweepResult& result) {
    const SweepRow& best = result.rows.at(static_cast<std::size_t>(result.argmax_index));
    nlohmann::json doc;
    doc["toolkit_version"] = std::string(kToolkitName) + " " + kToolkitVersion;
    doc["provenance"] = result.provenance;
    doc["alpha_deg"] = best.alpha_deg;
    doc["length_mm"] = best.length_mm;
    doc["objective_value"] = best.objective_value;
    return doc.dump(2) + "\n";
}

std::string write_grasp_report_json(const GraspReport& report, const ObjectSpec& obj) {
    nlohmann::json doc;
    doc["toolkit_version"] = std::string(kToolkitName) + " " + kToolkitVersion;
    doc["object"] = {{"kind", to_string(obj.kind)},
                     {"diameters_mm", obj.diameters_mm},
                     {"burial_depth_mm", obj.burial_depth_mm}};
    doc["grasp_type"] = to_string(report.grasp_type);
    doc["feasible"] = report.feasible;
    doc["best_fraction"] = report.best_fraction;
    doc["chamber_volume_mm3"] = report.chamber_volume_mm3;
    doc["max_inscribed_sphere_mm"] = report.max_inscribed_sphere_mm;
    doc["aperture_mm"] = report.aperture_mm;
    doc["contact_count"] = report.contact_count;
    doc["pullout_proxy"] = report.pullout_proxy;
    return doc.dump(2) + "\n";
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

ParsedObj parse_obj(const std::string& text) {
    ParsedObj out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) {
            Vec3 v;
            if (std::sscanf(line.c_str(), "v %lf %lf %lf", &v.x, &v.y, &v.z) != 3)
                throw ParseError("bad OBJ vertex line: " + line);
            out.vertices.push_back(v);
        } else if (line.rfind("f ", 0) == 0) {
            std::array<int, 3> f{};
            if (std::sscanf(line.c_str(), "f %d %d %d", &f[0], &f[1], &f[2]) != 3)
                throw ParseError("bad OBJ face line: " + line);
            for (int& i : f) i -= 1;
            out.faces.push_back(f);
        }
    }
    return out;
}

std::map<std::string, std::vector<std::array<double, 4>>> parse_svg_segments(
    const std::string& text) {
    std::map<std::string, std::vector<std::array<double, 4>>> out;
    std::istringstream in(text);
    std::string line;
    std::string group;
    while (std::getline(in, line)) {
        const auto gpos = line.find("<g id=\"");
        if (gpos != std::string::npos) {
            const auto start = gpos + 7;
            const auto end = line.find('"', start);
            group = line.substr(start, end - start);
            out[group];
            continue;
        }
        if (line.find("</g>") != std::string::npos) {
            group.clear();
            continue;
        }
        const auto lpos = line.find("<line ");
        if (lpos != std::string::npos && !group.empty()) {
            std::array<double, 4> seg{};
            if (std::sscanf(line.c_str() + lpos,
                            "<line x1=\"%lf\" y1=\"%lf\" x2=\"%lf\" y2=\"%lf\"/>", &seg[0],
                            &seg[1], &seg[2], &seg[3]) != 4)
                throw ParseError("bad SVG line element: " + line);
            out[group].push_back(seg);
        }
    }
    return out;
}

}  // namespace yoshigrip
