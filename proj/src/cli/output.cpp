#include <cstdio>
#include <fstream>

#include "common.hpp"
#include "lorentz/cli/run.hpp"

namespace lorentz::cli {

namespace detail {

void add_check(Artifacts& a, std::string name, bool pass, std::string detail) {
    a.report.push_back(std::string(pass ? "[pass] " : "[FAIL] ") + name + (detail.empty() ? "" : ": " + detail));
    a.checks.push_back({std::move(name), pass, std::move(detail)});
    if (!pass && a.exit_code == kOk) a.exit_code = kCheckFailed;
}

}  // namespace detail

std::string polyline_csv(const PolylineCurve<Vec2>& c) {
    std::string out = "param,coord1,coord2\n";
    char buf[96];
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", c.params()[i], c.points()[i].x0, c.points()[i].x1);
        out += buf;
    }
    return out;
}

void write_artifacts(const Artifacts& a, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw Error("cannot write " + (dir / name).string());
        f << text;
    };
    std::string report;
    for (const auto& l : a.report) report += l + "\n";
    write("report.txt", report);

    Json result = a.result;
    if (!a.checks.empty()) {
        Json checks = Json::array();
        for (const auto& c : a.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        result["checks"] = checks;
    }
    result["exit_code"] = a.exit_code;
    write("result.json", result.dump(2) + "\n");
    for (const auto& [name, curve] : a.polylines) write(name + ".csv", polyline_csv(curve));
}

}  // namespace lorentz::cli
