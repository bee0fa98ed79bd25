#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/cli/scene.hpp"
#include "lorentz/core/curve.hpp"
#include "lorentz/core/ext_time.hpp"
#include "lorentz/core/vec.hpp"

namespace lorentz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidScene = 2, kNumericalFailure = 3 };

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Artifacts {
    int exit_code = kOk;
    std::vector<std::string> report;  // lines of report.txt
    Json result = Json::object();
    std::vector<std::pair<std::string, PolylineCurve<Vec2>>> polylines;  // name.csv
    std::vector<Check> checks;
};

Artifacts run_scene(const Scene& scene);

const std::vector<std::string>& reproduce_ids();
// The pinned scene of a reproduce id.
Scene pinned_scene(const std::string& id);
Artifacts reproduce(const std::string& id);

// report.txt, result.json and one CSV per polyline.
void write_artifacts(const Artifacts& a, const std::filesystem::path& dir);
std::string polyline_csv(const PolylineCurve<Vec2>& c);

Json time_json(ExtTime t);
Json vec_json(Vec2 p);

namespace detail {
Artifacts run_reproduce(const Scene& scene);
void add_check(Artifacts& a, std::string name, bool pass, std::string detail = {});
}  // namespace detail

}  // namespace lorentz::cli
