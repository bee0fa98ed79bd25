#include "lorentz/cli/scene.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace lorentz::cli {

namespace {

using Keys = std::vector<std::string>;

void only_keys(const Json& obj, const std::string& where, const Keys& allowed) {
    if (!obj.is_object()) throw SceneError(where, "expected an object");
    for (const auto& [k, v] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw SceneError(where + "/" + k, "unknown key '" + k + "'");
}

void require(const Json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) throw SceneError(where + "/" + key, "missing required key '" + key + "'");
}

double number(const Json& obj, const std::string& where, const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw SceneError(where + "/" + key, "expected a number");
    return v.get<double>();
}

int integer(const Json& obj, const std::string& where, const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw SceneError(where + "/" + key, "expected an integer");
    return v.get<int>();
}

const std::map<std::string, Keys>& spacetime_keys() {
    static const std::map<std::string, Keys> m{
        {"minkowski2", {"kind"}},
        {"minkowski3", {"kind"}},
        {"cylinder", {"kind", "period"}},
        {"bubbling", {"kind", "lambda"}},
        {"schwarzschild", {"kind", "M"}},
        {"funnel", {"kind", "p", "q"}},
        {"cone", {"kind", "left", "right", "alpha"}},
        {"model", {"kind", "K"}},
        {"finite", {"kind", "points", "relation", "leq", "file"}},
    };
    return m;
}

const std::map<std::string, Keys>& task_keys() {
    static const Keys family{"family", "count", "size", "ks", "C", "side_points", "sides", "triangles",
                             "points_per_side", "tol", "mode"};
    static const std::map<std::string, Keys> m = [] {
        std::map<std::string, Keys> t{
            {"tau", {"pairs"}},
            {"maximizer", {"from", "to"}},
            {"cones", {"point", "direction", "extent"}},
            {"audit", {"samples"}},
            {"ladder", {}},
            {"topology", {}},
            {"reproduce", {"id"}},
        };
        Keys compare = family;
        compare.insert(compare.end(), {"K", "side"});
        Keys scan = family;
        scan.push_back("K_grid");
        t["compare"] = compare;
        t["scan"] = scan;
        return t;
    }();
    return m;
}

void check_point(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SceneError(where, "expected a point [c1, c2]");
}

void validate_spacetime(const Json& st) {
    const std::string w = "/spacetime";
    if (!st.is_object()) throw SceneError(w, "expected an object");
    require(st, w, "kind");
    if (!st["kind"].is_string()) throw SceneError(w + "/kind", "expected a string");
    auto kind = st["kind"].get<std::string>();
    auto it = spacetime_keys().find(kind);
    if (it == spacetime_keys().end()) throw SceneError(w + "/kind", "unknown spacetime kind '" + kind + "'");
    only_keys(st, w, it->second);
    for (const auto& [k, v] : st.items()) {
        if (k == "kind" || k == "relation" || k == "leq" || k == "file") continue;
        if (k == "p" || k == "q") {
            check_point(v, w + "/" + k);
        } else if (k == "points") {
            (void)integer(st, w, k);
        } else {
            (void)number(st, w, k);
        }
    }
    if (kind == "finite") {
        if (st.contains("file") == st.contains("points"))
            throw SceneError(w, "finite spaces need exactly one of 'points' or 'file'");
        if (st.contains("file") && !st["file"].is_string()) throw SceneError(w + "/file", "expected a string");
        for (const char* k : {"relation", "leq"}) {
            if (!st.contains(k)) continue;
            const auto& rel = st[k];
            if (!rel.is_array()) throw SceneError(w + "/" + k, "expected a list of [a, b] pairs");
            for (std::size_t i = 0; i < rel.size(); ++i)
                if (!rel[i].is_array() || rel[i].size() != 2 || !rel[i][0].is_number_integer() ||
                    !rel[i][1].is_number_integer())
                    throw SceneError(w + "/" + k + "/" + std::to_string(i), "expected a pair of point labels");
        }
    }
    if (kind == "funnel") {
        require(st, w, "p");
        require(st, w, "q");
    }
    if (kind == "model") require(st, w, "K");
    if (kind == "cylinder") require(st, w, "period");
    if (kind == "cone") {
        require(st, w, "left");
        require(st, w, "right");
    }
}

}  // namespace

Scene parse_scene(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SceneError("", std::string("scene does not parse: ") + e.what());
    }
    only_keys(j, "", {"spacetime", "backend", "region", "h", "R", "quadrature", "cache", "task", "seed", "params"});
    require(j, "", "spacetime");
    require(j, "", "task");
    validate_spacetime(j["spacetime"]);

    Scene s;
    s.spacetime = j["spacetime"];
    s.kind = s.spacetime["kind"].get<std::string>();

    if (!j["task"].is_string()) throw SceneError("/task", "expected a string");
    s.task = j["task"].get<std::string>();
    auto tk = task_keys().find(s.task);
    if (tk == task_keys().end()) throw SceneError("/task", "unknown task '" + s.task + "'");
    if (j.contains("params")) {
        only_keys(j["params"], "/params", tk->second);
        s.params = j["params"];
    }
    if (s.task == "reproduce") require(s.params, "/params", "id");

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw SceneError("/seed", "expected a non-negative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }

    if (j.contains("region") || j.contains("h")) {
        require(j, "", "region");
        require(j, "", "h");
        const auto& r = j["region"];
        if (!r.is_array() || r.size() != 4 || !std::all_of(r.begin(), r.end(), [](const Json& v) { return v.is_number(); }))
            throw SceneError("/region", "expected [lo1, hi1, lo2, hi2]");
        cone::LatticeSpec spec;
        spec.region = {r[0].get<double>(), r[1].get<double>(), r[2].get<double>(), r[3].get<double>()};
        if (!(spec.region.lo0 < spec.region.hi0 && spec.region.lo1 < spec.region.hi1))
            throw SceneError("/region", "empty region");
        spec.h = number(j, "", "h");
        if (!(spec.h > 0)) throw SceneError("/h", "resolution must be positive");
        if (j.contains("R")) spec.R = integer(j, "", "R");
        if (j.contains("quadrature")) spec.quadrature = integer(j, "", "quadrature");
        if (spec.R < 1) throw SceneError("/R", "stencil radius must be at least 1");
        if (spec.quadrature < 1 || spec.quadrature > 16) throw SceneError("/quadrature", "expected 1..16 points");
        s.lattice = spec;
    } else {
        for (const char* k : {"R", "quadrature", "cache"})
            if (j.contains(k)) throw SceneError(std::string("/") + k, "only meaningful with 'region' and 'h'");
    }
    if (j.contains("cache")) {
        if (!j["cache"].is_string()) throw SceneError("/cache", "expected a path");
        s.cache = j["cache"].get<std::string>();
    }

    static const std::set<std::string> exact_kinds{"minkowski2", "minkowski3", "schwarzschild", "funnel", "model", "finite"};
    if (j.contains("backend")) {
        if (!j["backend"].is_string()) throw SceneError("/backend", "expected a string");
        s.backend = j["backend"].get<std::string>();
        if (s.backend != "exact" && s.backend != "lattice")
            throw SceneError("/backend", "expected 'exact' or 'lattice'");
    } else {
        s.backend = exact_kinds.count(s.kind) && !s.lattice ? "exact" : "lattice";
    }
    if (s.backend == "exact" && !exact_kinds.count(s.kind))
        throw SceneError("/backend", "no exact backend for '" + s.kind + "'");
    if (s.backend == "lattice") {
        if (s.kind == "model" || s.kind == "finite" || s.kind == "minkowski3")
            throw SceneError("/backend", "no lattice backend for '" + s.kind + "'");
        if (!s.lattice) throw SceneError("/region", "lattice backend needs 'region' and 'h'");
    }

    s.source = j;
    s.source["backend"] = s.backend;
    s.source["seed"] = s.seed;
    if (s.lattice) {
        s.source["R"] = s.lattice->R;
        s.source["quadrature"] = s.lattice->quadrature;
    }
    return s;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("", "cannot open scene file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

}  // namespace lorentz::cli
