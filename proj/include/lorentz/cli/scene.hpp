#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "lorentz/cone/lattice.hpp"
#include "lorentz/core/error.hpp"

namespace lorentz::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 20210517;

// Malformed or invalid scene; `where` is a JSON pointer to the offending field.
class SceneError : public Error {
public:
    SceneError(std::string where, const std::string& msg)
        : Error(where.empty() ? msg : where + ": " + msg), where(std::move(where)) {}
    std::string where;
};

struct Scene {
    Json spacetime;       // validated selector, "kind" plus parameters
    std::string kind;
    std::string backend;  // "exact" or "lattice"
    std::optional<cone::LatticeSpec> lattice;
    std::string cache;    // lattice cache file, empty for none
    std::string task;
    std::uint64_t seed = kDefaultSeed;
    Json params = Json::object();
    Json source;          // the scene as given, with defaults filled in
};

Scene parse_scene(const std::string& text);
Scene load_scene(const std::filesystem::path& path);

}  // namespace lorentz::cli
