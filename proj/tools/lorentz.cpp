#include <CLI11.hpp>
#include <iostream>

#include "lorentz/cli/run.hpp"
#include "lorentz/core/error.hpp"

namespace {

int emit(const lorentz::cli::Artifacts& a, const std::string& out) {
    for (const auto& line : a.report) std::cout << line << "\n";
    if (!out.empty()) lorentz::cli::write_artifacts(a, out);
    return a.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentzian pre-length spaces: time separations, curvature comparison, worked examples"};
    app.require_subcommand(1);

    std::string scene_path, id, out;
    auto* run = app.add_subcommand("run", "Run a scene file");
    run->add_option("scene", scene_path, "Scene JSON")->required();
    run->add_option("--out", out, "Output directory");

    auto* rep = app.add_subcommand("reproduce", "Run a pinned example and check it");
    rep->add_option("id", id, "Example id")->required();
    rep->add_option("--out", out, "Output directory");

    auto* list = app.add_subcommand("list", "List example ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : lorentz::cli::kInvalidScene;
    }

    try {
        if (list->parsed()) {
            for (const auto& i : lorentz::cli::reproduce_ids()) std::cout << i << "\n";
            return 0;
        }
        if (run->parsed()) return emit(lorentz::cli::run_scene(lorentz::cli::load_scene(scene_path)), out);
        return emit(lorentz::cli::reproduce(id), out);
    } catch (const lorentz::cli::SceneError& e) {
        std::cerr << "invalid scene: " << e.what() << "\n";
        return lorentz::cli::kInvalidScene;
    } catch (const lorentz::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return lorentz::cli::kNumericalFailure;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid scene: " << e.what() << "\n";
        return lorentz::cli::kInvalidScene;
    }
}
