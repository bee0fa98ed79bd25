#include "common.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lorentz/cone/cache.hpp"

namespace lorentz::cli::detail {

namespace {

double param(const Json& st, const char* key, double fallback) { return st.contains(key) ? st[key].get<double>() : fallback; }

bool same_spec(const cone::LatticeSpec& a, const cone::LatticeSpec& b) {
    return a.region.lo0 == b.region.lo0 && a.region.hi0 == b.region.hi0 && a.region.lo1 == b.region.lo1 &&
           a.region.hi1 == b.region.hi1 && a.h == b.h && a.R == b.R && a.quadrature == b.quadrature;
}

}  // namespace

std::unique_ptr<cone::ConeField> make_field(const Scene& s) {
    const auto& st = s.spacetime;
    if (s.kind == "minkowski2") return std::make_unique<cone::Minkowski2>();
    if (s.kind == "cylinder") return std::make_unique<cone::LorentzCylinder>(st["period"].get<double>());
    if (s.kind == "bubbling") return std::make_unique<cone::Bubbling>(param(st, "lambda", 0.5));
    if (s.kind == "schwarzschild") return std::make_unique<cone::SchwarzschildInterior>(param(st, "M", 1.0));
    if (s.kind == "funnel")
        return std::make_unique<cone::Funnel>(point(st["p"], "/spacetime/p"), point(st["q"], "/spacetime/q"));
    if (s.kind == "cone")
        return std::make_unique<cone::ConeStructure>(st["left"].get<double>(), st["right"].get<double>(),
                                                     param(st, "alpha", 0.5));
    throw SceneError("/spacetime/kind", "'" + s.kind + "' has no cone field");
}

std::shared_ptr<const cone::CausalLattice> make_lattice(const cone::ConeField& field, const cone::LatticeSpec& spec,
                                                        const std::string& cache) {
    if (!cache.empty() && std::filesystem::exists(cache)) {
        auto lat = cone::load_lattice(cache);
        if (lat.meta().spacetime != field.id() || !same_spec(lat.meta().spec, spec))
            throw Error("cache " + cache + " was built for a different spacetime or resolution");
        return std::make_shared<const cone::CausalLattice>(std::move(lat));
    }
    auto lat = std::make_shared<const cone::CausalLattice>(cone::build_lattice(field, spec));
    if (!cache.empty()) cone::save_lattice(*lat, cache);
    return lat;
}

std::shared_ptr<const cone::CausalLattice> make_lattice(const Scene& s, const cone::ConeField& field) {
    if (!s.lattice) throw SceneError("/region", "task needs a lattice ('region' and 'h')");
    return make_lattice(field, *s.lattice, s.cache);
}

std::unique_ptr<SpaceHandle<Vec2>> make_exact(const Scene& s) {
    const auto& st = s.spacetime;
    if (s.kind == "minkowski2") return std::make_unique<cone::Minkowski2Space>();
    if (s.kind == "schwarzschild") return std::make_unique<cone::SchwarzschildSpace>(param(st, "M", 1.0));
    if (s.kind == "funnel")
        return std::make_unique<cone::FunnelSpace>(point(st["p"], "/spacetime/p"), point(st["q"], "/spacetime/q"));
    throw SceneError("/spacetime/kind", "no exact two-dimensional backend for '" + s.kind + "'");
}

finite::FiniteCausalSpace make_finite(const Scene& s) {
    const auto& st = s.spacetime;
    if (st.contains("file")) {
        std::ifstream in(st["file"].get<std::string>());
        if (!in) throw SceneError("/spacetime/file", "cannot open " + st["file"].get<std::string>());
        return finite::parse_finite_space(in);
    }
    int n = st["points"].get<int>();
    if (n < 1 || n > 64) throw SceneError("/spacetime/points", "expected 1..64 points");
    auto pairs = [&](const char* key) {
        std::vector<finite::Edge> out;
        if (!st.contains(key)) return out;
        for (std::size_t i = 0; i < st[key].size(); ++i) {
            std::string w = std::string("/spacetime/") + key + "/" + std::to_string(i);
            out.push_back({finite_label(st[key][i][0], n, w), finite_label(st[key][i][1], n, w)});
        }
        return out;
    };
    auto rel = pairs("relation");
    if (st.contains("leq")) return finite::FiniteCausalSpace(n, rel, pairs("leq"));
    return finite::FiniteCausalSpace(n, rel);
}

Vec2 point(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SceneError(where, "expected a point [c1, c2]");
    return {v[0].get<double>(), v[1].get<double>()};
}

int lattice_node(const cone::CausalLattice& lat, Vec2 p, const std::string& where) {
    int v = lat.node_at(p, 0.5 * lat.meta().spec.h * (1 + 1e-9));
    if (v < 0) throw SceneError(where, "point " + fmt(p) + " is not within h/2 of a lattice node");
    return v;
}

int finite_label(const Json& v, int n, const std::string& where) {
    if (!v.is_number_integer()) throw SceneError(where, "expected a point label");
    int k = v.get<int>();
    if (k < 1 || k > n) throw SceneError(where, "point label out of range 1.." + std::to_string(n));
    return k - 1;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(ExtTime t) { return t.is_infinite() ? "inf" : fmt(t.value()); }

std::string fmt(Vec2 p) { return "(" + fmt(p.x0) + ", " + fmt(p.x1) + ")"; }

}  // namespace lorentz::cli::detail
