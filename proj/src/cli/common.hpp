#pragma once

#include <memory>
#include <string>

#include "lorentz/cli/run.hpp"
#include "lorentz/cli/scene.hpp"
#include "lorentz/cone/analytic.hpp"
#include "lorentz/cone/lattice.hpp"
#include "lorentz/cone/spacetime.hpp"
#include "lorentz/finite/finite_space.hpp"
#include "lorentz/finite/topology.hpp"
#include "lorentz/model/model_space.hpp"

namespace lorentz::cli::detail {

std::unique_ptr<cone::ConeField> make_field(const Scene& s);
// Built or loaded from the scene's cache file.
std::shared_ptr<const cone::CausalLattice> make_lattice(const Scene& s, const cone::ConeField& field);
std::shared_ptr<const cone::CausalLattice> make_lattice(const cone::ConeField& field, const cone::LatticeSpec& spec,
                                                        const std::string& cache = {});
// Exact (r, t) / (t, x) spaces: minkowski2, schwarzschild, funnel.
std::unique_ptr<SpaceHandle<Vec2>> make_exact(const Scene& s);
finite::FiniteCausalSpace make_finite(const Scene& s);

Vec2 point(const Json& v, const std::string& where);
int lattice_node(const cone::CausalLattice& lat, Vec2 p, const std::string& where);
int finite_label(const Json& v, int n, const std::string& where);

Json topology_json(const finite::TopologyReport& r);
void topology_lines(Artifacts& a, const finite::TopologyReport& r);

std::string fmt(double v);
std::string fmt(ExtTime t);
std::string fmt(Vec2 p);

}  // namespace lorentz::cli::detail
