#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lorentz/comparison/comparison.hpp"
#include "lorentz/cone/analytic.hpp"
#include "lorentz/cone/lattice.hpp"
#include "lorentz/cone/schwarzschild.hpp"
#include "lorentz/model/model_space.hpp"

namespace lorentz::comparison {

// Random timelike triangles in the square [0, size]^2 with straight sides of `side_points` points.
std::vector<TriangleInstance<Vec2>> minkowski_triangles(const cone::Minkowski2Space& space, int count,
                                                        std::uint64_t seed, double size = 1.0, int side_points = 5);

// Triangles realized in M_K itself, sides sampled along the model geodesics.
std::vector<TriangleInstance<model::ModelPoint>> model_triangles(const model::ModelSpace& space,
                                                                 std::span<const std::array<double, 3>> sides,
                                                                 int side_points = 9);

// Schwarzschild family members k in ks; side points located by exact proper time.
std::vector<TriangleInstance<Vec2>> schwarzschild_triangles(const cone::SchwarzschildSpace& space, double C,
                                                            std::span<const int> ks, int side_points = 65);

// Maximizing route in the funnel: straight pieces through p and q as needed.
std::vector<Vec2> funnel_route(const cone::Funnel& field, Vec2 a, Vec2 b);
TriangleInstance<Vec2> funnel_triangle(const cone::FunnelSpace& space, Vec2 x, Vec2 y, Vec2 z, std::string label = {});
// Small triangles with x on the curve just below q and y, z in J+(q).
std::vector<TriangleInstance<Vec2>> funnel_family(const cone::FunnelSpace& space);

// Sides are lattice maximizers between the three nodes.
TriangleInstance<int> lattice_triangle(const cone::CausalLattice& lat, int x, int y, int z, std::string label = {});

}  // namespace lorentz::comparison
