#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/cone/spacetime.hpp"
#include "lorentz/core/curve.hpp"
#include "lorentz/core/parallel.hpp"
#include "lorentz/core/space.hpp"

namespace lorentz::cone {

struct LatticeSpec {
    Region region;
    double h = 0.01;
    int R = 4;
    int quadrature = 4;  // Gauss-Legendre points per edge
};

struct LatticeMeta {
    std::string spacetime;  // ConeField::id()
    LatticeSpec spec;
    double period0 = 0.0;
    int n0 = 0, n1 = 0;     // grid extent
};

struct EdgeRecord {
    std::int32_t from;
    std::int32_t to;
    double length;
};

// Longest-path substrate over grid nodes. Immutable after construction.
class CausalLattice : public SpaceHandle<int> {
public:
    // nodes[k] has grid index grid[k] = (i, j); edges in any order.
    CausalLattice(LatticeMeta meta, std::vector<Vec2> nodes, std::vector<std::pair<int, int>> grid,
                  std::vector<EdgeRecord> edges);

    const LatticeMeta& meta() const { return meta_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    std::size_t edge_count() const { return src_.size(); }
    Vec2 coord(int v) const { return nodes_[v]; }
    std::pair<int, int> grid_index(int v) const { return grid_[v]; }
    // Node at grid index, -1 if absent.
    int node(int i, int j) const;
    // Node nearest to p, -1 if none within tol (absolute, coordinate units).
    int node_at(Vec2 p, double tol = 1e-9) const;
    bool cyclic() const { return cyclic_; }

    // In-edges of v: sources and lengths, shortest displacement first.
    std::span<const std::int32_t> in_sources(int v) const;
    std::span<const double> in_lengths(int v) const;
    std::vector<EdgeRecord> edges() const;

    struct Paths {
        std::vector<double> dist;  // -inf unreachable, +inf through a positive cycle
        std::vector<std::int32_t> pred;
    };
    // Single-source longest paths; when `until` >= 0 the sweep may stop once it is settled.
    Paths longest_paths(int x, int until = -1) const;

    bool chron(const int& x, const int& y) const override;
    bool caus(const int& x, const int& y) const override;
    ExtTime tau(const int& x, const int& y) const override;
    double dist(const int& x, const int& y) const override;
    std::vector<ExtTime> tau_row(const int& x, std::span<const int> ys) const override;
    std::vector<char> chron_row(const int& x, std::span<const int> ys) const override;
    Backend backend() const override { return Backend::lattice_spacetime; }
    Exactness exactness() const override { return Exactness::lower_approximate; }
    std::string id() const override;
    double tolerance() const override { return 1e-9; }

private:
    void order_acyclic();
    void order_cyclic();

    LatticeMeta meta_;
    std::vector<Vec2> nodes_;
    std::vector<std::pair<int, int>> grid_;
    std::vector<int> grid_lookup_;
    std::vector<std::int64_t> in_off_;
    std::vector<std::int32_t> src_;
    std::vector<double> len_;
    std::vector<int> order_;  // topological order (acyclic) or node order grouped by component
    std::vector<int> pos_;
    bool cyclic_ = false;
    // Cyclic case: component id per node, components in topological order, positive-cycle flag.
    std::vector<int> comp_;
    std::vector<std::vector<int>> comp_nodes_;
    std::vector<char> comp_positive_;
};

// Grid nodes of `spec` inside the field's membership set and domain.
struct LatticeNodes {
    std::vector<Vec2> coords;
    std::vector<std::pair<int, int>> grid;
    int n0 = 0, n1 = 0;
};
LatticeNodes lattice_nodes(const ConeField& field, const LatticeSpec& spec);

// Edge kernel: future-causal stencil displacements with quadrature lengths.
std::vector<EdgeRecord> build_edges(const ConeField& field, const LatticeSpec& spec, const LatticeNodes& nodes,
                                    Exec exec = Exec::parallel);

CausalLattice build_lattice(const ConeField& field, const LatticeSpec& spec, Exec exec = Exec::parallel);

ExtTime lattice_tau(const CausalLattice& lat, int x, int y);

// tau for many (x, y) pairs; single-source sweeps shared per distinct x.
std::vector<ExtTime> lattice_tau_many(const CausalLattice& lat, std::span<const std::pair<int, int>> pairs,
                                      Exec exec = Exec::parallel);

PolylineCurve<int> extract_maximizer(const CausalLattice& lat, int x, int y);
PolylineCurve<Vec2> to_coordinates(const CausalLattice& lat, const PolylineCurve<int>& c);

// Gauss-Legendre nodes and weights on [0, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int order);

}  // namespace lorentz::cone
