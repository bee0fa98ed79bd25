#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/finite/finite_space.hpp"

namespace lorentz::finite {

using PointSet = std::uint64_t;  // bit i = point i; spaces up to 64 points

struct NamedSet {
    std::string name;  // e.g. "I+(1)", "I(1,2)" with 1-based labels
    PointSet members = 0;
};

struct BaseFailure {
    int point;        // 0-based
    std::string first;
    std::string second;
    PointSet intersection;
};

struct TopologyReport {
    int n = 0;
    std::vector<NamedSet> S;  // intervals I(x,y), distinct
    std::vector<NamedSet> P;  // I+(x), I-(x), distinct
    bool S_covers = false;
    bool P_covers = false;
    std::vector<int> S_uncovered;
    std::vector<int> P_uncovered;
    std::vector<BaseFailure> S_base_failures;
    std::vector<BaseFailure> P_base_failures;
    bool topologies_computed = false;
    std::vector<PointSet> alexandrov;     // generated by S
    std::vector<PointSet> chronological;  // generated by P
    bool alexandrov_in_chronological = false;
    bool equal = false;
    bool S_in_chronological = false;      // every I(x,y) open in the chronological topology
};

// Topology generated by a subbase on n points; empty when the family would exceed max_sets.
std::vector<PointSet> generate_topology(int n, const std::vector<PointSet>& subbase, std::size_t max_sets = 1u << 20);

TopologyReport topology_report(const FiniteCausalSpace& s, std::size_t max_sets = 1u << 20);

std::string set_to_string(PointSet s);  // "{6,7}" with 1-based labels

}  // namespace lorentz::finite
