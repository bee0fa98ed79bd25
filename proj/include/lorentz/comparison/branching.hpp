#pragma once

#include "lorentz/comparison/comparison.hpp"
#include "lorentz/cone/lattice.hpp"

namespace lorentz::comparison {

// Maximizers x -> y1 and x -> y2 from one longest-path tree; the branch point is the last common node.
// A shared segment counts when its Euclidean length exceeds min_shared (a null shared segment qualifies).
BranchReport detect_branching(const cone::CausalLattice& lat, int x, int y1, int y2, double min_shared);

}  // namespace lorentz::comparison
