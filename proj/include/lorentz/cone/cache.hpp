#pragma once

#include <string>

#include "lorentz/cone/lattice.hpp"

namespace lorentz::cone {

inline constexpr int kLatticeCacheVersion = 1;

// Structured text with hexadecimal floats; reload reproduces tau bit-exactly.
void save_lattice(const CausalLattice& lat, const std::string& path);
CausalLattice load_lattice(const std::string& path);

}  // namespace lorentz::cone
