#pragma once

#include <algorithm>
#include <cmath>

namespace lorentz {

// |a - b| <= tol * max(1, |b|)
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline double rel_scale(double b) { return std::max(1.0, std::abs(b)); }

}  // namespace lorentz
