#pragma once

#include <optional>

#include "lorentz/cone/spacetime.hpp"
#include "lorentz/core/curve.hpp"

namespace lorentz::cone {

enum class Branch { left, right };
enum class Direction { future, past };

struct NullBoundaryOptions {
    double max_extent = 10.0;  // distance travelled in the second coordinate
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    std::optional<Region> region;  // defaults to the field's domain
};

struct NullBoundaryResult {
    PolylineCurve<Vec2> curve;  // params: distance travelled in the second coordinate
    bool hit_boundary = false;
    bool followed_boundary = false;  // continued along a boundary the null direction is tangent to
};

// Integrates the null direction field of one cone edge, parametrized by |delta x1|.
NullBoundaryResult null_boundary(const ConeField& field, Vec2 start, Branch branch, Direction direction,
                                 NullBoundaryOptions opt = {});

}  // namespace lorentz::cone
