#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lorentz/core/space.hpp"

namespace lorentz {

enum class Exec { serial, parallel };

// Row-major n x n matrix of tau(points[i], points[j]).
template <class P>
std::vector<ExtTime> tau_matrix(const SpaceHandle<P>& space, std::span<const P> points,
                                Exec exec = Exec::parallel) {
    const std::size_t n = points.size();
    std::vector<ExtTime> m(n * n);
    auto row = [&](std::ptrdiff_t i) {
        auto r = space.tau_row(points[i], points);
        std::copy(r.begin(), r.end(), m.begin() + i * n);
    };
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) row(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) row(i);
    }
    return m;
}

template <class P>
std::vector<char> chron_matrix(const SpaceHandle<P>& space, std::span<const P> points,
                               Exec exec = Exec::parallel) {
    const std::size_t n = points.size();
    std::vector<char> m(n * n);
    auto row = [&](std::ptrdiff_t i) {
        auto r = space.chron_row(points[i], points);
        std::copy(r.begin(), r.end(), m.begin() + i * n);
    };
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) row(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) row(i);
    }
    return m;
}

}  // namespace lorentz
