#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "lorentz/core/curve.hpp"
#include "lorentz/core/space.hpp"

namespace lorentz {

enum class CausalCharacter { timelike, null, mixed_causal };

inline const char* to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::timelike: return "timelike";
        case CausalCharacter::null: return "null";
        default: return "mixed-causal";
    }
}

// Segment values tau(p_i, p_{i+1}) in future order; throws NonCausalStep.
template <class P>
std::vector<ExtTime> segment_taus(const SpaceHandle<P>& space, const PolylineCurve<P>& curve) {
    const auto pts = curve.future_points();
    std::vector<ExtTime> out;
    out.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!space.caus(pts[i], pts[i + 1])) throw NonCausalStep(i);
        out.push_back(space.tau(pts[i], pts[i + 1]));
    }
    return out;
}

// Sum of tau over the curve's own partition, accumulated left to right.
// Over-estimates the infimum over partitions; converges from above under refinement.
template <class P>
ExtTime tau_length(const SpaceHandle<P>& space, const PolylineCurve<P>& curve) {
    ExtTime total;
    for (ExtTime t : segment_taus(space, curve)) total += t;
    return total;
}

template <class P>
CausalCharacter causal_character(const SpaceHandle<P>& space, const PolylineCurve<P>& curve) {
    const auto pts = curve.future_points();
    std::size_t related = 0, pairs = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        std::span<const P> rest(pts.data() + i + 1, pts.size() - i - 1);
        for (char c : space.chron_row(pts[i], rest)) {
            related += c ? 1 : 0;
            ++pairs;
        }
    }
    if (related == pairs) return CausalCharacter::timelike;
    if (related == 0) return CausalCharacter::null;
    return CausalCharacter::mixed_causal;
}

template <class P>
bool is_maximal(const SpaceHandle<P>& space, const PolylineCurve<P>& curve, double tol) {
    const auto pts = curve.future_points();
    ExtTime ends = space.tau(pts.front(), pts.back());
    if (ends.is_infinite()) throw Error("maximality undefined at infinite time separation");
    ExtTime len = tau_length(space, curve);
    if (len.is_infinite()) return false;
    return std::abs(len.value() - ends.value()) <= tol * std::max(1.0, ends.value());
}

// Params replaced by cumulative tau-length of the prefix (future order).
template <class P>
PolylineCurve<P> reparametrize_by_tau(const SpaceHandle<P>& space, const PolylineCurve<P>& curve) {
    const auto seg = segment_taus(space, curve);
    std::vector<double> s(seg.size() + 1, 0.0);
    for (std::size_t i = 0; i < seg.size(); ++i) {
        if (seg[i].is_infinite()) throw Error("reparametrize_by_tau: infinite tau-length");
        if (!seg[i].positive()) throw Error("non-rectifiable: zero tau-length segment at index " + std::to_string(i));
        s[i + 1] = s[i] + seg[i].value();
    }
    return PolylineCurve<P>(std::move(s), curve.future_points(), Orientation::future);
}

struct RefinementEstimate {
    double coarse = 0.0;
    double fine = 0.0;
    double gap() const { return std::abs(fine - coarse); }
};

}  // namespace lorentz
