#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lorentz/core/error.hpp"

namespace lorentz {

enum class Orientation { future, past };

template <class P>
class PolylineCurve {
public:
    PolylineCurve(std::vector<double> params, std::vector<P> points,
                  Orientation orientation = Orientation::future)
        : params_(std::move(params)), points_(std::move(points)), orientation_(orientation) {
        if (params_.size() != points_.size()) throw Error("polyline: params/points size mismatch");
        if (points_.size() < 2) throw Error("polyline: need at least two points");
        for (std::size_t i = 1; i < params_.size(); ++i)
            if (!(params_[i] > params_[i - 1])) throw Error("polyline: params must be strictly increasing");
        bool distinct = false;
        for (std::size_t i = 1; i < points_.size() && !distinct; ++i) distinct = !(points_[i] == points_[0]);
        if (!distinct) throw Error("polyline: constant curve");
    }

    // Params 0, 1, ..., N.
    static PolylineCurve indexed(std::vector<P> points, Orientation o = Orientation::future) {
        std::vector<double> t(points.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
        return PolylineCurve(std::move(t), std::move(points), o);
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<double>& params() const { return params_; }
    const std::vector<P>& points() const { return points_; }
    Orientation orientation() const { return orientation_; }
    const P& front() const { return points_.front(); }
    const P& back() const { return points_.back(); }

    // Points in future order (reversed for past-oriented curves).
    std::vector<P> future_points() const {
        std::vector<P> pts = points_;
        if (orientation_ == Orientation::past) std::reverse(pts.begin(), pts.end());
        return pts;
    }

    // Contiguous sub-polyline [i, j].
    PolylineCurve slice(std::size_t i, std::size_t j) const {
        if (i >= j || j >= size()) throw Error("polyline: bad slice");
        return PolylineCurve(std::vector<double>(params_.begin() + i, params_.begin() + j + 1),
                             std::vector<P>(points_.begin() + i, points_.begin() + j + 1), orientation_);
    }

    PolylineCurve with_params(std::vector<double> t) const {
        return PolylineCurve(std::move(t), points_, orientation_);
    }

private:
    std::vector<double> params_;
    std::vector<P> points_;
    Orientation orientation_;
};

}  // namespace lorentz
