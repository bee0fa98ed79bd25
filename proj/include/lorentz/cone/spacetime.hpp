#pragma once

#include <array>
#include <limits>
#include <memory>
#include <string>

#include "lorentz/core/vec.hpp"

namespace lorentz::cone {

struct Region {
    double lo0 = 0.0, hi0 = 0.0;
    double lo1 = 0.0, hi1 = 0.0;
    bool contains(Vec2 p) const { return p.x0 >= lo0 && p.x0 <= hi0 && p.x1 >= lo1 && p.x1 <= hi1; }
};

// A field of future cones with a Lorentz-Finsler length density on a 2D coordinate patch.
class ConeField {
public:
    virtual ~ConeField() = default;

    virtual std::string kind() const = 0;  // minkowski2, cylinder, bubbling, ...
    virtual std::string id() const = 0;    // kind plus parameters

    virtual Region domain() const {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf, -inf, inf};
    }
    // Period of the first coordinate, 0 when not periodic.
    virtual double period0() const { return 0.0; }

    // v future-directed causal at p; cone boundary counts (relative slack 1e-12).
    virtual bool future_causal(Vec2 p, Vec2 v) const = 0;
    // Length density of a future causal v; zero on the cone boundary.
    virtual double finsler(Vec2 p, Vec2 v) const = 0;
    // Future null directions {left, right} (left has the smaller second coordinate).
    virtual std::array<Vec2, 2> cone_edges(Vec2 p) const = 0;

    virtual bool metric_induced() const { return true; }
    // g_p(v, v) for metric-induced fields.
    virtual double metric(Vec2 p, Vec2 v) const = 0;

    // Restricted-subset fields (funnel) exclude points and segments.
    virtual bool contains(Vec2) const { return true; }
    virtual bool segment_inside(Vec2 a, Vec2 b) const { return contains(a) && contains(b); }
};

class Minkowski2 : public ConeField {
public:
    std::string kind() const override { return "minkowski2"; }
    std::string id() const override { return "minkowski2"; }
    bool future_causal(Vec2 p, Vec2 v) const override;
    double finsler(Vec2 p, Vec2 v) const override;
    std::array<Vec2, 2> cone_edges(Vec2 p) const override;
    double metric(Vec2, Vec2 v) const override { return -v.x0 * v.x0 + v.x1 * v.x1; }
};

// S^1 x R with the time coordinate periodic.
class LorentzCylinder : public Minkowski2 {
public:
    explicit LorentzCylinder(double period) : period_(period) {}
    std::string kind() const override { return "cylinder"; }
    std::string id() const override;
    double period0() const override { return period_; }

private:
    double period_;
};

// Coordinates (u, x): g = -(du + (1 - |u|^lambda) dx)^2 + dx^2, du future.
class Bubbling : public ConeField {
public:
    explicit Bubbling(double lambda = 0.5) : lambda_(lambda) {}
    double lambda() const { return lambda_; }
    std::string kind() const override { return "bubbling"; }
    std::string id() const override;
    bool future_causal(Vec2 p, Vec2 v) const override;
    double finsler(Vec2 p, Vec2 v) const override;
    std::array<Vec2, 2> cone_edges(Vec2 p) const override;
    double metric(Vec2 p, Vec2 v) const override;

private:
    double w(Vec2 p, Vec2 v) const;
    double lambda_;
};

// Coordinates (r, t), 0 < r < 2M: g = -(2M/r - 1)^{-1} dr^2 + (2M/r - 1) dt^2, future = decreasing r.
class SchwarzschildInterior : public ConeField {
public:
    explicit SchwarzschildInterior(double M = 1.0) : M_(M) {}
    double mass() const { return M_; }
    std::string kind() const override { return "schwarzschild"; }
    std::string id() const override;
    Region domain() const override;
    bool future_causal(Vec2 p, Vec2 v) const override;
    double finsler(Vec2 p, Vec2 v) const override;
    std::array<Vec2, 2> cone_edges(Vec2 p) const override;
    double metric(Vec2 p, Vec2 v) const override;
    bool contains(Vec2 p) const override { return p.x0 > 0 && p.x0 < 2 * M_; }
    double f(double r) const { return 2 * M_ / r - 1; }

private:
    double M_;
};

// Minkowski (t, x) restricted to J-(p) u [p, q] u J+(q), with [p, q] a straight causal segment.
class Funnel : public Minkowski2 {
public:
    Funnel(Vec2 p, Vec2 q);
    Vec2 p() const { return p_; }
    Vec2 q() const { return q_; }
    std::string kind() const override { return "funnel"; }
    std::string id() const override;
    bool contains(Vec2 a) const override;
    bool segment_inside(Vec2 a, Vec2 b) const override;

    bool in_past_cone(Vec2 a) const;    // a in J-(p)
    bool in_future_cone(Vec2 a) const;  // a in J+(q)
    bool on_curve(Vec2 a) const;        // a on [p, q]
    bool curve_timelike() const;

private:
    Vec2 p_, q_;
};

// Constant cone dx/dt in [left, right], F = (dx - left dt)^alpha (right dt - dx)^(1 - alpha).
class ConeStructure : public ConeField {
public:
    ConeStructure(double left, double right, double alpha);
    std::string kind() const override { return "cone"; }
    std::string id() const override;
    bool future_causal(Vec2 p, Vec2 v) const override;
    double finsler(Vec2 p, Vec2 v) const override;
    std::array<Vec2, 2> cone_edges(Vec2 p) const override;
    bool metric_induced() const override { return alpha_ == 0.5; }
    double metric(Vec2 p, Vec2 v) const override;

private:
    double left_, right_, alpha_;
};

}  // namespace lorentz::cone
