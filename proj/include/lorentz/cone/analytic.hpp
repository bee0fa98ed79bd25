#pragma once

#include <memory>
#include <string>

#include "lorentz/cone/lattice.hpp"
#include "lorentz/cone/spacetime.hpp"
#include "lorentz/core/space.hpp"
#include "lorentz/core/vec.hpp"

namespace lorentz::cone {

double minkowski_tau(Vec2 p, Vec2 q);
double minkowski_tau(Vec3 p, Vec3 q);

class Minkowski2Space : public SpaceHandle<Vec2> {
public:
    bool chron(const Vec2& p, const Vec2& q) const override;
    bool caus(const Vec2& p, const Vec2& q) const override;
    ExtTime tau(const Vec2& p, const Vec2& q) const override { return minkowski_tau(p, q); }
    double dist(const Vec2& p, const Vec2& q) const override { return euclid(p, q); }
    Backend backend() const override { return Backend::smooth_spacetime; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override { return "minkowski2"; }
};

class Minkowski3Space : public SpaceHandle<Vec3> {
public:
    bool chron(const Vec3& p, const Vec3& q) const override;
    bool caus(const Vec3& p, const Vec3& q) const override;
    ExtTime tau(const Vec3& p, const Vec3& q) const override { return minkowski_tau(p, q); }
    double dist(const Vec3& p, const Vec3& q) const override { return euclid(p, q); }
    Backend backend() const override { return Backend::smooth_spacetime; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override { return "minkowski3"; }
};

// Interior leaf in (r, t). tau by shooting radial-plane geodesics with conserved energy E.
class SchwarzschildSpace : public SpaceHandle<Vec2> {
public:
    explicit SchwarzschildSpace(double M = 1.0);
    double mass() const { return M_; }
    // Largest |dt| of a causal curve from r1 down to r2.
    double null_span(double r1, double r2) const;
    // Coordinate-time advance of the geodesic with energy E from r1 down to r2.
    double time_advance(double E, double r1, double r2) const;
    double proper_time(double E, double r1, double r2) const;
    // Energy of the geodesic joining p to q (q to the future of p).
    double shooting_energy(const Vec2& p, const Vec2& q) const;

    bool chron(const Vec2& p, const Vec2& q) const override;
    bool caus(const Vec2& p, const Vec2& q) const override;
    ExtTime tau(const Vec2& p, const Vec2& q) const override;
    double dist(const Vec2& p, const Vec2& q) const override { return euclid(p, q); }
    Backend backend() const override { return Backend::smooth_spacetime; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override;
    double tolerance() const override { return 1e-9; }

private:
    void check(const Vec2& p) const;
    double M_;
};

// Bubbling spacetime on u >= 0: relations by timelike / causal curve classes in closed form,
// tau from a lattice (points snapped to its nodes).
class BubblingSpace : public SpaceHandle<Vec2> {
public:
    BubblingSpace(double lambda, std::shared_ptr<const CausalLattice> lattice);
    double lambda() const { return lambda_; }
    const CausalLattice& lattice() const { return *lat_; }

    // Left null boundary integral G(u) = int_0^u dr / (2 - r^lambda).
    double left_integral(double u) const;
    // Lower-right boundary of J+(p) at x >= p.x1 (p.x0 > 0), or of I+(p) when p.x0 = 0.
    double right_boundary(Vec2 p, double x) const;
    int snap(const Vec2& p) const;

    bool chron(const Vec2& p, const Vec2& q) const override;
    bool caus(const Vec2& p, const Vec2& q) const override;
    ExtTime tau(const Vec2& p, const Vec2& q) const override;
    double dist(const Vec2& p, const Vec2& q) const override { return euclid(p, q); }
    Backend backend() const override { return Backend::lattice_spacetime; }
    Exactness exactness() const override { return Exactness::lower_approximate; }
    std::string id() const override;
    double tolerance() const override { return 1e-9; }

private:
    double lambda_;
    std::shared_ptr<const CausalLattice> lat_;
};

// Causal funnel with closed-form tau; points must lie in X.
class FunnelSpace : public SpaceHandle<Vec2> {
public:
    FunnelSpace(Vec2 p, Vec2 q) : field_(p, q) {}
    const Funnel& field() const { return field_; }

    bool chron(const Vec2& a, const Vec2& b) const override { return tau(a, b).positive(); }
    bool caus(const Vec2& a, const Vec2& b) const override;
    ExtTime tau(const Vec2& a, const Vec2& b) const override;
    double dist(const Vec2& a, const Vec2& b) const override { return euclid(a, b); }
    Backend backend() const override { return Backend::restricted_subset; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override { return field_.id(); }

private:
    // Best over admissible piece assignments; negative when not causally related.
    double best(const Vec2& a, const Vec2& b) const;
    Funnel field_;
};

}  // namespace lorentz::cone
