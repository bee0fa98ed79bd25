#pragma once

#include <array>
#include <string>

#include "lorentz/core/space.hpp"

namespace lorentz::model {

// K = 0: c = (t, x, 0). K > 0: embedding coordinates with form diag(-1,1,1), <v,v> = r^2.
// K < 0: form diag(-1,-1,1), <v,v> = -r^2. r = 1/sqrt|K|.
struct ModelPoint {
    double K = 0.0;
    std::array<double, 3> c{};
    friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
};

double radius(double K);
// Bilinear form of M_K's ambient space (K = 0: Minkowski on (t, x)).
double form(double K, const std::array<double, 3>& u, const std::array<double, 3>& v);
// Deviation from the embedding constraint relative to max(r^2, |c|^2).
double constraint_residual(const ModelPoint& p);

// Point from intrinsic coordinates (time-like T, space-like X):
// K = 0 (T, X); K > 0 r(sinh T, cosh T cos X, cosh T sin X); K < 0 r(cosh X cos T, cosh X sin T, sinh X).
// For K != 0, T and X are in units of r.
ModelPoint chart_point(double K, double T, double X);

ExtTime model_tau(double K, const ModelPoint& p, const ModelPoint& q);
bool model_chron(double K, const ModelPoint& p, const ModelPoint& q);
bool model_caus(double K, const ModelPoint& p, const ModelPoint& q);

// Point at tau-arclength s on the unit-speed geodesic from p with unit future timelike tangent u.
ModelPoint geodesic_point(double K, const ModelPoint& p, const std::array<double, 3>& u, double s);
// Unit tangent at p of the geodesic p -> q of length L.
std::array<double, 3> initial_tangent(double K, const ModelPoint& p, const ModelPoint& q, double L);
// Tangent at parameter s of that geodesic.
std::array<double, 3> tangent_at(double K, const ModelPoint& p, const std::array<double, 3>& u, double s);

bool realizable(double K, double a, double b, double c);
// Empty when realizable, else the failed condition.
std::string realizability_failure(double K, double a, double b, double c);

enum class Side { xy, yz, xz };
enum class Vertex { x, y, z };
const char* to_string(Side s);

struct ModelTriangle {
    double K = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    ModelPoint x, y, z;
    bool degenerate_a = false;  // y == x
    bool degenerate_b = false;  // y == z
    double side_length(Side s) const { return s == Side::xy ? a : s == Side::yz ? b : c; }
};

ModelTriangle realize_triangle(double K, double a, double b, double c);

ModelPoint side_point(const ModelTriangle& tri, Side side, double s);

struct SidePos {
    Side side;
    double s;
};

ExtTime comparison_tau(const ModelTriangle& tri, SidePos p, SidePos q);

// Angle between the two future unit tangents meeting at a vertex of a realized triangle.
double vertex_angle(const ModelTriangle& tri, Vertex v);
// Angle at the joint vertex of sides a and b.
double hyperbolic_angle(double K, double a, double b, double c);

class ModelSpace : public SpaceHandle<ModelPoint> {
public:
    explicit ModelSpace(double K) : K_(K) {}
    double curvature() const { return K_; }

    bool chron(const ModelPoint& p, const ModelPoint& q) const override { return model_chron(K_, p, q); }
    bool caus(const ModelPoint& p, const ModelPoint& q) const override { return model_caus(K_, p, q); }
    ExtTime tau(const ModelPoint& p, const ModelPoint& q) const override { return model_tau(K_, p, q); }
    double dist(const ModelPoint& p, const ModelPoint& q) const override;
    Backend backend() const override { return Backend::model_space; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override;
    double tolerance() const override { return 1e-11; }

private:
    double K_;
};

}  // namespace lorentz::model
