#pragma once

#include "lorentz/core/curve.hpp"
#include "lorentz/core/vec.hpp"

namespace lorentz::cone {

// Infalling E = 1 radial-plane pregeodesics t = +-t_plus(r) + const in the interior leaf.
double t_plus(double M, double r);
double t_plus_prime(double M, double r);
// Solve t_plus(r) = target (target < 0) on (0, 2M); returns r and the residual.
double solve_t_plus(double M, double target, double* residual = nullptr);

// Proper time along an E = 1 leg between radii r1 and r2.
double infall_proper_time(double M, double r1, double r2);
// Proper time along the E = 0 leg (t = const) by quadrature of dr / sqrt(2M/r - 1).
double radial_proper_time(double M, double r1, double r2);

struct TriangleFamilyRecord {
    double M = 1.0, C = 0.5;
    int k = 1;
    Vec2 x, y, z;  // (r, t)
    double a = 0, b = 0, c = 0;
    double residual = 0;            // worst root-finding residual of the vertex radii
    double scalar_product = 0;      // <T_0, T_+> at z from the metric
    double scalar_product_closed = 0;  // -1 / sqrt(1 - t_+'^2 (2M/r - 1)^2)
};

TriangleFamilyRecord schwarzschild_family(double M, double C, int k);

// Sampled sides of the family triangle (future order, params by r-distance from the past vertex).
PolylineCurve<Vec2> schwarzschild_side_xy(const TriangleFamilyRecord& f, int samples);
PolylineCurve<Vec2> schwarzschild_side_yz(const TriangleFamilyRecord& f, int samples);
PolylineCurve<Vec2> schwarzschild_side_xz(const TriangleFamilyRecord& f, int samples);

}  // namespace lorentz::cone
