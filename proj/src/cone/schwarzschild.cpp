#include "lorentz/cone/schwarzschild.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "lorentz/core/error.hpp"

namespace lorentz::cone {

double t_plus(double M, double r) {
    double s = std::sqrt(r / (2 * M));
    return 2.0 / 3.0 * (6 * M + r) * s - 4 * M * std::atanh(s);
}

double t_plus_prime(double M, double r) {
    double s2 = r / (2 * M);
    double s = std::sqrt(s2);
    return -s2 * s / (1 - s2);
}

double solve_t_plus(double M, double target, double* residual) {
    if (!(target < 0)) throw Error("solve_t_plus: target must be negative");
    auto F = [&](double r) { return t_plus(M, r) - target; };
    double lo = 1e-300, hi = 2 * M * (1 - 1e-15);
    if (!(F(lo) > 0 && F(hi) < 0)) throw Error("schwarzschild family: intersection outside (0, 2M)");
    std::uintmax_t iters = 300;
    auto [a, b] = boost::math::tools::toms748_solve(F, lo, hi, boost::math::tools::eps_tolerance<double>(53), iters);
    double r = 0.5 * (a + b);
    if (residual) *residual = std::abs(F(r));
    return r;
}

double infall_proper_time(double M, double r1, double r2) {
    return std::sqrt(2.0 / M) / 3.0 * std::abs(std::pow(r1, 1.5) - std::pow(r2, 1.5));
}

double radial_proper_time(double M, double r1, double r2) {
    if (r1 < r2) std::swap(r1, r2);
    auto g = [&](double r) { return 1.0 / std::sqrt(2 * M / r - 1); };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, r2, r1, 15, 1e-12);
}

TriangleFamilyRecord schwarzschild_family(double M, double C, int k) {
    if (!(M > 0 && C > 0 && k >= 1)) throw Error("schwarzschild_family: need M > 0, C > 0, k >= 1");
    TriangleFamilyRecord f;
    f.M = M;
    f.C = C;
    f.k = k;
    double e1 = 0, e2 = 0, e3 = 0;
    double rx = solve_t_plus(M, -2 * C, &e1);
    double ry = solve_t_plus(M, -C * (1 + 1.0 / (2 * k)), &e2);
    double rz = solve_t_plus(M, -C / k, &e3);
    f.residual = std::max({e1, e2, e3});
    f.x = {rx, 0.0};
    f.y = {ry, t_plus(M, ry) + C / k};
    f.z = {rz, 0.0};
    f.a = infall_proper_time(M, rx, ry);
    f.b = infall_proper_time(M, ry, rz);
    f.c = radial_proper_time(M, rx, rz);

    // Unit future tangents at z: gamma_0 (dt = 0) and gamma_+ (dt/dr = t_+').
    double fr = 2 * M / rz - 1;
    auto g = [&](Vec2 u, Vec2 v) { return -u.x0 * v.x0 / fr + fr * u.x1 * v.x1; };
    Vec2 u0{-1.0, 0.0};
    Vec2 up{-1.0, -t_plus_prime(M, rz)};
    double n0 = std::sqrt(-g(u0, u0)), np = std::sqrt(-g(up, up));
    f.scalar_product = g(u0, up) / (n0 * np);
    double tp = t_plus_prime(M, rz);
    f.scalar_product_closed = -1.0 / std::sqrt(1 - tp * tp * fr * fr);
    return f;
}

namespace {

template <class T>
PolylineCurve<Vec2> sample(Vec2 from, Vec2 to, int samples, T t_of_r) {
    if (samples < 2) throw Error("schwarzschild side: need at least two samples");
    const double r1 = from.x0, r2 = to.x0;
    std::vector<double> params;
    std::vector<Vec2> pts;
    for (int i = 0; i < samples; ++i) {
        double r = r1 + (r2 - r1) * i / (samples - 1);
        params.push_back(r1 - r);
        pts.push_back({r, t_of_r(r)});
    }
    params.back() = r1 - r2;
    pts.front() = from;
    pts.back() = to;
    return PolylineCurve<Vec2>(std::move(params), std::move(pts));
}

}  // namespace

PolylineCurve<Vec2> schwarzschild_side_xy(const TriangleFamilyRecord& f, int samples) {
    // gamma_-: t = -t_+(r) - 2C
    return sample(f.x, f.y, samples, [&](double r) { return -t_plus(f.M, r) - 2 * f.C; });
}

PolylineCurve<Vec2> schwarzschild_side_yz(const TriangleFamilyRecord& f, int samples) {
    return sample(f.y, f.z, samples, [&](double r) { return t_plus(f.M, r) + f.C / f.k; });
}

PolylineCurve<Vec2> schwarzschild_side_xz(const TriangleFamilyRecord& f, int samples) {
    return sample(f.x, f.z, samples, [](double) { return 0.0; });
}

}  // namespace lorentz::cone
