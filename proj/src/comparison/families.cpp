#include "lorentz/comparison/families.hpp"

#include <cmath>
#include <random>

#include <boost/math/tools/roots.hpp>

namespace lorentz::comparison {

namespace {

PolylineCurve<Vec2> straight(Vec2 a, Vec2 b, int n) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) pts.push_back(a + (static_cast<double>(i) / (n - 1)) * (b - a));
    pts.front() = a;
    pts.back() = b;
    return PolylineCurve<Vec2>::indexed(std::move(pts));
}

// Point at Minkowski tau-distance s along a route of straight pieces.
Vec2 along_route(const std::vector<Vec2>& route, double s) {
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        double L = cone::minkowski_tau(route[i], route[i + 1]);
        if (s <= L || i + 2 == route.size()) {
            if (!(L > 0)) return route[i + 1];
            return route[i] + std::min(1.0, s / L) * (route[i + 1] - route[i]);
        }
        s -= L;
    }
    return route.back();
}

PolylineCurve<Vec2> route_curve(const std::vector<Vec2>& route, int per_piece) {
    std::vector<Vec2> pts{route.front()};
    for (std::size_t i = 0; i + 1 < route.size(); ++i)
        for (int k = 1; k <= per_piece; ++k) {
            Vec2 p = k == per_piece ? route[i + 1] : route[i] + (static_cast<double>(k) / per_piece) * (route[i + 1] - route[i]);
            pts.push_back(p);
        }
    return PolylineCurve<Vec2>::indexed(std::move(pts));
}

}  // namespace

std::vector<TriangleInstance<Vec2>> minkowski_triangles(const cone::Minkowski2Space& space, int count,
                                                        std::uint64_t seed, double size, int side_points) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<TriangleInstance<Vec2>> out;
    while (static_cast<int>(out.size()) < count) {
        Vec2 x{U(rng) * 0.2 * size, (0.3 + 0.4 * U(rng)) * size};
        auto step = [&](Vec2 from) {
            double dt = (0.15 + 0.3 * U(rng)) * size;
            double dx = (2 * U(rng) - 1) * 0.7 * dt;
            return from + Vec2{dt, dx};
        };
        Vec2 y = step(x), z = step(y);
        if (!(z.x0 <= size && z.x1 >= 0 && z.x1 <= size)) continue;
        auto locate = [x, y, z](Side sd, double s) {
            Vec2 a = sd == Side::yz ? y : x, b = sd == Side::xy ? y : z;
            return along_route({a, b}, s);
        };
        out.push_back(make_triangle<Vec2>(space, x, y, z, straight(x, y, side_points), straight(y, z, side_points),
                                          straight(x, z, side_points), "minkowski#" + std::to_string(out.size()),
                                          locate));
    }
    return out;
}

std::vector<TriangleInstance<model::ModelPoint>> model_triangles(const model::ModelSpace& space,
                                                                 std::span<const std::array<double, 3>> sides,
                                                                 int side_points) {
    const double K = space.curvature();
    std::vector<TriangleInstance<model::ModelPoint>> out;
    for (const auto& [a, b, c] : sides) {
        auto mt = model::realize_triangle(K, a, b, c);
        auto curve = [&](Side sd, const model::ModelPoint& from, const model::ModelPoint& to) {
            double L = mt.side_length(sd);
            std::vector<model::ModelPoint> pts{from};
            if (L > 0)
                for (int i = 1; i + 1 < side_points; ++i) pts.push_back(model::side_point(mt, sd, L * i / (side_points - 1)));
            pts.push_back(to);
            return PolylineCurve<model::ModelPoint>::indexed(std::move(pts));
        };
        auto locate = [mt](Side sd, double s) { return model::side_point(mt, sd, s); };
        out.push_back(make_triangle<model::ModelPoint>(space, mt.x, mt.y, mt.z, curve(Side::xy, mt.x, mt.y),
                                                       curve(Side::yz, mt.y, mt.z), curve(Side::xz, mt.x, mt.z),
                                                       "model#" + std::to_string(out.size()), locate));
    }
    return out;
}

std::vector<TriangleInstance<Vec2>> schwarzschild_triangles(const cone::SchwarzschildSpace& space, double C,
                                                            std::span<const int> ks, int side_points) {
    const double M = space.mass();
    std::vector<TriangleInstance<Vec2>> out;
    for (int k : ks) {
        auto f = cone::schwarzschild_family(M, C, k);
        // Radius at proper time s from r_start along a leg, then the leg's t(r).
        auto radius_at = [M](double r_start, double r_end, double s, bool e0) {
            auto tau_of = [&](double r) {
                return e0 ? cone::radial_proper_time(M, r_start, r) : cone::infall_proper_time(M, r_start, r);
            };
            if (s <= 0) return r_start;
            if (s >= tau_of(r_end)) return r_end;
            auto F = [&](double r) { return tau_of(r) - s; };
            std::uintmax_t it = 200;
            auto [lo, hi] = boost::math::tools::toms748_solve(F, r_end, r_start, boost::math::tools::eps_tolerance<double>(52), it);
            return 0.5 * (lo + hi);
        };
        auto locate = [f, radius_at](Side sd, double s) -> Vec2 {
            switch (sd) {
                case Side::xy: {
                    double r = radius_at(f.x.x0, f.y.x0, s, false);
                    return {r, -cone::t_plus(f.M, r) - 2 * f.C};
                }
                case Side::yz: {
                    double r = radius_at(f.y.x0, f.z.x0, s, false);
                    return {r, cone::t_plus(f.M, r) + f.C / f.k};
                }
                default: return {radius_at(f.x.x0, f.z.x0, s, true), 0.0};
            }
        };
        out.push_back(make_triangle<Vec2>(space, f.x, f.y, f.z, cone::schwarzschild_side_xy(f, side_points),
                                          cone::schwarzschild_side_yz(f, side_points),
                                          cone::schwarzschild_side_xz(f, side_points), "k=" + std::to_string(k),
                                          locate));
    }
    return out;
}

std::vector<Vec2> funnel_route(const cone::Funnel& field, Vec2 a, Vec2 b) {
    const Vec2 p = field.p(), q = field.q();
    auto on_or_past = [&](Vec2 v) { return field.in_past_cone(v) || field.on_curve(v); };
    bool a_future = field.in_future_cone(a), b_past = field.in_past_cone(b);
    if (a_future || b_past || (field.on_curve(a) && field.on_curve(b))) return {a, b};
    std::vector<Vec2> r{a};
    if (!field.on_curve(a) && on_or_past(a)) r.push_back(p);
    if (field.in_future_cone(b) && !field.on_curve(b)) r.push_back(q);
    if (!(r.back() == b)) r.push_back(b);
    // Collapse repeated points.
    std::vector<Vec2> out{r.front()};
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] == out.back())) out.push_back(r[i]);
    return out;
}

TriangleInstance<Vec2> funnel_triangle(const cone::FunnelSpace& space, Vec2 x, Vec2 y, Vec2 z, std::string label) {
    const auto& F = space.field();
    auto rxy = funnel_route(F, x, y), ryz = funnel_route(F, y, z), rxz = funnel_route(F, x, z);
    auto locate = [rxy, ryz, rxz](Side sd, double s) {
        return along_route(sd == Side::xy ? rxy : sd == Side::yz ? ryz : rxz, s);
    };
    return make_triangle<Vec2>(space, x, y, z, route_curve(rxy, 8), route_curve(ryz, 8), route_curve(rxz, 8),
                               std::move(label), locate);
}

std::vector<TriangleInstance<Vec2>> funnel_family(const cone::FunnelSpace& space) {
    const Vec2 q = space.field().q(), p = space.field().p();
    Vec2 dir = q - p;
    double len = cone::minkowski_tau(p, q);
    std::vector<TriangleInstance<Vec2>> out;
    const double back[] = {0.05, 0.1, 0.2};
    const Vec2 ys[] = {{0.15, 0.1}, {0.2, -0.05}, {0.3, 0.2}};
    const Vec2 zs[] = {{0.5, -0.1}, {0.55, 0.2}, {0.6, 0.05}};
    for (double d : back)
        for (int k = 0; k < 3; ++k) {
            Vec2 x = q - (d / len) * dir;
            out.push_back(funnel_triangle(space, x, q + ys[k], q + zs[k],
                                          "funnel#" + std::to_string(out.size())));
        }
    return out;
}

TriangleInstance<int> lattice_triangle(const cone::CausalLattice& lat, int x, int y, int z, std::string label) {
    return make_triangle<int>(lat, x, y, z, cone::extract_maximizer(lat, x, y), cone::extract_maximizer(lat, y, z),
                              cone::extract_maximizer(lat, x, z), std::move(label));
}

}  // namespace lorentz::comparison
