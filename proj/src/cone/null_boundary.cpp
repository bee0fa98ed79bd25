#include "lorentz/cone/null_boundary.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace lorentz::cone {

namespace {

constexpr double kTouch = 1e-12;

Vec2 direction_at(const ConeField& field, Vec2 p, Branch b, Direction d) {
    auto e = field.cone_edges(p);
    if (d == Direction::future) return b == Branch::left ? e[0] : e[1];
    return b == Branch::left ? -1.0 * e[1] : -1.0 * e[0];
}

}  // namespace

NullBoundaryResult null_boundary(const ConeField& field, Vec2 start, Branch branch, Direction direction,
                                 NullBoundaryOptions opt) {
    using namespace boost::numeric::odeint;
    using State = std::array<double, 1>;
    const Region box = opt.region.value_or(field.domain());
    Vec2 e0 = direction_at(field, start, branch, direction);
    if (e0.x1 == 0) throw Error("null_boundary: null direction has no component along the second coordinate");
    const double sign = e0.x1 > 0 ? 1.0 : -1.0;
    auto rhs = [&](const State& y, State& dy, double s) {
        Vec2 e = direction_at(field, {y[0], start.x1 + sign * s}, branch, direction);
        dy[0] = e.x0 / std::abs(e.x1);
    };
    auto stepper = make_controlled(opt.abs_tol, opt.rel_tol, runge_kutta_cash_karp54<State>());

    std::vector<double> params{0.0};
    std::vector<Vec2> pts{start};
    State y{start.x0};
    double s = 0.0, ds = 1e-3;
    bool hit = false, followed = false;
    const double smax = opt.max_extent;

    auto x1_at = [&](double t) { return start.x1 + sign * t; };
    auto in_x1 = [&](double t) { return x1_at(t) >= box.lo1 && x1_at(t) <= box.hi1; };

    while (s < smax) {
        ds = std::min(ds, smax - s);
        if (!in_x1(s + ds)) {
            double lim = sign > 0 ? box.hi1 - start.x1 : start.x1 - box.lo1;
            if (lim <= s) { hit = true; break; }
            ds = lim - s;
        }
        State yt = y;
        double st = s, dt = ds;
        if (stepper.try_step(rhs, yt, st, dt) == fail) {
            ds = dt;
            continue;
        }
        const double lo = box.lo0, hi = box.hi0;
        if (yt[0] < lo || yt[0] > hi) {
            // Overshot a boundary of the first coordinate: shrink the step.
            ds = (st - s) / 2;
            if (ds > 1e-15) continue;
            st = s;
            yt = y;
        } else {
            s = st;
            y = yt;
            ds = dt;
            params.push_back(s);
            pts.push_back({y[0], x1_at(s)});
        }
        double gap = std::min(y[0] - lo, hi - y[0]);
        if (gap < kTouch || (st == s && ds <= 1e-15)) {
            double edge = (y[0] - lo < hi - y[0]) ? lo : hi;
            Vec2 at{edge, x1_at(s)};
            Vec2 e = direction_at(field, at, branch, direction);
            if (std::abs(e.x0) <= kTouch * std::abs(e.x1)) {
                // Null direction tangent to the boundary: continue along it.
                followed = true;
                double send = smax;
                if (!in_x1(send)) send = sign > 0 ? box.hi1 - start.x1 : start.x1 - box.lo1;
                pts.back().x0 = edge;
                const int steps = 64;
                for (int k = 1; k <= steps; ++k) {
                    double sk = s + (send - s) * k / steps;
                    if (sk <= params.back()) continue;
                    params.push_back(sk);
                    pts.push_back({edge, x1_at(sk)});
                }
                s = send;
                break;
            }
            // Transversal crossing: land exactly on the boundary.
            double slope = e.x0 / std::abs(e.x1);
            double extra = slope != 0 ? (edge - y[0]) / slope : 0.0;
            if (extra > 0) {
                params.push_back(s + extra);
                pts.push_back({edge, x1_at(s + extra)});
            } else {
                pts.back().x0 = edge;
            }
            hit = true;
            break;
        }
    }
    return {PolylineCurve<Vec2>(std::move(params), std::move(pts)), hit, followed};
}

}  // namespace lorentz::cone
