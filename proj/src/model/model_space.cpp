#include "lorentz/model/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lorentz/core/vec.hpp"

namespace lorentz::model {

namespace {

using V3 = std::array<double, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 lin(double s, const V3& a, double t, const V3& b) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}

void same_K(double K, const ModelPoint& p, const ModelPoint& q) {
    if (p.K != K || q.K != K) throw Error("model space: mismatched curvature");
}

// Time angle for K < 0.
double theta(const ModelPoint& p) { return std::atan2(p.c[1], p.c[0]); }

double wrap_angle(double d) {
    constexpr double pi = std::numbers::pi;
    while (d <= -pi) d += 2 * pi;
    while (d > pi) d -= 2 * pi;
    return d;
}

enum class Rel { none, null, timelike };

// Separations this close to the light cone (relative to the Euclidean size) count as null.
constexpr double kNullSlack = 1e-12;

struct Classified {
    Rel rel = Rel::none;
    double tau = 0.0;
};

Classified classify(double K, const ModelPoint& p, const ModelPoint& q) {
    same_K(K, p, q);
    if (p == q) return {Rel::null, 0.0};
    const V3 d = sub(q.c, p.c);
    if (K == 0.0) {
        double dt = d[0], ax = std::abs(d[1]);
        if (dt > 0 && std::abs(dt - ax) <= kNullSlack * dt) return {Rel::null, 0.0};
        if (dt > ax) return {Rel::timelike, std::sqrt((dt - ax) * (dt + ax))};
        return {};
    }
    const double r = radius(K);
    // <d,d> directly, or as 2Q - 2<p,q> on the quadric; whichever has the smaller rounding scale.
    const double scale_diff = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    const double scale_id = 2 * std::sqrt((p.c[0] * p.c[0] + p.c[1] * p.c[1] + p.c[2] * p.c[2]) *
                                          (q.c[0] * q.c[0] + q.c[1] * q.c[1] + q.c[2] * q.c[2]));
    const double Q = K > 0 ? r * r : -r * r;
    const double dd = scale_id < scale_diff ? 2 * Q - 2 * form(K, p.c, q.c) : form(K, d, d);
    const bool on_cone = std::abs(dd) <= kNullSlack * std::min(scale_diff, scale_id);
    if (K > 0) {
        if (!(d[0] > 0)) return {};
        if (on_cone) return {Rel::null, 0.0};
        if (dd > 0) return {};
        double eps = -dd / (2 * r * r);
        return {Rel::timelike, r * std::log1p(eps + std::sqrt(eps * (2 + eps)))};
    }
    double dth = wrap_angle(theta(q) - theta(p));
    if (!(dth > 0)) return {};
    if (on_cone) return {Rel::null, 0.0};
    if (dd > 0) return {};
    double half = -dd / (4 * r * r);  // sin^2(tau / 2r)
    if (dth >= std::numbers::pi) throw DomainError("beyond model period");
    if (half <= 0.5) return {Rel::timelike, 2 * r * std::asin(std::sqrt(half))};
    // Near the period: sin from the Gram determinant's 2x2 minors, which stay accurate as q -> -p.
    const V3 &u = p.c, &v = q.c;
    double m01 = u[0] * v[1] - u[1] * v[0], m02 = u[0] * v[2] - u[2] * v[0], m12 = u[1] * v[2] - u[2] * v[1];
    double s = std::sqrt(std::max(0.0, m01 * m01 - m02 * m02 - m12 * m12)) / (r * r);
    double c = -form(K, u, v) / (r * r);
    double angle = std::atan2(s, c);
    if (!(angle < std::numbers::pi)) throw DomainError("beyond model period");
    return {Rel::timelike, r * angle};
}

// Hyperbolic or circular functions by sign of K.
double ch(double K, double x) { return K > 0 ? std::cosh(x) : std::cos(x); }
double sh(double K, double x) { return K > 0 ? std::sinh(x) : std::sin(x); }

}  // namespace

double radius(double K) {
    if (K == 0.0) throw Error("model space: radius undefined for K = 0");
    return 1.0 / std::sqrt(std::abs(K));
}

double form(double K, const V3& u, const V3& v) {
    if (K == 0.0) return -u[0] * v[0] + u[1] * v[1];
    if (K > 0) return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    return -u[0] * v[0] - u[1] * v[1] + u[2] * v[2];
}

double constraint_residual(const ModelPoint& p) {
    if (p.K == 0.0) return std::abs(p.c[2]);
    double r = radius(p.K);
    double target = p.K > 0 ? r * r : -r * r;
    double norm2 = p.c[0] * p.c[0] + p.c[1] * p.c[1] + p.c[2] * p.c[2];
    return std::abs(form(p.K, p.c, p.c) - target) / std::max(r * r, norm2);
}

ModelPoint chart_point(double K, double T, double X) {
    if (K == 0.0) return {0.0, {T, X, 0.0}};
    double r = radius(K);
    if (K > 0) return {K, {r * std::sinh(T), r * std::cosh(T) * std::cos(X), r * std::cosh(T) * std::sin(X)}};
    return {K, {r * std::cosh(X) * std::cos(T), r * std::cosh(X) * std::sin(T), r * std::sinh(X)}};
}

ExtTime model_tau(double K, const ModelPoint& p, const ModelPoint& q) {
    return ExtTime::clamped(classify(K, p, q).tau);
}
bool model_chron(double K, const ModelPoint& p, const ModelPoint& q) {
    return classify(K, p, q).rel == Rel::timelike;
}
bool model_caus(double K, const ModelPoint& p, const ModelPoint& q) {
    return classify(K, p, q).rel != Rel::none;
}

ModelPoint geodesic_point(double K, const ModelPoint& p, const V3& u, double s) {
    if (K == 0.0) return {0.0, {p.c[0] + s * u[0], p.c[1] + s * u[1], 0.0}};
    double r = radius(K);
    return {K, lin(ch(K, s / r), p.c, r * sh(K, s / r), u)};
}

V3 initial_tangent(double K, const ModelPoint& p, const ModelPoint& q, double L) {
    if (!(L > 0)) throw Error("model space: tangent of a degenerate side");
    if (K == 0.0) return {(q.c[0] - p.c[0]) / L, (q.c[1] - p.c[1]) / L, 0.0};
    double r = radius(K);
    return lin(1.0 / (r * sh(K, L / r)), q.c, -ch(K, L / r) / (r * sh(K, L / r)), p.c);
}

V3 tangent_at(double K, const ModelPoint& p, const V3& u, double s) {
    if (K == 0.0) return u;
    double r = radius(K);
    double sign = K > 0 ? 1.0 : -1.0;
    return lin(sign * sh(K, s / r) / r, p.c, ch(K, s / r), u);
}

std::string realizability_failure(double K, double a, double b, double c) {
    if (a < 0 || b < 0 || c < 0) return "negative side length";
    if (c < a + b) return "reverse triangle inequality c >= a + b fails";
    int zeros = (a == 0) + (b == 0) + (c == 0);
    if (zeros > 1) return "more than one zero side";
    if (c == a + b) {
        if (K > 0 && !(c < std::numbers::pi / std::sqrt(K))) return "degenerate size bound c < pi/sqrt(K) fails";
    } else if (K < 0 && !(c < std::numbers::pi / std::sqrt(-K))) {
        return "size bound c < pi/sqrt(-K) fails";
    }
    return {};
}

bool realizable(double K, double a, double b, double c) { return realizability_failure(K, a, b, c).empty(); }

const char* to_string(Side s) { return s == Side::xy ? "xy" : s == Side::yz ? "yz" : "xz"; }

ModelTriangle realize_triangle(double K, double a, double b, double c) {
    if (auto why = realizability_failure(K, a, b, c); !why.empty()) throw Error("unrealizable triangle: " + why);
    ModelTriangle t;
    t.K = K;
    t.a = a;
    t.b = b;
    t.c = c;
    t.degenerate_a = a == 0 && c == b;
    t.degenerate_b = b == 0 && c == a;
    if (K == 0.0) {
        double ty_a = (c - a - b) * (c - a + b) / (2 * c);  // t_y - a
        double ty = a + ty_a;
        double xy = std::sqrt(std::max(0.0, ty_a * (ty + a)));
        t.x = {0.0, {0.0, 0.0, 0.0}};
        t.z = {0.0, {c, 0.0, 0.0}};
        t.y = {0.0, {ty, xy, 0.0}};
        if (t.degenerate_a) t.y = t.x;
        if (t.degenerate_b) t.y = t.z;
        return t;
    }
    const double r = radius(K);
    const double A = a / r, B = b / r, C = c / r;
    if (K < 0 && !(C < std::numbers::pi)) throw DomainError("beyond model period");
    V3 x0, e0, e2{0.0, 0.0, 1.0};
    if (K > 0) {
        x0 = {0.0, r, 0.0};
        e0 = {1.0, 0.0, 0.0};
    } else {
        x0 = {r, 0.0, 0.0};
        e0 = {0.0, 1.0, 0.0};
    }
    t.x = {K, x0};
    t.z = {K, lin(ch(K, C), x0, r * sh(K, C), e0)};
    if (t.degenerate_a) {
        t.y = t.x;
    } else if (t.degenerate_b) {
        t.y = t.z;
    } else if (a == 0) {
        // Time reversal of the triangle (b, 0, c).
        auto u = realize_triangle(K, b, 0.0, c);
        auto rev = [&](const ModelPoint& m) {
            ModelPoint o = m;
            if (K > 0) o.c[0] = -o.c[0];
            else o.c[1] = -o.c[1];
            return o;
        };
        t.x = rev(u.z);
        t.y = rev(u.y);
        t.z = rev(u.x);
    } else {
        // cosh(phi) - 1 from the law of cosines, in product form.
        double num = K > 0 ? 2 * std::sinh((C - A + B) / 2) * std::sinh((C - A - B) / 2)
                           : 2 * std::sin((C - A + B) / 2) * std::sin((C - A - B) / 2);
        double eps = std::max(0.0, num / (sh(K, A) * sh(K, C)));
        double phi = std::log1p(eps + std::sqrt(eps * (2 + eps)));
        V3 dir = lin(std::cosh(phi), e0, std::sinh(phi), e2);
        t.y = {K, lin(ch(K, A), x0, r * sh(K, A), dir)};
    }
    return t;
}

namespace {

struct SideEnds {
    const ModelPoint* past;
    const ModelPoint* future;
    double L;
};

SideEnds ends(const ModelTriangle& t, Side s) {
    switch (s) {
        case Side::xy: return {&t.x, &t.y, t.a};
        case Side::yz: return {&t.y, &t.z, t.b};
        default: return {&t.x, &t.z, t.c};
    }
}

}  // namespace

ModelPoint side_point(const ModelTriangle& tri, Side side, double s) {
    auto e = ends(tri, side);
    if (!(e.L > 0)) throw Error(std::string("side_point: degenerate side ") + to_string(side));
    if (s < 0 || s > e.L) throw Error("side_point: parameter out of range");
    if (s == 0) return *e.past;
    if (s == e.L) return *e.future;
    if (tri.K == 0.0) {
        double f = s / e.L;
        return {0.0,
                {e.past->c[0] + f * (e.future->c[0] - e.past->c[0]), e.past->c[1] + f * (e.future->c[1] - e.past->c[1]),
                 0.0}};
    }
    return geodesic_point(tri.K, *e.past, initial_tangent(tri.K, *e.past, *e.future, e.L), s);
}

ExtTime comparison_tau(const ModelTriangle& tri, SidePos p, SidePos q) {
    return model_tau(tri.K, side_point(tri, p.side, p.s), side_point(tri, q.side, q.s));
}

double vertex_angle(const ModelTriangle& tri, Vertex v) {
    const double K = tri.K;
    auto start = [&](Side s) {
        auto e = ends(tri, s);
        return initial_tangent(K, *e.past, *e.future, e.L);
    };
    auto finish = [&](Side s) {
        auto e = ends(tri, s);
        return tangent_at(K, *e.past, initial_tangent(K, *e.past, *e.future, e.L), e.L);
    };
    V3 u, w;
    switch (v) {
        case Vertex::x: u = start(Side::xy), w = start(Side::xz); break;
        case Vertex::y: u = finish(Side::xy), w = start(Side::yz); break;
        default: u = finish(Side::yz), w = finish(Side::xz); break;
    }
    double g = -form(K, u, w);
    return std::acosh(std::max(1.0, g));
}

double hyperbolic_angle(double K, double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0)) throw Error("hyperbolic_angle: degenerate side");
    return vertex_angle(realize_triangle(K, a, b, c), Vertex::y);
}

double ModelSpace::dist(const ModelPoint& p, const ModelPoint& q) const {
    return euclid(Vec3{p.c[0], p.c[1], p.c[2]}, Vec3{q.c[0], q.c[1], q.c[2]});
}

std::string ModelSpace::id() const {
    std::ostringstream os;
    os.precision(17);
    os << "model(K=" << K_ << ")";
    return os.str();
}

}  // namespace lorentz::model
