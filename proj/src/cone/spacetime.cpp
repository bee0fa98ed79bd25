#include "lorentz/cone/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lorentz/core/error.hpp"

namespace lorentz::cone {

namespace {

constexpr double kSlack = 1e-12;

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double norm(Vec2 v) { return std::hypot(v.x0, v.x1); }

}  // namespace

bool Minkowski2::future_causal(Vec2, Vec2 v) const {
    return v.x0 > 0 && v.x0 >= std::abs(v.x1) - kSlack * norm(v);
}

double Minkowski2::finsler(Vec2, Vec2 v) const {
    double ax = std::abs(v.x1);
    if (!(v.x0 > ax)) return 0.0;
    return std::sqrt((v.x0 - ax) * (v.x0 + ax));
}

std::array<Vec2, 2> Minkowski2::cone_edges(Vec2) const { return {Vec2{1.0, -1.0}, Vec2{1.0, 1.0}}; }

std::string LorentzCylinder::id() const { return "cylinder(period=" + num(period_) + ")"; }

std::string Bubbling::id() const { return "bubbling(lambda=" + num(lambda_) + ")"; }

double Bubbling::w(Vec2 p, Vec2 v) const { return v.x0 + (1 - std::pow(std::abs(p.x0), lambda_)) * v.x1; }

bool Bubbling::future_causal(Vec2 p, Vec2 v) const {
    double wv = w(p, v);
    return wv > 0 && wv >= std::abs(v.x1) - kSlack * norm(v);
}

double Bubbling::finsler(Vec2 p, Vec2 v) const {
    double wv = w(p, v), ax = std::abs(v.x1);
    if (!(wv > ax)) return 0.0;
    return std::sqrt((wv - ax) * (wv + ax));
}

std::array<Vec2, 2> Bubbling::cone_edges(Vec2 p) const {
    double s = std::pow(std::abs(p.x0), lambda_);
    return {Vec2{2 - s, -1.0}, Vec2{s, 1.0}};
}

double Bubbling::metric(Vec2 p, Vec2 v) const {
    double wv = w(p, v);
    return -wv * wv + v.x1 * v.x1;
}

std::string SchwarzschildInterior::id() const { return "schwarzschild(M=" + num(M_) + ")"; }

Region SchwarzschildInterior::domain() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {0.0, 2 * M_, -inf, inf};
}

bool SchwarzschildInterior::future_causal(Vec2 p, Vec2 v) const {
    double fr = f(p.x0);
    return v.x0 < 0 && -v.x0 >= fr * std::abs(v.x1) - kSlack * norm(v);
}

double SchwarzschildInterior::finsler(Vec2 p, Vec2 v) const {
    double fr = f(p.x0), a = -v.x0, b = fr * std::abs(v.x1);
    if (!(a > b)) return 0.0;
    return std::sqrt((a - b) * (a + b) / fr);
}

std::array<Vec2, 2> SchwarzschildInterior::cone_edges(Vec2 p) const {
    double fr = f(p.x0);
    return {Vec2{-fr, -1.0}, Vec2{-fr, 1.0}};
}

double SchwarzschildInterior::metric(Vec2 p, Vec2 v) const {
    double fr = f(p.x0);
    return -v.x0 * v.x0 / fr + fr * v.x1 * v.x1;
}

Funnel::Funnel(Vec2 p, Vec2 q) : p_(p), q_(q) {
    Vec2 d = q - p;
    if (!(d.x0 > 0 && d.x0 >= std::abs(d.x1) * (1 - kSlack)))
        throw Error("funnel: q must lie in the causal future of p");
}

std::string Funnel::id() const {
    return "funnel(p=(" + num(p_.x0) + "," + num(p_.x1) + "),q=(" + num(q_.x0) + "," + num(q_.x1) + "))";
}

bool Funnel::in_past_cone(Vec2 a) const {
    Vec2 d = p_ - a;
    return d.x0 >= std::abs(d.x1) - kSlack * std::max(1.0, norm(d));
}

bool Funnel::in_future_cone(Vec2 a) const {
    Vec2 d = a - q_;
    return d.x0 >= std::abs(d.x1) - kSlack * std::max(1.0, norm(d));
}

bool Funnel::on_curve(Vec2 a) const {
    Vec2 d = q_ - p_, e = a - p_;
    double L2 = d.x0 * d.x0 + d.x1 * d.x1;
    double s = (e.x0 * d.x0 + e.x1 * d.x1) / L2;
    if (s < -kSlack || s > 1 + kSlack) return false;
    double cross = e.x0 * d.x1 - e.x1 * d.x0;
    return std::abs(cross) <= kSlack * std::max(1.0, L2);
}

bool Funnel::curve_timelike() const {
    Vec2 d = q_ - p_;
    return d.x0 > std::abs(d.x1);
}

bool Funnel::contains(Vec2 a) const { return in_past_cone(a) || on_curve(a) || in_future_cone(a); }

bool Funnel::segment_inside(Vec2 a, Vec2 b) const {
    constexpr int samples = 64;
    for (int k = 0; k <= samples; ++k) {
        double s = static_cast<double>(k) / samples;
        if (!contains(a + s * (b - a))) return false;
    }
    return true;
}

ConeStructure::ConeStructure(double left, double right, double alpha) : left_(left), right_(right), alpha_(alpha) {
    if (!(left < right)) throw Error("cone structure: need left < right");
    if (!(alpha > 0 && alpha < 1)) throw Error("cone structure: alpha must lie in (0, 1)");
}

std::string ConeStructure::id() const {
    return "cone(left=" + num(left_) + ",right=" + num(right_) + ",alpha=" + num(alpha_) + ")";
}

bool ConeStructure::future_causal(Vec2, Vec2 v) const {
    double sl = kSlack * norm(v);
    return v.x0 > 0 && v.x1 - left_ * v.x0 >= -sl && right_ * v.x0 - v.x1 >= -sl;
}

double ConeStructure::finsler(Vec2, Vec2 v) const {
    double a = v.x1 - left_ * v.x0, b = right_ * v.x0 - v.x1;
    if (!(a > 0 && b > 0)) return 0.0;
    return std::pow(a, alpha_) * std::pow(b, 1 - alpha_);
}

std::array<Vec2, 2> ConeStructure::cone_edges(Vec2) const { return {Vec2{1.0, left_}, Vec2{1.0, right_}}; }

double ConeStructure::metric(Vec2, Vec2 v) const {
    if (!metric_induced()) throw Error("cone structure: not metric-induced");
    // -F^2 extended as a quadratic form.
    return -(v.x1 - left_ * v.x0) * (right_ * v.x0 - v.x1);
}

}  // namespace lorentz::cone
