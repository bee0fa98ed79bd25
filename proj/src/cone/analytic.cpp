#include "lorentz/cone/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

namespace lorentz::cone {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool mink_caus(Vec2 p, Vec2 q) {
    if (p == q) return true;
    double dt = q.x0 - p.x0;
    return dt > 0 && dt >= std::abs(q.x1 - p.x1);
}

template <class F>
double integrate(F f, double a, double b) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12);
}

}  // namespace

double minkowski_tau(Vec2 p, Vec2 q) {
    double dt = q.x0 - p.x0, ax = std::abs(q.x1 - p.x1);
    return dt > ax ? std::sqrt((dt - ax) * (dt + ax)) : 0.0;
}

double minkowski_tau(Vec3 p, Vec3 q) {
    double dt = q.x0 - p.x0, ax = std::hypot(q.x1 - p.x1, q.x2 - p.x2);
    return dt > ax ? std::sqrt((dt - ax) * (dt + ax)) : 0.0;
}

bool Minkowski2Space::chron(const Vec2& p, const Vec2& q) const {
    return q.x0 - p.x0 > std::abs(q.x1 - p.x1);
}
bool Minkowski2Space::caus(const Vec2& p, const Vec2& q) const { return mink_caus(p, q); }

bool Minkowski3Space::chron(const Vec3& p, const Vec3& q) const {
    return q.x0 - p.x0 > std::hypot(q.x1 - p.x1, q.x2 - p.x2);
}
bool Minkowski3Space::caus(const Vec3& p, const Vec3& q) const {
    if (p == q) return true;
    double dt = q.x0 - p.x0;
    return dt > 0 && dt >= std::hypot(q.x1 - p.x1, q.x2 - p.x2);
}

// ---------------------------------------------------------------------------

SchwarzschildSpace::SchwarzschildSpace(double M) : M_(M) {
    if (!(M > 0)) throw Error("schwarzschild: mass must be positive");
}

std::string SchwarzschildSpace::id() const { return "schwarzschild(M=" + num(M_) + ")"; }

void SchwarzschildSpace::check(const Vec2& p) const {
    if (!(p.x0 > 0 && p.x0 < 2 * M_)) throw DomainError("schwarzschild: r outside (0, 2M)");
}

double SchwarzschildSpace::null_span(double r1, double r2) const {
    // int_{r2}^{r1} r / (2M - r) dr
    return (r2 - r1) + 2 * M_ * std::log((2 * M_ - r2) / (2 * M_ - r1));
}

double SchwarzschildSpace::time_advance(double E, double r1, double r2) const {
    auto g = [&](double r) {
        double f = 2 * M_ / r - 1;
        return E / (f * std::sqrt(E * E + f));
    };
    return integrate(g, r2, r1);
}

double SchwarzschildSpace::proper_time(double E, double r1, double r2) const {
    auto g = [&](double r) { return 1.0 / std::sqrt(E * E + 2 * M_ / r - 1); };
    return integrate(g, r2, r1);
}

double SchwarzschildSpace::shooting_energy(const Vec2& p, const Vec2& q) const {
    double D = std::abs(q.x1 - p.x1);
    if (D == 0) return 0.0;
    double r1 = p.x0, r2 = q.x0;
    auto F = [&](double E) { return time_advance(E, r1, r2) - D; };
    double hi = 1.0;
    while (F(hi) < 0) {
        hi *= 2;
        if (hi > 1e12) throw Error("schwarzschild: shooting failed (pair too close to null)");
    }
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(F, 0.0, hi, -D, F(hi),
                                                    boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (a + b);
}

bool SchwarzschildSpace::chron(const Vec2& p, const Vec2& q) const {
    check(p);
    check(q);
    if (!(q.x0 < p.x0)) return false;
    return std::abs(q.x1 - p.x1) < null_span(p.x0, q.x0);
}

bool SchwarzschildSpace::caus(const Vec2& p, const Vec2& q) const {
    check(p);
    check(q);
    if (p == q) return true;
    if (!(q.x0 < p.x0)) return false;
    return std::abs(q.x1 - p.x1) <= null_span(p.x0, q.x0);
}

ExtTime SchwarzschildSpace::tau(const Vec2& p, const Vec2& q) const {
    if (!chron(p, q)) return 0.0;
    return ExtTime::clamped(proper_time(shooting_energy(p, q), p.x0, q.x0));
}

// ---------------------------------------------------------------------------

BubblingSpace::BubblingSpace(double lambda, std::shared_ptr<const CausalLattice> lattice)
    : lambda_(lambda), lat_(std::move(lattice)) {
    if (!(lambda > 0 && lambda < 1)) throw Error("bubbling: lambda must lie in (0, 1)");
}

std::string BubblingSpace::id() const { return "bubbling(lambda=" + num(lambda_) + ")/" + lat_->id(); }

double BubblingSpace::left_integral(double u) const {
    if (u <= 0) return 0.0;
    if (lambda_ == 0.5) {
        double s = std::sqrt(u);
        return -2 * s - 4 * std::log1p(-s / 2);
    }
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([&](double r) { return 1.0 / (2 - std::pow(r, lambda_)); }, 0.0, u);
}

double BubblingSpace::right_boundary(Vec2 p, double x) const {
    double e = 1 - lambda_;
    double c = std::pow(p.x0, e) + e * (x - p.x1);
    return c <= 0 ? 0.0 : std::pow(c, 1 / e);
}

namespace {
constexpr double kRel = 1e-12;
void check_u(const Vec2& p) {
    if (p.x0 < 0) throw DomainError("bubbling: point below u = 0");
}
}  // namespace

bool BubblingSpace::caus(const Vec2& p, const Vec2& q) const {
    check_u(p);
    check_u(q);
    if (p == q) return true;
    if (q.x0 < p.x0) return false;
    if (q.x1 >= p.x1) {
        if (p.x0 == 0) return true;
        return q.x0 >= right_boundary(p, q.x1) * (1 - kRel);
    }
    return left_integral(q.x0) - left_integral(p.x0) >= (p.x1 - q.x1) * (1 - kRel);
}

bool BubblingSpace::chron(const Vec2& p, const Vec2& q) const {
    check_u(p);
    check_u(q);
    if (!(q.x0 > p.x0)) return false;
    if (q.x1 >= p.x1) return q.x0 > right_boundary(p, q.x1) * (1 + kRel);
    return left_integral(q.x0) - left_integral(p.x0) > (p.x1 - q.x1) * (1 + kRel);
}

int BubblingSpace::snap(const Vec2& p) const {
    int v = lat_->node_at(p, 0.5 * lat_->meta().spec.h + 1e-12);
    if (v < 0) throw DomainError("bubbling: point outside the lattice region");
    return v;
}

ExtTime BubblingSpace::tau(const Vec2& p, const Vec2& q) const {
    if (!caus(p, q)) return 0.0;
    return lat_->tau(snap(p), snap(q));
}

// ---------------------------------------------------------------------------

double FunnelSpace::best(const Vec2& a, const Vec2& b) const {
    auto pieces = [&](const Vec2& z) {
        std::vector<int> out;
        if (field_.in_past_cone(z)) out.push_back(0);
        if (field_.on_curve(z)) out.push_back(1);
        if (field_.in_future_cone(z)) out.push_back(2);
        if (out.empty()) throw DomainError("funnel: point outside X");
        return out;
    };
    const Vec2 p = field_.p(), q = field_.q();
    double bestv = -1.0;
    for (int pa : pieces(a))
        for (int pb : pieces(b)) {
            if (pa > pb) continue;
            double cand = -1.0;
            if (pa == pb) {
                if (mink_caus(a, b)) cand = minkowski_tau(a, b);
            } else if (pa == 0 && pb == 1) {
                cand = minkowski_tau(a, p) + minkowski_tau(p, b);
            } else if (pa == 0 && pb == 2) {
                cand = minkowski_tau(a, p) + minkowski_tau(p, q) + minkowski_tau(q, b);
            } else {
                cand = minkowski_tau(a, q) + minkowski_tau(q, b);
            }
            bestv = std::max(bestv, cand);
        }
    return bestv;
}

bool FunnelSpace::caus(const Vec2& a, const Vec2& b) const { return a == b || best(a, b) >= 0; }

ExtTime FunnelSpace::tau(const Vec2& a, const Vec2& b) const { return ExtTime::clamped(best(a, b)); }

}  // namespace lorentz::cone
