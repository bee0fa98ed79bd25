#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lorentz/cone/analytic.hpp"
#include "lorentz/cone/schwarzschild.hpp"
#include "lorentz/core/audit.hpp"
#include "lorentz/core/length.hpp"
#include "lorentz/core/parallel.hpp"
#include "lorentz/finite/finite_space.hpp"

using namespace lorentz;
using cone::Minkowski2Space;
using cone::Minkowski3Space;

namespace {

// Random future timelike polyline in 2D Minkowski.
PolylineCurve<Vec2> random_timelike(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> U(0, 1);
    std::vector<Vec2> pts{{U(rng), U(rng)}};
    for (int i = 1; i < n; ++i) {
        double dt = 0.01 + U(rng);
        pts.push_back(pts.back() + Vec2{dt, (2 * U(rng) - 1) * 0.9 * dt});
    }
    return PolylineCurve<Vec2>::indexed(pts);
}

// Sequential double-sum of the segment values, the reference for tau_length.
double segment_sum(const SpaceHandle<Vec2>& s, const std::vector<Vec2>& p, std::size_t i, std::size_t j) {
    double t = 0;
    for (std::size_t k = i; k < j; ++k) t += s.tau(p[k], p[k + 1]).value();
    return t;
}

// One point with x << x but finite tau: not a Lorentzian pre-length space.
class ReflexiveFinite : public SpaceHandle<int> {
public:
    bool chron(const int&, const int&) const override { return true; }
    bool caus(const int&, const int&) const override { return true; }
    ExtTime tau(const int&, const int&) const override { return 1.0; }
    double dist(const int&, const int&) const override { return 0; }
    Backend backend() const override { return Backend::finite; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override { return "reflexive-point"; }
};

}  // namespace

TEST_CASE("ext_time saturates and orders infinity last") {
    ExtTime a = 2.0, inf = ExtTime::infinity();
    CHECK((a + inf).is_infinite());
    CHECK(inf > a);
    CHECK((a + 3.0).value() == 5.0);
    CHECK_THROWS_AS(ExtTime(-1.0), Error);
    CHECK_THROWS_AS(ExtTime(std::nan("")), Error);
    CHECK_THROWS_AS((void)(inf - inf), Error);
    CHECK(ExtTime::clamped(-1e-18).value() == 0.0);
}

TEST_CASE("polyline validation") {
    CHECK_THROWS_AS(PolylineCurve<Vec2>({0.0}, {Vec2{0, 0}}), Error);
    CHECK_THROWS_AS(PolylineCurve<Vec2>({0.0, 0.0}, {Vec2{0, 0}, Vec2{1, 0}}), Error);
    CHECK_THROWS_AS(PolylineCurve<Vec2>({0.0, 1.0}, {Vec2{0, 0}, Vec2{0, 0}}), Error);
    CHECK_THROWS_AS(PolylineCurve<Vec2>({0.0, 1.0, 2.0}, {Vec2{0, 0}, Vec2{1, 0}}), Error);
}

TEST_CASE("tau_length examples") {
    Minkowski2Space M;
    auto null_curve = PolylineCurve<Vec2>::indexed({{0, 0}, {0.5, 0.5}, {1, 1}});
    CHECK(tau_length(M, null_curve).value() == 0.0);
    CHECK(causal_character(M, null_curve) == CausalCharacter::null);

    std::vector<Vec2> seg;
    for (int i = 0; i <= 10; ++i) seg.push_back({i / 10.0, 0});
    auto line = PolylineCurve<Vec2>::indexed(seg);
    CHECK(tau_length(M, line).value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(causal_character(M, line) == CausalCharacter::timelike);

    auto spacelike = PolylineCurve<Vec2>::indexed({{0, 0}, {1, 0}, {1.2, 2}});
    try {
        (void)tau_length(M, spacelike);
        FAIL("expected NonCausalStep");
    } catch (const NonCausalStep& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("helix polyline: squared-interval sum obeys the quoted bound, true tau-length is O(delta)") {
    Minkowski3Space M;
    for (double delta : {0.1, 0.05, 0.01}) {
        int k = static_cast<int>(std::ceil(2 * std::numbers::pi / delta));
        double d = 2 * std::numbers::pi / k;
        std::vector<Vec3> pts;
        for (int i = 0; i <= k; ++i) pts.push_back({i * d, std::cos(i * d), std::sin(i * d)});
        auto helix = PolylineCurve<Vec3>::indexed(pts);
        double L = tau_length(M, helix).value();
        double squared = 0;
        for (int i = 0; i < k; ++i) squared += std::pow(M.tau(pts[i], pts[i + 1]).value(), 2);
        double bound = k * (std::pow(d, 4) / 12 + 2 * std::pow(d, 6) / 720);
        CHECK(squared <= bound);
        CHECK(L <= k * std::sqrt(std::pow(d, 4) / 12 + 2 * std::pow(d, 6) / 720));
        CHECK(L == doctest::Approx(2 * std::numbers::pi * d / std::sqrt(12.0)).epsilon(1e-3));
        CHECK(causal_character(M, helix) == CausalCharacter::timelike);
    }
}

TEST_CASE("is_maximal examples") {
    Minkowski2Space M;
    auto straight = PolylineCurve<Vec2>::indexed({{0, 0}, {0.5, 0.1}, {1, 0.2}});
    CHECK(is_maximal(M, straight, 1e-12));
    auto broken = PolylineCurve<Vec2>::indexed({{0, 0}, {1, 0.5}, {2, 0}});
    CHECK_FALSE(is_maximal(M, broken, 1e-6));
    auto null_curve = PolylineCurve<Vec2>::indexed({{0, 0}, {1, 1}, {2.5, 2.5}});
    CHECK(is_maximal(M, null_curve, 0.0));

    finite::FiniteCausalSpace loop(2, {{0, 1}, {1, 0}});
    auto c = PolylineCurve<int>::indexed({0, 1});
    CHECK_THROWS_WITH_AS((void)is_maximal(loop, c, 0.0), "maximality undefined at infinite time separation", Error);
}

TEST_CASE("reparametrize_by_tau") {
    Minkowski2Space M;
    auto uniform = PolylineCurve<Vec2>::indexed({{0, 0}, {0.5, 0}, {1, 0}, {1.5, 0}, {2, 0}});
    auto r = reparametrize_by_tau(M, uniform);
    std::vector<double> want{0, 0.5, 1, 1.5, 2};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(r.params()[i] == doctest::Approx(want[i]).epsilon(1e-15));

    auto uneven = PolylineCurve<Vec2>({0, 3, 4, 9}, {{0, 0}, {0.2, 0}, {1.7, 0}, {2, 0}});
    auto r2 = reparametrize_by_tau(M, uneven);
    CHECK(r2.params()[1] == doctest::Approx(0.2));
    CHECK(r2.params()[2] == doctest::Approx(1.7));
    CHECK(r2.params().back() == doctest::Approx(2.0));

    auto with_null = PolylineCurve<Vec2>::indexed({{0, 0}, {1, 0}, {2, 1}});
    CHECK_THROWS_WITH_AS(reparametrize_by_tau(M, with_null),
                         doctest::Contains("non-rectifiable"), Error);

    // E = 0 radial geodesic in the Schwarzschild interior.
    cone::SchwarzschildSpace S(1.0);
    std::vector<Vec2> pts;
    for (int i = 0; i <= 10; ++i) pts.push_back({1.5 - i * 0.1, 0.0});
    auto rs = reparametrize_by_tau(S, PolylineCurve<Vec2>::indexed(pts));
    for (int i = 0; i <= 10; ++i)
        CHECK(rs.params()[i] == doctest::Approx(cone::radial_proper_time(1.0, 1.5, pts[i].x0)).epsilon(1e-8));
}

TEST_CASE("additivity, reparametrization invariance and refinement on random polylines") {
    Minkowski2Space M;
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        auto c = random_timelike(rng, 3 + trial % 12);
        const auto& p = c.points();
        double whole = tau_length(M, c).value();
        CHECK(whole == segment_sum(M, p, 0, p.size() - 1));
        for (std::size_t cut = 1; cut + 1 < p.size(); ++cut) {
            double left = tau_length(M, c.slice(0, cut)).value();
            double right = tau_length(M, c.slice(cut, p.size() - 1)).value();
            CHECK(std::abs(whole - (left + right)) <= 4 * std::numeric_limits<double>::epsilon() * whole);
        }
        std::vector<double> t2;
        for (double t : c.params()) t2.push_back(7.5 * t + 3);
        CHECK(tau_length(M, c.with_params(t2)).value() == whole);
        CHECK(whole <= M.tau(p.front(), p.back()).value() * (1 + 1e-14));
        CHECK(causal_character(M, c) == CausalCharacter::timelike);

        // Refinement by inserting a point inside a segment never increases the sum.
        std::vector<Vec2> finer(p.begin(), p.end());
        std::size_t at = trial % (p.size() - 1);
        Vec2 mid = p[at] + 0.37 * (p[at + 1] - p[at]) + Vec2{0.0, 0.01 * (p[at + 1].x0 - p[at].x0)};
        if (M.chron(p[at], mid) && M.chron(mid, p[at + 1])) {
            finer.insert(finer.begin() + at + 1, mid);
            CHECK(tau_length(M, PolylineCurve<Vec2>::indexed(finer)).value() <= whole * (1 + 1e-14));
        }
    }
}

TEST_CASE("maximality is hereditary on straight segments") {
    Minkowski2Space M;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Vec2 a{U(rng), U(rng)}, d{0.5 + U(rng), 0};
        d.x1 = (2 * U(rng) - 1) * 0.9 * d.x0;
        std::vector<Vec2> pts;
        for (int i = 0; i <= 8; ++i) pts.push_back(a + (i / 8.0) * d);
        auto c = PolylineCurve<Vec2>::indexed(pts);
        REQUIRE(is_maximal(M, c, 1e-12));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j <= 8; ++j) CHECK(is_maximal(M, c.slice(i, j), 1e-12));
    }
}

TEST_CASE("audit_axioms on Minkowski samples and a reflexive point") {
    Minkowski2Space M;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0, 2);
    std::vector<Vec2> pts;
    for (int i = 0; i < 80; ++i) pts.push_back({U(rng), U(rng)});
    auto rep = audit_axioms(M, pts);
    CHECK(rep.total() == 0);
    CHECK(rep.chains_checked > 80);

    ReflexiveFinite R;
    auto bad = audit_axioms(R, std::vector<int>{0});
    CHECK(bad.diagonal == 1);
    CHECK(bad.total() > 0);
}

TEST_CASE("push_up_audit") {
    Minkowski2Space M;
    std::vector<Triple<Vec2>> ok{{{0, 0}, {1, 1}, {2, 1.5}}, {{0, 0}, {1, 0}, {2, 1}}};
    CHECK(push_up_audit(M, ok).empty());
    std::vector<Triple<Vec2>> wrong{{{0, 0}, {0, 1}, {1, 1}}};
    CHECK_THROWS_WITH_AS(push_up_audit(M, wrong), doctest::Contains("triple 0"), Error);
}

TEST_CASE("parallel tau matrix equals the serial reference") {
    cone::SchwarzschildSpace S(1.0);
    std::vector<Vec2> pts;
    for (int i = 0; i < 12; ++i) pts.push_back({1.8 - 0.12 * i, 0.05 * ((i * 7) % 5)});
    auto a = tau_matrix<Vec2>(S, pts, Exec::serial);
    auto b = tau_matrix<Vec2>(S, pts, Exec::parallel);
    CHECK(a == b);
}
