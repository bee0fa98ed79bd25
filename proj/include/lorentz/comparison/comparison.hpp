#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorentz/core/curve.hpp"
#include "lorentz/core/length.hpp"
#include "lorentz/core/parallel.hpp"
#include "lorentz/core/space.hpp"
#include "lorentz/core/vec.hpp"
#include "lorentz/model/model_space.hpp"

namespace lorentz::comparison {

using model::Side;

enum class BoundSide { below, above };
enum class Mode { timelike, causal };
enum class Status { consistent, violated, inconclusive };

const char* to_string(BoundSide s);
const char* to_string(Mode m);
const char* to_string(Status s);

template <class P>
concept Interpolable = requires(P a, double s) {
    { a + s * (a - a) } -> std::same_as<P>;
};

// Geodesic triangle with maximal sides in future order: xy from x to y, yz from y to z, xz from x to z.
template <class P>
struct TriangleInstance {
    P x, y, z;
    PolylineCurve<P> xy, yz, xz;
    double a = 0, b = 0, c = 0;
    std::string label;
    // Exact point at tau-distance s from the past vertex of a side, when the generator knows it.
    std::function<P(Side, double)> locate;

    const PolylineCurve<P>& side(Side s) const { return s == Side::xy ? xy : s == Side::yz ? yz : xz; }
    const P& past_vertex(Side s) const { return s == Side::yz ? y : x; }
    double length(Side s) const { return s == Side::xy ? a : s == Side::yz ? b : c; }
};

// Side lengths from the space; checks vertex/side agreement, finiteness and a + b <= c.
template <class P>
TriangleInstance<P> make_triangle(const SpaceHandle<P>& space, P x, P y, P z, PolylineCurve<P> xy,
                                  PolylineCurve<P> yz, PolylineCurve<P> xz, std::string label = {},
                                  std::function<P(Side, double)> locate = {}) {
    auto ends = [](const PolylineCurve<P>& c, const P& from, const P& to, const char* name) {
        auto pts = c.future_points();
        if (!(pts.front() == from) || !(pts.back() == to))
            throw Error(std::string("triangle: side ") + name + " does not join its vertices");
    };
    ends(xy, x, y, "xy");
    ends(yz, y, z, "yz");
    ends(xz, x, z, "xz");
    if (!space.caus(x, y) || !space.caus(y, z)) throw Error("triangle: vertices not causally ordered");
    ExtTime ta = space.tau(x, y), tb = space.tau(y, z), tc = space.tau(x, z);
    if (ta.is_infinite() || tb.is_infinite() || tc.is_infinite()) throw Error("triangle: infinite side length");
    double a = ta.value(), b = tb.value(), c = tc.value();
    double slack = std::max(space.tolerance(), 1e-12) * std::max(1.0, c);
    if (a + b > c + slack) throw Error("triangle: reverse triangle inequality fails (a + b > c)");
    return TriangleInstance<P>{std::move(x), std::move(y), std::move(z), std::move(xy), std::move(yz),
                               std::move(xz), a, b, c, std::move(label), std::move(locate)};
}

struct SamplePoint {
    Side side;
    double target;  // requested tau-distance from the past vertex
    double s;       // measured tau-distance, clamped to the side length
};

// Corresponding-point samples of one triangle with their tau matrix; independent of K.
template <class P>
struct PreparedTriangle {
    std::size_t index = 0;
    std::string rejected;  // non-empty: side not maximal or bad pattern
    std::vector<P> points;
    std::vector<SamplePoint> samples;
    std::vector<ExtTime> tau;  // row-major over points
    double max_s_error = 0;
};

struct Witness {
    std::size_t triangle = 0;
    std::string label;
    SamplePoint P{}, Q{};
    double tau = 0, tau_bar = 0;
    double margin = 0, threshold = 0;
};

struct Skip {
    std::size_t triangle;
    std::string reason;
};

struct ComparisonVerdict {
    double K = 0;
    BoundSide side = BoundSide::below;
    Mode mode = Mode::timelike;
    Status status = Status::inconclusive;
    std::optional<Witness> witness;   // worst violating pair
    std::vector<Witness> violations;  // worst pair of each violating triangle
    std::size_t samples = 0;          // compared pairs
    std::size_t evaluated = 0;        // triangles compared
    std::vector<Skip> skipped;        // unrealizable in M_K or not timelike
    std::vector<Skip> rejected;       // non-maximal sides
    double max_abs_diff = 0;          // max |tau - tau_bar| over compared pairs
    double max_excess = -std::numeric_limits<double>::infinity();  // max margin - threshold
    double tol = 0, backend_error = 0;
    int points_per_side = 0;
};

struct CertifyOptions {
    int points_per_side = 9;
    double tol = 1e-9;
    double backend_error = 0;     // e.g. refinement gap of a lattice backend
    double maximality_tol = 1e-8; // relative, for is_maximal on each side
    Exec exec = Exec::parallel;
};

namespace detail {

template <class P>
P point_at(const SpaceHandle<P>& space, const TriangleInstance<P>& tri, Side side, double s) {
    if (tri.locate) return tri.locate(side, s);
    const auto pts = tri.side(side).future_points();
    const P& past = tri.past_vertex(side);
    auto row = space.tau_row(past, std::span<const P>(pts));
    std::size_t k = 1;
    while (k + 1 < pts.size() && row[k].value() < s) ++k;
    if constexpr (Interpolable<P>) {
        // Bisect the chord [pts[k-1], pts[k]] for tau(past, .) = s.
        double lo = 0, hi = 1;
        const P a = pts[k - 1], d = pts[k] - pts[k - 1];
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            ExtTime t = space.tau(past, a + mid * d);
            if (t.is_infinite() || t.value() >= s) hi = mid;
            else lo = mid;
        }
        return a + hi * d;
    } else {
        double dl = std::abs(row[k - 1].value() - s), dh = std::abs(row[k].value() - s);
        return dl <= dh ? pts[k - 1] : pts[k];
    }
}

}  // namespace detail

template <class P>
PreparedTriangle<P> prepare_triangle(const SpaceHandle<P>& space, const TriangleInstance<P>& tri,
                                     std::size_t index, Mode mode, const CertifyOptions& opt) {
    PreparedTriangle<P> out;
    out.index = index;
    for (Side sd : {Side::xy, Side::yz, Side::xz}) {
        bool ok = false;
        try {
            ok = is_maximal(space, tri.side(sd), opt.maximality_tol);
        } catch (const Error& e) {
            out.rejected = std::string("side ") + model::to_string(sd) + ": " + e.what();
            return out;
        }
        if (!ok) {
            out.rejected = std::string("side ") + model::to_string(sd) + " is not maximal";
            return out;
        }
    }
    if (mode == Mode::timelike && !(tri.a > 0 && tri.b > 0)) {
        out.rejected = "not a timelike triangle";
        return out;
    }
    const int n = opt.points_per_side;
    for (Side sd : {Side::xy, Side::yz, Side::xz}) {
        double L = tri.length(sd);
        if (!(L > 0)) continue;  // null side: no corresponding points
        for (int i = 1; i <= n; ++i) {
            double target = L * i / (n + 1);
            P p = detail::point_at(space, tri, sd, target);
            ExtTime m = space.tau(tri.past_vertex(sd), p);
            double s = m.is_infinite() ? L : std::clamp(m.value(), 0.0, L);
            out.max_s_error = std::max(out.max_s_error, std::abs(s - target));
            out.points.push_back(p);
            out.samples.push_back({sd, target, s});
        }
    }
    out.tau = tau_matrix(space, std::span<const P>(out.points), opt.exec);
    return out;
}

// Compares one prepared triangle against M_K. Returns the skip reason, or empty and fills `acc`.
template <class P>
std::string evaluate_prepared(const PreparedTriangle<P>& prep, const TriangleInstance<P>& tri, double K,
                              BoundSide bound, Mode mode, const CertifyOptions& opt, ComparisonVerdict& acc) {
    if (auto why = model::realizability_failure(K, tri.a, tri.b, tri.c); !why.empty()) return why;
    model::ModelTriangle mt;
    try {
        mt = model::realize_triangle(K, tri.a, tri.b, tri.c);
    } catch (const Error& e) {
        return e.what();
    }
    const std::size_t n = prep.points.size();
    std::optional<Witness> worst;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& P_ = prep.samples[i];
            const auto& Q_ = prep.samples[j];
            if (P_.side == Q_.side) continue;
            ExtTime tb = model::comparison_tau(mt, {P_.side, P_.s}, {Q_.side, Q_.s});
            ExtTime t = prep.tau[i * n + j];
            if (mode == Mode::causal && !tb.positive()) continue;
            double tv = t.is_infinite() ? std::numeric_limits<double>::infinity() : t.value();
            double tbv = tb.is_infinite() ? std::numeric_limits<double>::infinity() : tb.value();
            double margin;
            if (t.is_infinite() && tb.is_infinite()) margin = 0;
            else margin = bound == BoundSide::below ? tv - tbv : tbv - tv;
            double threshold = opt.tol * std::max(1.0, std::isfinite(tbv) ? tbv : 1.0) + opt.backend_error;
            ++acc.samples;
            if (std::isfinite(tv) && std::isfinite(tbv)) acc.max_abs_diff = std::max(acc.max_abs_diff, std::abs(tv - tbv));
            acc.max_excess = std::max(acc.max_excess, margin - threshold);
            if (margin > threshold && (!worst || margin > worst->margin))
                worst = Witness{prep.index, tri.label, P_, Q_, tv, tbv, margin, threshold};
        }
    }
    ++acc.evaluated;
    if (worst) acc.violations.push_back(*worst);
    return {};
}

template <class P>
ComparisonVerdict evaluate_all(const std::vector<PreparedTriangle<P>>& prepared,
                               const std::vector<TriangleInstance<P>>& triangles, double K, BoundSide bound,
                               Mode mode, const CertifyOptions& opt) {
    ComparisonVerdict v;
    v.K = K;
    v.side = bound;
    v.mode = mode;
    v.tol = opt.tol;
    v.backend_error = opt.backend_error;
    v.points_per_side = opt.points_per_side;
    for (const auto& prep : prepared) {
        if (!prep.rejected.empty()) {
            v.rejected.push_back({prep.index, prep.rejected});
            continue;
        }
        auto why = evaluate_prepared(prep, triangles[prep.index], K, bound, mode, opt, v);
        if (!why.empty()) v.skipped.push_back({prep.index, why});
    }
    for (const auto& w : v.violations)
        if (!v.witness || w.margin > v.witness->margin) v.witness = w;
    if (v.witness) v.status = Status::violated;
    else if (v.evaluated > 0) v.status = Status::consistent;
    return v;
}

template <class P>
std::vector<PreparedTriangle<P>> prepare_all(const SpaceHandle<P>& space,
                                             const std::vector<TriangleInstance<P>>& triangles, Mode mode,
                                             const CertifyOptions& opt) {
    std::vector<PreparedTriangle<P>> out;
    out.reserve(triangles.size());
    for (std::size_t i = 0; i < triangles.size(); ++i) out.push_back(prepare_triangle(space, triangles[i], i, mode, opt));
    return out;
}

template <class P>
ComparisonVerdict certify_curvature_bound(const SpaceHandle<P>& space, const std::vector<TriangleInstance<P>>& triangles,
                                          double K, BoundSide bound, Mode mode, const CertifyOptions& opt = {}) {
    auto prepared = prepare_all(space, triangles, mode, opt);
    return evaluate_all(prepared, triangles, K, bound, mode, opt);
}

template <class P>
ComparisonVerdict certify_curvature_bound(const SpaceHandle<P>& space, const std::vector<TriangleInstance<P>>& triangles,
                                          double K, BoundSide bound, Mode mode, int points_per_side, double tol,
                                          double backend_error = 0) {
    CertifyOptions opt;
    opt.points_per_side = points_per_side;
    opt.tol = tol;
    opt.backend_error = backend_error;
    return certify_curvature_bound(space, triangles, K, bound, mode, opt);
}

struct BranchReport {
    bool branching = false;
    std::string reason;           // why not, when branching is false
    std::vector<Vec2> gamma1, gamma2;
    Vec2 branch_point{};
    int branch_node = -1;
    double shared_d_length = 0;   // Euclidean length of the common initial segment
    double shared_tau = 0;        // its tau-length
    CausalCharacter shared = CausalCharacter::null, rest1 = CausalCharacter::null, rest2 = CausalCharacter::null;
    bool timelike = false;        // all three segments timelike
};

struct ConsistencyReport {
    ComparisonVerdict below;
    std::vector<BranchReport> branches;
    bool timelike_branch_found = false;
    bool flagged = false;
    std::string note;
};

// A consistent lower bound together with a timelike branching point is contradictory.
template <class P>
ConsistencyReport nonbranching_crosscheck(const SpaceHandle<P>& space, double K,
                                          const std::vector<TriangleInstance<P>>& triangles,
                                          std::vector<BranchReport> branches, const CertifyOptions& opt = {}) {
    ConsistencyReport r;
    r.below = certify_curvature_bound(space, triangles, K, BoundSide::below, Mode::timelike, opt);
    r.branches = std::move(branches);
    for (const auto& b : r.branches) r.timelike_branch_found = r.timelike_branch_found || (b.branching && b.timelike);
    if (r.timelike_branch_found && r.below.status == Status::consistent) {
        r.flagged = true;
        r.note = "timelike branching found although the sampled triangles are consistent with the lower bound; "
                 "either a sampling artifact or the bound fails at finer resolution";
    } else if (r.timelike_branch_found && r.below.status == Status::violated) {
        r.flagged = true;
        r.note = "timelike branching found and the lower bound is violated by a triangle witness";
    } else {
        r.note = r.timelike_branch_found ? "timelike branching found, comparison inconclusive" : "no timelike branching found";
    }
    return r;
}

struct ScanRow {
    double K = 0;
    ComparisonVerdict below, above;
};

struct SingularityReport {
    std::vector<ScanRow> rows;
    bool unbounded_below = false;  // every K violated on the below side
    bool unbounded_above = false;
    bool push_up_fails = false;
    std::string conclusion;
};

struct ScanOptions {
    CertifyOptions certify;
    Mode mode = Mode::timelike;
    std::size_t push_up_violations = 0;  // from core::push_up_audit on the same region
};

template <class P>
SingularityReport singularity_scan(const SpaceHandle<P>& space, const std::vector<TriangleInstance<P>>& family,
                                   std::span<const double> K_grid, const ScanOptions& opt = {}) {
    if (family.empty()) throw Error("singularity scan: empty triangle family");
    if (K_grid.empty()) throw Error("singularity scan: empty K grid");
    auto prepared = prepare_all(space, family, opt.mode, opt.certify);
    SingularityReport rep;
    rep.unbounded_below = rep.unbounded_above = true;
    for (double K : K_grid) {
        ScanRow row;
        row.K = K;
        row.below = evaluate_all(prepared, family, K, BoundSide::below, opt.mode, opt.certify);
        row.above = evaluate_all(prepared, family, K, BoundSide::above, opt.mode, opt.certify);
        rep.unbounded_below = rep.unbounded_below && row.below.status == Status::violated;
        rep.unbounded_above = rep.unbounded_above && row.above.status == Status::violated;
        rep.rows.push_back(std::move(row));
    }
    rep.push_up_fails = opt.push_up_violations > 0;
    std::string c;
    if (rep.unbounded_below) c += "timelike curvature unbounded below on the sampled family";
    if (rep.unbounded_above) c += std::string(c.empty() ? "" : "; ") + "timelike curvature unbounded above on the sampled family";
    if (c.empty()) c = "no curvature singularity detected on the K grid (sampling can only refute bounds)";
    if (rep.push_up_fails)
        c += "; push-up fails, so causal curvature is not bounded above on the sampled region";
    rep.conclusion = c;
    return rep;
}

}  // namespace lorentz::comparison
