#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "common.hpp"
#include "lorentz/cli/run.hpp"
#include "lorentz/comparison/branching.hpp"
#include "lorentz/comparison/families.hpp"
#include "lorentz/comparison/records.hpp"
#include "lorentz/cone/null_boundary.hpp"
#include "lorentz/cone/schwarzschild.hpp"
#include "lorentz/core/audit.hpp"
#include "lorentz/core/length.hpp"

namespace lorentz::cli {

using namespace detail;
namespace cmp = lorentz::comparison;

namespace {

const char* pinned_text(const std::string& id) {
    if (id == "helix-zero-length") return R"({"spacetime": {"kind": "minkowski3"}})";
    if (id == "seven-point-topology")
        return R"({"spacetime": {"kind": "finite", "points": 7,
                   "relation": [[1, 6], [1, 7], [6, 2], [7, 2], [3, 4], [4, 5]]}})";
    if (id == "lorentz-cylinder")
        return R"({"spacetime": {"kind": "cylinder", "period": 1.0}, "region": [0, 1, 0, 0.5], "h": 0.05, "R": 2,
                   "quadrature": 2})";
    if (id == "funnel-branching")
        return R"({"spacetime": {"kind": "funnel", "p": [0.4, 0.0], "q": [0.8, 0.0]}, "region": [0, 1.4, -0.6, 0.6],
                   "h": 0.02, "R": 4})";
    if (id == "bubbling-lsc" || id == "bubbling-branching" || id == "bubbling-cones")
        return R"({"spacetime": {"kind": "bubbling", "lambda": 0.5}, "region": [0, 0.25, -0.05, 1.15], "h": 0.0025,
                   "R": 4})";
    if (id == "schwarzschild-singularity") return R"({"spacetime": {"kind": "schwarzschild", "M": 1.0}})";
    if (id == "minkowski-flatness") return R"({"spacetime": {"kind": "minkowski2"}})";
    return nullptr;
}

Json k_grid() {
    Json g = Json::array();
    for (int K = -10; K <= 10; ++K) g.push_back(K);
    return g;
}

// ---------------------------------------------------------------------------

void helix(Artifacts& a) {
    cone::Minkowski3Space M;
    Json rows = Json::array();
    double L01 = 0, k01 = 0, d01 = 0;
    bool squared_ok = true, corrected_ok = true, timelike = true;
    for (double delta : {0.1, 0.05, 0.02, 0.01}) {
        int k = static_cast<int>(std::ceil(2 * std::numbers::pi / delta));
        double d = 2 * std::numbers::pi / k;
        std::vector<Vec3> pts;
        for (int i = 0; i <= k; ++i) pts.push_back({i * d, std::cos(i * d), std::sin(i * d)});
        auto curve = PolylineCurve<Vec3>::indexed(pts);
        double L = tau_length(M, curve).value();
        double squared = 0;
        for (int i = 0; i < k; ++i) squared += std::pow(M.tau(pts[i], pts[i + 1]).value(), 2);
        double quoted = k * (std::pow(d, 4) / 12 + 2 * std::pow(d, 6) / 720);
        double corrected = k * std::sqrt(std::pow(d, 4) / 12 + 2 * std::pow(d, 6) / 720);
        squared_ok = squared_ok && squared <= quoted;
        corrected_ok = corrected_ok && L <= corrected;
        timelike = timelike && causal_character(M, curve) == CausalCharacter::timelike;
        rows.push_back({{"delta", d}, {"segments", k}, {"tau_length", L}, {"squared_sum", squared},
                        {"quoted_bound", quoted}, {"sqrt_bound", corrected}});
        a.report.push_back("delta " + fmt(d) + ": tau_length " + fmt(L) + ", squared-interval sum " + fmt(squared) +
                           ", k(d^4/12 + 2d^6/720) = " + fmt(quoted));
        if (delta == 0.01) L01 = L, k01 = quoted, d01 = d;
    }
    a.result["meshes"] = rows;
    add_check(a, "tau_length within k(d^4/12 + 2d^6/720) at delta 0.01", L01 <= k01,
              fmt(L01) + " vs " + fmt(k01) + " (per-segment tau is sqrt of the squared interval, about d^2/sqrt(12))");
    add_check(a, "tau_length below 1e-3 at delta 0.01", L01 < 1e-3, fmt(L01) + " at delta " + fmt(d01));
    add_check(a, "squared-interval sum within k(d^4/12 + 2d^6/720)", squared_ok);
    add_check(a, "tau_length within k sqrt(d^4/12 + 2d^6/720)", corrected_ok);
    add_check(a, "helix polylines timelike", timelike);
}

void seven_point(const Scene& s, Artifacts& a) {
    auto sp = make_finite(s);
    auto r = finite::topology_report(sp);
    a.result["topology"] = topology_json(r);
    topology_lines(a, r);
    if (sp.size() != 7) throw SceneError("/spacetime/points", "this example has 7 points");
    const finite::PointSet six_seven = (finite::PointSet{1} << 5) | (finite::PointSet{1} << 6);
    bool at7 = std::any_of(r.P_base_failures.begin(), r.P_base_failures.end(), [&](const finite::BaseFailure& f) {
        return f.point == 6 && f.intersection == six_seven &&
               ((f.first == "I+(1)" && f.second == "I-(2)") || (f.first == "I-(2)" && f.second == "I+(1)"));
    });
    add_check(a, "S does not cover X", !r.S_covers);
    add_check(a, "P covers X", r.P_covers);
    add_check(a, "P base property fails at 7 in I+(1) n I-(2) = {6,7}", at7);
    add_check(a, "every element of S is open in the chronological topology", r.S_in_chronological);
    add_check(a, "chronological topology strictly finer", r.alexandrov_in_chronological && !r.equal);
}

void cylinder(const Scene& s, Artifacts& a) {
    auto field = make_field(s);
    auto lat = make_lattice(s, *field);
    std::size_t pairs = 0, finite_tau = 0, unrelated = 0;
    for (int x = 0; x < lat->node_count(); x += 7)
        for (int y = 0; y < lat->node_count(); y += 5) {
            ++pairs;
            if (!lat->tau(x, y).is_infinite()) ++finite_tau;
            if (!lat->chron(x, y)) ++unrelated;
        }
    std::vector<int> pts;
    for (int v = 0; v < lat->node_count(); v += 11) pts.push_back(v);
    auto audit = audit_axioms(*lat, pts);
    bool chron_fail = std::all_of(pts.begin(), pts.end(), [&](int v) { return lat->chron(v, v); });
    a.result["nodes"] = lat->node_count();
    a.result["cyclic"] = lat->cyclic();
    a.result["pairs"] = pairs;
    a.result["audit"] = {{"diagonal", audit.diagonal}, {"positivity", audit.positivity},
                         {"reverse_triangle", audit.reverse_triangle}};
    a.report.push_back(std::to_string(lat->node_count()) + " nodes, " + std::to_string(pairs) + " sampled pairs");
    add_check(a, "lattice flagged cyclic", lat->cyclic());
    add_check(a, "tau infinite on every sampled pair", finite_tau == 0, std::to_string(finite_tau) + " finite");
    add_check(a, "chron holds on every sampled pair", unrelated == 0, std::to_string(unrelated) + " unrelated");
    add_check(a, "chronology fails (x << x)", chron_fail);
    add_check(a, "diagonal dichotomy: tau(x,x) is 0 or infinite", audit.diagonal == 0);
}

void funnel(const Scene& s, Artifacts& a) {
    auto field = make_field(s);
    const auto& F = static_cast<const cone::Funnel&>(*field);
    auto lat = make_lattice(s, *field);
    int q = lattice_node(*lat, F.q(), "/spacetime/q");
    std::vector<Vec2> sources{{0, 0}, {0.2, 0.1}, {0.2, -0.1}, {0.3, 0}};
    std::vector<Vec2> targets{{1.3, 0.3}, {1.3, -0.3}, {1.2, 0}, {1.0, 0.1}};
    std::size_t through = 0, total = 0;
    for (Vec2 p : sources)
        for (Vec2 t : targets) {
            int x = lattice_node(*lat, p, "/params"), y = lattice_node(*lat, t, "/params");
            auto g = cone::extract_maximizer(*lat, x, y);
            const auto& v = g.points();
            ++total;
            if (std::find(v.begin(), v.end(), q) != v.end()) ++through;
        }
    add_check(a, "every maximizer from J-(p) into J+(q) passes through q", through == total,
              std::to_string(through) + "/" + std::to_string(total));

    int o = lattice_node(*lat, {0, 0}, "/params");
    int y1 = lattice_node(*lat, {1.3, 0.3}, "/params"), y2 = lattice_node(*lat, {1.3, -0.3}, "/params");
    auto br = cmp::detect_branching(*lat, o, y1, y2, 0.1);
    a.result["branching"] = cmp::branch_json(br);
    a.polylines.push_back({"gamma1", PolylineCurve<Vec2>::indexed(br.gamma1)});
    a.polylines.push_back({"gamma2", PolylineCurve<Vec2>::indexed(br.gamma2)});
    bool at_q = br.branching && euclid(br.branch_point, F.q()) < 0.5 * lat->meta().spec.h;
    add_check(a, "detect_branching reports q", at_q, "branch point " + fmt(br.branch_point));
    add_check(a, "branching is timelike", br.timelike);

    cone::FunnelSpace space(F.p(), F.q());
    auto fam = cmp::funnel_family(space);
    std::vector<double> grid;
    for (int K = -10; K <= 10; ++K) grid.push_back(K);
    auto rep = cmp::singularity_scan<Vec2>(space, fam, std::span<const double>(grid));
    a.result["scan"] = cmp::scan_json(rep, fam, space);
    for (const auto& row : rep.rows)
        a.report.push_back("K = " + fmt(row.K) + ": below " + cmp::to_string(row.below.status) + ", above " +
                           cmp::to_string(row.above.status));
    add_check(a, "timelike curvature unbounded below on K in -10..10", rep.unbounded_below, rep.conclusion);
}

std::shared_ptr<const cone::CausalLattice> bubbling(const Scene& s, std::unique_ptr<cone::ConeField>& field) {
    field = make_field(s);
    return make_lattice(s, *field);
}

double lambda_of(const cone::ConeField& f) { return static_cast<const cone::Bubbling&>(f).lambda(); }

void bubbling_lsc(const Scene& s, Artifacts& a) {
    std::unique_ptr<cone::ConeField> field;
    auto lat = bubbling(s, field);
    cone::BubblingSpace B(lambda_of(*field), lat);
    Vec2 o{0, 0}, q{0.125, 1};
    ApproxSequence<Vec2> seq{o, q, {}};
    const double h = lat->meta().spec.h;
    Json terms = Json::array();
    for (int n = 4; 1.0 / n >= 4 * h; n += 4) {
        seq.terms.push_back({{1.0 / n, 0}, q});
        terms.push_back({{"n", n}, {"tau", time_json(B.tau({1.0 / n, 0}, q))}});
    }
    auto rep = audit_axioms(B, std::vector<Vec2>{o, q}, {seq});
    auto limit = B.tau(o, q);
    a.result["tau_limit"] = time_json(limit);
    a.result["sequence"] = terms;
    a.report.push_back("tau(0, q) = " + fmt(limit) + "; tau(p_n, q) for p_n = (1/n, 0), n = 4.." +
                       std::to_string(terms.back()["n"].get<int>()));
    for (const auto& t : terms)
        a.report.push_back("  n = " + std::to_string(t["n"].get<int>()) + ": " +
                           (t["tau"].is_string() ? std::string("inf") : fmt(t["tau"].get<double>())));
    add_check(a, "lower semicontinuity fails along p_n -> 0", rep.lsc == 1);
    std::vector<Triple<Vec2>> triples{{o, {0, 0.9}, q}};
    bool pattern = B.caus(o, {0, 0.9}) && B.chron({0, 0.9}, q);
    add_check(a, "push-up fails for 0 <= (0, 0.9) << q", pattern && push_up_audit(B, triples).size() == 1);
}

void bubbling_branching(const Scene& s, Artifacts& a) {
    std::unique_ptr<cone::ConeField> field;
    auto lat = bubbling(s, field);
    cone::BubblingSpace B(lambda_of(*field), lat);
    const double u0 = 0.125, x0 = 1.0;
    int o = lattice_node(*lat, {0, 0}, "/params"), q = lattice_node(*lat, {u0, x0}, "/params");
    auto g = cone::extract_maximizer(*lat, o, q);
    auto c = cone::to_coordinates(*lat, g);
    auto t = cone::lattice_tau(*lat, o, q);
    auto ch = causal_character(*lat, g);
    std::size_t leave = 0;
    while (leave + 1 < c.size() && c.points()[leave + 1].x0 == 0.0) ++leave;
    double xl = c.points()[leave].x1;
    double lo = x0 - 2 * std::sqrt(u0), hi = x0 + B.left_integral(u0);
    a.polylines.push_back({"maximizer", c});
    a.result["tau"] = time_json(t);
    a.result["causal_character"] = to_string(ch);
    a.result["leaves_axis_at"] = xl;
    a.result["corridor"] = {lo, hi};
    a.report.push_back("maximizer 0 -> (1/8, 1): tau " + fmt(t) + ", " + to_string(ch) + ", leaves the axis at x = " + fmt(xl));
    add_check(a, "tau(0, q) >= 1/8", t.value() >= 0.125);
    add_check(a, "maximizer changes its causal character", ch == CausalCharacter::mixed_causal);
    add_check(a, "leaves the axis inside the corridor", xl > lo && xl < hi, fmt(lo) + " < " + fmt(xl) + " < " + fmt(hi));

    int y2 = lattice_node(*lat, {u0, 0.7}, "/params");
    auto br = cmp::detect_branching(*lat, o, q, y2, 0.05);
    a.result["branching"] = cmp::branch_json(br);
    add_check(a, "maximizers to (1/8, 1) and (1/8, 0.7) branch on the axis",
              br.branching && br.branch_point.x0 == 0.0 && br.branch_point.x1 > 0.05,
              "branch point " + fmt(br.branch_point));
    add_check(a, "shared segment is null (no timelike branching)", br.shared == CausalCharacter::null && !br.timelike);
}

void bubbling_cones(const Scene& s, Artifacts& a) {
    auto field = make_field(s);
    const double lambda = lambda_of(*field);
    const double u0 = 0.125, x0 = 1.0;
    cone::NullBoundaryOptions o;
    o.region = cone::Region{0, 1, -10, 10};
    o.max_extent = x0;
    auto nu = cone::null_boundary(*field, {u0, x0}, cone::Branch::left, cone::Direction::past, o);
    auto mu = cone::null_boundary(*field, {u0, x0}, cone::Branch::right, cone::Direction::past, o);
    a.polylines.push_back({"nu", nu.curve});
    a.polylines.push_back({"mu", mu.curve});

    double worst = 0;
    const bool closed_form = lambda == 0.5;
    if (closed_form)
        for (auto p : nu.curve.points()) {
            double d = x0 - p.x1;
            double v = d <= 2 * std::sqrt(u0) ? 0.25 * std::pow(2 * std::sqrt(u0) - d, 2) : 0.0;
            worst = std::max(worst, std::abs(p.x0 - v));
        }
    auto F = [&](double r) { return 1.0 / (-2 + std::pow(r, lambda)); };
    double xprime = x0 - boost::math::quadrature::gauss_kronrod<double, 61>::integrate(F, 0.0, u0, 15, 1e-14);
    Vec2 end = mu.curve.back();
    a.result["nu"] = {{"points", nu.curve.size()}, {"end", vec_json(nu.curve.back())}, {"max_closed_form_error", worst}};
    a.result["mu"] = {{"points", mu.curve.size()}, {"end", vec_json(end)}, {"x_prime", xprime}};
    a.report.push_back("nu: " + std::to_string(nu.curve.size()) + " points, ends at " + fmt(nu.curve.back()));
    a.report.push_back("mu: " + std::to_string(mu.curve.size()) + " points, ends at " + fmt(end) + ", x' = " + fmt(xprime));
    add_check(a, "nu matches u = (2 sqrt(u0) - (x0 - x))^2 / 4 to 1e-6", closed_form && worst <= 1e-6, fmt(worst));
    add_check(a, "mu reaches the axis", mu.hit_boundary && std::abs(end.x0) <= 1e-12);
    add_check(a, "mu endpoint matches x' to 1e-8", std::abs(end.x1 - xprime) <= 1e-8 * std::max(1.0, std::abs(xprime)),
              fmt(end.x1) + " vs " + fmt(xprime));
}

void schwarzschild(const Scene& s, Artifacts& a) {
    const double M = s.spacetime.value("M", 1.0), C = 0.5;
    Json fam = Json::array();
    bool closed = true, monotone = true, residual = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 20; ++k) {
        auto f = cone::schwarzschild_family(M, C, k);
        double dev = std::abs(f.scalar_product + 1);
        closed = closed && std::abs(f.scalar_product - f.scalar_product_closed) <= 1e-8;
        monotone = monotone && dev < prev;
        residual = residual && f.residual < 1e-10;
        prev = dev;
        fam.push_back({{"k", k}, {"r_z", f.z.x0}, {"a", f.a}, {"b", f.b}, {"c", f.c},
                       {"scalar_product", f.scalar_product}, {"closed_form", f.scalar_product_closed}});
    }
    a.result["scalar_products"] = fam;
    add_check(a, "scalar product at z_k matches the closed form to 1e-8 (k = 1..20)", closed);
    add_check(a, "scalar product tends monotonically to -1", monotone);
    add_check(a, "vertex radii solved to 1e-10", residual);

    cone::SchwarzschildSpace space(M);
    std::vector<int> ks{1, 2, 5, 10, 20, 100, 1000, 10000, 100000};
    auto tris = cmp::schwarzschild_triangles(space, C, ks, 65);
    std::vector<double> grid;
    for (int K = -10; K <= 10; ++K) grid.push_back(K);
    cmp::ScanOptions o;
    o.certify.points_per_side = 39;
    o.certify.tol = 1e-9;
    auto rep = cmp::singularity_scan<Vec2>(space, tris, std::span<const double>(grid), o);
    a.result["scan"] = cmp::scan_json(rep, tris, space);
    a.report.push_back("   K  below       above       witness (triangle: tau vs tau_bar)");
    bool witnesses = true;
    for (const auto& row : rep.rows) {
        char buf[256];
        std::string w = "-";
        if (row.below.witness)
            w = row.below.witness->label + ": " + fmt(row.below.witness->tau) + " > " + fmt(row.below.witness->tau_bar);
        witnesses = witnesses && row.below.witness && row.below.witness->tau > row.below.witness->tau_bar;
        std::snprintf(buf, sizeof buf, "%4g  %-10s  %-10s  %s", row.K, cmp::to_string(row.below.status),
                      cmp::to_string(row.above.status), w.c_str());
        a.report.push_back(buf);
    }
    a.report.push_back("conclusion: " + rep.conclusion);
    add_check(a, "every K in -10..10 refuted on the below side", rep.unbounded_below);
    add_check(a, "each refutation has an explicit witness pair", witnesses);
}

void flatness(const Scene& s, Artifacts& a) {
    cone::Minkowski2Space M;
    auto tris = cmp::minkowski_triangles(M, 40, s.seed, 1.0, 5);
    cmp::CertifyOptions o;
    o.points_per_side = 9;
    o.tol = 1e-9;
    Json verdicts = Json::array();
    for (auto side : {cmp::BoundSide::below, cmp::BoundSide::above}) {
        auto v = cmp::certify_curvature_bound(M, tris, 0.0, side, cmp::Mode::timelike, o);
        verdicts.push_back(cmp::verdict_json(v, tris, M));
        a.report.push_back(std::string("K = 0, ") + cmp::to_string(side) + ": " + cmp::to_string(v.status) +
                           ", max |tau - tau_bar| = " + fmt(v.max_abs_diff));
        add_check(a, std::string("consistent on the ") + cmp::to_string(side) + " side",
                  v.status == cmp::Status::consistent && v.evaluated == tris.size());
        add_check(a, std::string("max |tau - tau_bar| within tolerance (") + cmp::to_string(side) + ")",
                  v.max_abs_diff <= o.tol, fmt(v.max_abs_diff));
    }
    a.result["verdicts"] = verdicts;
}

}  // namespace

const std::vector<std::string>& reproduce_ids() {
    static const std::vector<std::string> ids{"helix-zero-length",  "seven-point-topology", "lorentz-cylinder",
                                              "funnel-branching",   "bubbling-lsc",         "bubbling-branching",
                                              "bubbling-cones",     "schwarzschild-singularity", "minkowski-flatness"};
    return ids;
}

Scene pinned_scene(const std::string& id) {
    const char* text = pinned_text(id);
    if (!text) throw SceneError("/params/id", "unknown example id '" + id + "'");
    auto j = Json::parse(text);
    j["task"] = "reproduce";
    j["params"] = {{"id", id}};
    return parse_scene(j.dump());
}

Artifacts reproduce(const std::string& id) { return run_scene(pinned_scene(id)); }

namespace detail {

Artifacts run_reproduce(const Scene& scene) {
    if (!scene.params.contains("id") || !scene.params["id"].is_string())
        throw SceneError("/params/id", "expected an example id");
    const auto id = scene.params["id"].get<std::string>();
    Scene pinned = pinned_scene(id);
    Scene s = scene;
    if (s.kind != pinned.kind)
        throw SceneError("/spacetime/kind", "example '" + id + "' runs on '" + pinned.kind + "'");
    if (!s.lattice) s.lattice = pinned.lattice;
    if (s.lattice && pinned.backend == "lattice") s.backend = "lattice";

    Artifacts a;
    a.result["task"] = "reproduce";
    a.result["id"] = id;
    Json src = s.source;
    if (s.lattice && !src.contains("region")) {
        const auto& L = *s.lattice;
        src["region"] = {L.region.lo0, L.region.hi0, L.region.lo1, L.region.hi1};
        src["h"] = L.h;
        src["R"] = L.R;
        src["quadrature"] = L.quadrature;
    }
    a.result["scene"] = src;
    a.report.push_back("reproduce " + id);
    if (s.lattice)
        a.report.push_back("lattice h = " + fmt(s.lattice->h) + ", R = " + std::to_string(s.lattice->R) +
                           ", quadrature " + std::to_string(s.lattice->quadrature));

    if (id == "helix-zero-length") helix(a);
    else if (id == "seven-point-topology") seven_point(s, a);
    else if (id == "lorentz-cylinder") cylinder(s, a);
    else if (id == "funnel-branching") funnel(s, a);
    else if (id == "bubbling-lsc") bubbling_lsc(s, a);
    else if (id == "bubbling-branching") bubbling_branching(s, a);
    else if (id == "bubbling-cones") bubbling_cones(s, a);
    else if (id == "schwarzschild-singularity") schwarzschild(s, a);
    else if (id == "minkowski-flatness") flatness(s, a);

    std::size_t failed = std::count_if(a.checks.begin(), a.checks.end(), [](const Check& c) { return !c.pass; });
    a.report.push_back(failed ? std::to_string(failed) + " check(s) failed" : "all checks passed");
    return a;
}

}  // namespace detail

}  // namespace lorentz::cli
