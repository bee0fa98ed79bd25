#include <algorithm>
#include <cmath>
#include <random>

#include "common.hpp"
#include "lorentz/cli/run.hpp"
#include "lorentz/comparison/comparison.hpp"
#include "lorentz/comparison/families.hpp"
#include "lorentz/comparison/records.hpp"
#include "lorentz/cone/null_boundary.hpp"
#include "lorentz/core/audit.hpp"
#include "lorentz/core/length.hpp"
#include "lorentz/finite/topology.hpp"

namespace lorentz::cli {

using namespace detail;
namespace cmp = lorentz::comparison;

Json time_json(ExtTime t) {
    if (t.is_infinite()) return "inf";
    return t.value();
}

Json vec_json(Vec2 p) { return Json::array({p.x0, p.x1}); }

namespace {

template <class T>
T opt(const Json& params, const char* key, T fallback) {
    return params.contains(key) ? params[key].get<T>() : fallback;
}

Json audit_json(const AuditReport& r) {
    Json w = Json::array();
    for (const auto& v : r.witnesses) w.push_back({{"kind", v.kind}, {"indices", v.indices}, {"detail", v.detail}});
    return {{"points", r.points},
            {"chains_checked", r.chains_checked},
            {"reverse_triangle", r.reverse_triangle},
            {"positivity", r.positivity},
            {"diagonal", r.diagonal},
            {"lower_semicontinuity", r.lsc},
            {"witnesses", w}};
}

void audit_lines(Artifacts& a, const AuditReport& r) {
    a.report.push_back("points " + std::to_string(r.points) + ", causal chains checked " +
                       std::to_string(r.chains_checked));
    a.report.push_back("violations: reverse triangle " + std::to_string(r.reverse_triangle) + ", positivity " +
                       std::to_string(r.positivity) + ", diagonal " + std::to_string(r.diagonal) +
                       ", lower semicontinuity " + std::to_string(r.lsc));
    for (const auto& v : r.witnesses) a.report.push_back("  " + v.kind + ": " + v.detail);
}

template <class P>
std::vector<Triple<P>> push_up_triples(const SpaceHandle<P>& space, const std::vector<P>& pts) {
    std::vector<Triple<P>> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !space.caus(pts[i], pts[j])) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                if ((space.caus(pts[i], pts[j]) && space.chron(pts[j], pts[k])) ||
                    (space.chron(pts[i], pts[j]) && space.caus(pts[j], pts[k])))
                    out.push_back({pts[i], pts[j], pts[k]});
            }
        }
    return out;
}

// ---------------------------------------------------------------------------

void task_tau(const Scene& s, Artifacts& a) {
    if (!s.params.contains("pairs") || !s.params["pairs"].is_array())
        throw SceneError("/params/pairs", "expected a list of [p, q] pairs");
    const auto& pairs = s.params["pairs"];
    Json rows = Json::array();
    auto where = [](std::size_t i, int k) { return "/params/pairs/" + std::to_string(i) + "/" + std::to_string(k); };
    auto check_pair = [&](std::size_t i) {
        if (!pairs[i].is_array() || pairs[i].size() != 2)
            throw SceneError("/params/pairs/" + std::to_string(i), "expected [p, q]");
    };

    if (s.kind == "finite") {
        auto sp = make_finite(s);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            check_pair(i);
            int x = finite_label(pairs[i][0], sp.size(), where(i, 0)), y = finite_label(pairs[i][1], sp.size(), where(i, 1));
            auto t = sp.tau(x, y);
            rows.push_back({{"p", x + 1}, {"q", y + 1}, {"tau", time_json(t)}, {"chron", sp.chron(x, y)}, {"caus", sp.caus(x, y)}});
            a.report.push_back("tau(" + std::to_string(x + 1) + ", " + std::to_string(y + 1) + ") = " + fmt(t));
        }
    } else if (s.kind == "model") {
        double K = s.spacetime["K"].get<double>();
        model::ModelSpace sp(K);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            check_pair(i);
            Vec2 p = point(pairs[i][0], where(i, 0)), q = point(pairs[i][1], where(i, 1));
            auto P = model::chart_point(K, p.x0, p.x1), Q = model::chart_point(K, q.x0, q.x1);
            auto t = sp.tau(P, Q);
            rows.push_back({{"p", vec_json(p)}, {"q", vec_json(q)}, {"tau", time_json(t)}, {"chron", sp.chron(P, Q)}, {"caus", sp.caus(P, Q)}});
            a.report.push_back("tau" + fmt(p) + " -> " + fmt(q) + " = " + fmt(t));
        }
    } else if (s.backend == "exact") {
        auto sp = make_exact(s);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            check_pair(i);
            Vec2 p = point(pairs[i][0], where(i, 0)), q = point(pairs[i][1], where(i, 1));
            auto t = sp->tau(p, q);
            rows.push_back({{"p", vec_json(p)}, {"q", vec_json(q)}, {"tau", time_json(t)}, {"chron", sp->chron(p, q)}, {"caus", sp->caus(p, q)}});
            a.report.push_back("tau" + fmt(p) + " -> " + fmt(q) + " = " + fmt(t));
        }
    } else {
        auto field = make_field(s);
        auto lat = make_lattice(s, *field);
        std::unique_ptr<SpaceHandle<Vec2>> oracle;
        if (s.kind == "minkowski2" || s.kind == "schwarzschild" || s.kind == "funnel") oracle = make_exact(s);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            check_pair(i);
            Vec2 p = point(pairs[i][0], where(i, 0)), q = point(pairs[i][1], where(i, 1));
            int x = lattice_node(*lat, p, where(i, 0)), y = lattice_node(*lat, q, where(i, 1));
            auto t = cone::lattice_tau(*lat, x, y);
            Json row{{"p", vec_json(lat->coord(x))}, {"q", vec_json(lat->coord(y))}, {"tau", time_json(t)},
                     {"chron", lat->chron(x, y)}, {"caus", lat->caus(x, y)}};
            std::string line = "tau" + fmt(lat->coord(x)) + " -> " + fmt(lat->coord(y)) + " = " + fmt(t);
            if (oracle) {
                auto e = oracle->tau(lat->coord(x), lat->coord(y));
                row["exact"] = time_json(e);
                double gap = e.positive() ? (e.value() - t.value()) / e.value() : 0.0;
                row["relative_gap"] = gap;
                line += "  (exact " + fmt(e) + ", relative gap " + fmt(gap) + ")";
            }
            rows.push_back(row);
            a.report.push_back(line);
        }
    }
    a.result["pairs"] = rows;
}

void task_maximizer(const Scene& s, Artifacts& a) {
    if (s.backend != "lattice") throw SceneError("/backend", "maximizer extraction needs the lattice backend");
    for (const char* k : {"from", "to"})
        if (!s.params.contains(k)) throw SceneError(std::string("/params/") + k, "missing required key");
    auto field = make_field(s);
    auto lat = make_lattice(s, *field);
    int x = lattice_node(*lat, point(s.params["from"], "/params/from"), "/params/from");
    int y = lattice_node(*lat, point(s.params["to"], "/params/to"), "/params/to");
    auto g = cone::extract_maximizer(*lat, x, y);
    auto c = cone::to_coordinates(*lat, g);
    auto t = cone::lattice_tau(*lat, x, y);
    auto character = causal_character(*lat, g);
    bool maximal = is_maximal(*lat, g, lat->tolerance());
    a.polylines.push_back({"maximizer", c});
    a.result["from"] = vec_json(lat->coord(x));
    a.result["to"] = vec_json(lat->coord(y));
    a.result["tau"] = time_json(t);
    a.result["vertices"] = c.size();
    a.result["causal_character"] = to_string(character);
    a.result["maximal"] = maximal;
    a.report.push_back("maximizer " + fmt(lat->coord(x)) + " -> " + fmt(lat->coord(y)) + ": tau = " + fmt(t) + ", " +
                       std::to_string(c.size()) + " vertices, " + to_string(character));
}

void task_cones(const Scene& s, Artifacts& a) {
    if (!s.params.contains("point")) throw SceneError("/params/point", "missing required key");
    auto field = make_field(s);
    Vec2 p = point(s.params["point"], "/params/point");
    std::string dir = opt<std::string>(s.params, "direction", "future");
    if (dir != "future" && dir != "past") throw SceneError("/params/direction", "expected 'future' or 'past'");
    cone::NullBoundaryOptions o;
    o.max_extent = opt<double>(s.params, "extent", 1.0);
    if (s.lattice) o.region = s.lattice->region;
    auto d = dir == "future" ? cone::Direction::future : cone::Direction::past;
    for (auto [name, br] : {std::pair{"left", cone::Branch::left}, std::pair{"right", cone::Branch::right}}) {
        auto r = cone::null_boundary(*field, p, br, d, o);
        a.polylines.push_back({name, r.curve});
        a.result[name] = {{"points", r.curve.size()},
                          {"end", vec_json(r.curve.back())},
                          {"hit_boundary", r.hit_boundary},
                          {"followed_boundary", r.followed_boundary}};
        a.report.push_back(std::string(name) + " " + dir + " null boundary from " + fmt(p) + " ends at " +
                           fmt(r.curve.back()) + (r.hit_boundary ? " (region boundary)" : ""));
    }
}

void task_audit(const Scene& s, Artifacts& a) {
    const int n = opt<int>(s.params, "samples", 40);
    if (n < 1) throw SceneError("/params/samples", "expected a positive count");
    std::mt19937_64 rng(s.seed);
    auto box = [&](cone::Region fallback) { return s.lattice ? s.lattice->region : fallback; };
    std::size_t push_up = 0, triples = 0;

    if (s.kind == "finite") {
        auto sp = make_finite(s);
        std::vector<int> pts(sp.size());
        for (int i = 0; i < sp.size(); ++i) pts[i] = i;
        auto r = audit_axioms(sp, pts);
        auto tr = push_up_triples<int>(sp, pts);
        triples = tr.size();
        push_up = push_up_audit<int>(sp, tr).size();
        a.result["audit"] = audit_json(r);
        audit_lines(a, r);
    } else if (s.kind == "model") {
        double K = s.spacetime["K"].get<double>();
        model::ModelSpace sp(K);
        auto b = box({0, 1, -0.5, 0.5});
        std::uniform_real_distribution<double> U0(b.lo0, b.hi0), U1(b.lo1, b.hi1);
        std::vector<model::ModelPoint> pts;
        for (int i = 0; i < n; ++i) {
            double T = U0(rng), X = U1(rng);
            pts.push_back(model::chart_point(K, T, X));
        }
        auto r = audit_axioms(sp, pts);
        auto tr = push_up_triples<model::ModelPoint>(sp, pts);
        triples = tr.size();
        push_up = push_up_audit<model::ModelPoint>(sp, tr).size();
        a.result["audit"] = audit_json(r);
        audit_lines(a, r);
    } else if (s.backend == "exact") {
        auto sp = make_exact(s);
        cone::Region fb = s.kind == "schwarzschild" ? cone::Region{0.3, 1.8, -0.5, 0.5} : cone::Region{0, 2, -1, 1};
        auto b = box(fb);
        std::uniform_real_distribution<double> U0(b.lo0, b.hi0), U1(b.lo1, b.hi1);
        std::unique_ptr<cone::ConeField> field = s.kind == "funnel" ? make_field(s) : nullptr;
        std::vector<Vec2> pts;
        for (int tries = 0; static_cast<int>(pts.size()) < n && tries < 1000 * n; ++tries) {
            Vec2 p{U0(rng), U1(rng)};
            if (field && !field->contains(p)) continue;
            pts.push_back(p);
        }
        auto r = audit_axioms(*sp, pts);
        auto tr = push_up_triples<Vec2>(*sp, pts);
        triples = tr.size();
        push_up = push_up_audit<Vec2>(*sp, tr).size();
        a.result["audit"] = audit_json(r);
        audit_lines(a, r);
    } else {
        auto field = make_field(s);
        auto lat = make_lattice(s, *field);
        std::uniform_int_distribution<int> U(0, lat->node_count() - 1);
        std::vector<int> pts;
        for (int i = 0; i < n; ++i) pts.push_back(U(rng));
        auto r = audit_axioms(*lat, pts);
        a.result["audit"] = audit_json(r);
        a.result["cyclic"] = lat->cyclic();
        audit_lines(a, r);
        if (s.kind == "bubbling") {
            // Curve-class relations, where push-up can fail.
            cone::BubblingSpace b(static_cast<const cone::Bubbling&>(*field).lambda(), lat);
            std::vector<Vec2> cp;
            for (int v : pts) cp.push_back(lat->coord(v));
            auto tr = push_up_triples<Vec2>(b, cp);
            triples = tr.size();
            push_up = push_up_audit<Vec2>(b, tr).size();
        } else {
            auto tr = push_up_triples<int>(*lat, pts);
            triples = tr.size();
            push_up = push_up_audit<int>(*lat, tr).size();
        }
    }
    a.result["push_up"] = {{"triples", triples}, {"violations", push_up}};
    a.report.push_back("push-up: " + std::to_string(push_up) + " violations over " + std::to_string(triples) + " triples");
}

void task_ladder(const Scene& s, Artifacts& a) {
    if (s.kind != "finite") throw SceneError("/task", "ladder needs a finite space");
    auto sp = make_finite(s);
    auto r = finite::ladder_report(sp);
    Json cw = Json::array();
    for (auto [x, y] : r.causal_witnesses) cw.push_back({x + 1, y + 1});
    Json chw = Json::array();
    for (int x : r.chron_witnesses) chw.push_back(x + 1);
    a.result["chronological"] = r.chronological;
    a.result["causal"] = r.causal;
    a.result["chronology_witnesses"] = chw;
    a.result["causality_witnesses"] = cw;
    a.report.push_back(std::string("chronological: ") + (r.chronological ? "yes" : "no") +
                       ", causal: " + (r.causal ? "yes" : "no"));
}

Json sets_json(const std::vector<finite::NamedSet>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back({{"name", s.name}, {"members", finite::set_to_string(s.members)}});
    return out;
}

Json failures_json(const std::vector<finite::BaseFailure>& v) {
    Json out = Json::array();
    for (const auto& f : v)
        out.push_back({{"point", f.point + 1},
                       {"first", f.first},
                       {"second", f.second},
                       {"intersection", finite::set_to_string(f.intersection)}});
    return out;
}

}  // namespace

namespace detail {

Json topology_json(const finite::TopologyReport& r) {
    Json su = Json::array(), pu = Json::array();
    for (int p : r.S_uncovered) su.push_back(p + 1);
    for (int p : r.P_uncovered) pu.push_back(p + 1);
    return {{"S", sets_json(r.S)},
            {"P", sets_json(r.P)},
            {"S_covers", r.S_covers},
            {"P_covers", r.P_covers},
            {"S_uncovered", su},
            {"P_uncovered", pu},
            {"S_base_failures", failures_json(r.S_base_failures)},
            {"P_base_failures", failures_json(r.P_base_failures)},
            {"topologies_computed", r.topologies_computed},
            {"alexandrov_sets", r.alexandrov.size()},
            {"chronological_sets", r.chronological.size()},
            {"alexandrov_in_chronological", r.alexandrov_in_chronological},
            {"equal", r.equal}};
}

void topology_lines(Artifacts& a, const finite::TopologyReport& r) {
    a.report.push_back(std::string("S covers X: ") + (r.S_covers ? "yes" : "no"));
    for (int p : r.S_uncovered) a.report.push_back("  not covered by S: " + std::to_string(p + 1));
    a.report.push_back(std::string("P covers X: ") + (r.P_covers ? "yes" : "no"));
    for (const auto& f : r.P_base_failures)
        a.report.push_back("  P base failure at " + std::to_string(f.point + 1) + ": " + f.first + " n " + f.second +
                           " = " + finite::set_to_string(f.intersection) + " contains no element of P around it");
    a.report.push_back(std::string("Alexandrov topology inside chronological topology: ") +
                       (r.alexandrov_in_chronological ? "yes" : "no") + (r.equal ? " (equal)" : " (strictly coarser)"));
}

}  // namespace detail

namespace {

void task_topology(const Scene& s, Artifacts& a) {
    if (s.kind != "finite") throw SceneError("/task", "topology needs a finite space");
    auto r = finite::topology_report(make_finite(s));
    a.result["topology"] = topology_json(r);
    topology_lines(a, r);
}

// ---------------------------------------------------------------------------

struct Family {
    std::string kind;  // vec2 | model | lattice
    std::unique_ptr<SpaceHandle<Vec2>> space;
    std::vector<cmp::TriangleInstance<Vec2>> tris;
    std::unique_ptr<model::ModelSpace> mspace;
    std::vector<cmp::TriangleInstance<model::ModelPoint>> mtris;
    std::shared_ptr<const cone::CausalLattice> lat;
    std::vector<cmp::TriangleInstance<int>> ltris;
    double backend_error = 0;
};

cmp::CertifyOptions certify_options(const Scene& s, double backend_error);
cmp::Mode mode_of(const Scene& s);

Family make_family(const Scene& s) {
    const auto& p = s.params;
    Family f;
    if (s.kind == "model") {
        double K = s.spacetime["K"].get<double>();
        f.kind = "model";
        f.mspace = std::make_unique<model::ModelSpace>(K);
        std::vector<std::array<double, 3>> sides{{0.3, 0.4, 0.9}, {0.5, 0.2, 0.8}, {0.4, 0.4, 1.0}};
        if (p.contains("sides")) sides = p["sides"].get<std::vector<std::array<double, 3>>>();
        f.mtris = cmp::model_triangles(*f.mspace, sides, opt<int>(p, "side_points", 9));
        return f;
    }
    if (s.backend == "lattice") {
        f.kind = "lattice";
        auto field = make_field(s);
        f.lat = make_lattice(s, *field);
        if (!p.contains("triangles") || !p["triangles"].is_array())
            throw SceneError("/params/triangles", "lattice comparison needs a list of [x, y, z] triangles");
        // Refinement gap at h/2 with the same physical stencil reach.
        auto fine_spec = *s.lattice;
        fine_spec.h /= 2;
        fine_spec.R *= 2;
        auto fine = make_lattice(*field, fine_spec);
        for (std::size_t i = 0; i < p["triangles"].size(); ++i) {
            const auto& t = p["triangles"][i];
            std::string w = "/params/triangles/" + std::to_string(i);
            if (!t.is_array() || t.size() != 3) throw SceneError(w, "expected [x, y, z]");
            std::array<Vec2, 3> v{point(t[0], w + "/0"), point(t[1], w + "/1"), point(t[2], w + "/2")};
            std::array<int, 3> n{};
            for (int k = 0; k < 3; ++k) {
                n[k] = lattice_node(*f.lat, v[k], w + "/" + std::to_string(k));
            }
            f.ltris.push_back(cmp::lattice_triangle(*f.lat, n[0], n[1], n[2], "triangle " + std::to_string(i + 1)));
        }
        // Gap over every sampled pair; vertex pairs alone can sit on stencil directions.
        // Coarse error taken as twice the gap (first-order Richardson).
        auto copts = certify_options(s, 0.0);
        for (std::size_t i = 0; i < f.ltris.size(); ++i) {
            auto prep = cmp::prepare_triangle<int>(*f.lat, f.ltris[i], i, mode_of(s), copts);
            if (!prep.rejected.empty()) continue;
            const std::size_t n = prep.points.size();
            std::vector<int> fine_nodes;
            for (int v : prep.points) fine_nodes.push_back(lattice_node(*fine, f.lat->coord(v), "/params/triangles"));
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) pairs.push_back({fine_nodes[a], fine_nodes[b]});
            auto ft = cone::lattice_tau_many(*fine, pairs);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const ExtTime c = prep.tau[k], d = ft[k];
                if (c.is_finite() && d.is_finite()) f.backend_error = std::max(f.backend_error, 2 * std::abs(d.value() - c.value()));
            }
        }
        return f;
    }
    f.kind = "vec2";
    f.space = make_exact(s);
    if (s.kind == "minkowski2") {
        f.tris = cmp::minkowski_triangles(static_cast<const cone::Minkowski2Space&>(*f.space), opt<int>(p, "count", 20),
                                          s.seed, opt<double>(p, "size", 1.0), opt<int>(p, "side_points", 5));
    } else if (s.kind == "schwarzschild") {
        std::vector<int> ks{1, 2, 5, 10, 20, 100, 1000, 10000, 100000};
        if (p.contains("ks")) ks = p["ks"].get<std::vector<int>>();
        f.tris = cmp::schwarzschild_triangles(static_cast<const cone::SchwarzschildSpace&>(*f.space),
                                              opt<double>(p, "C", 0.5), ks, opt<int>(p, "side_points", 65));
    } else if (s.kind == "funnel") {
        const auto& F = static_cast<const cone::FunnelSpace&>(*f.space);
        if (p.contains("triangles")) {
            for (std::size_t i = 0; i < p["triangles"].size(); ++i) {
                const auto& t = p["triangles"][i];
                std::string w = "/params/triangles/" + std::to_string(i);
                if (!t.is_array() || t.size() != 3) throw SceneError(w, "expected [x, y, z]");
                f.tris.push_back(cmp::funnel_triangle(F, point(t[0], w + "/0"), point(t[1], w + "/1"), point(t[2], w + "/2"),
                                                      "triangle " + std::to_string(i + 1)));
            }
        } else {
            f.tris = cmp::funnel_family(F);
        }
    }
    return f;
}

cmp::CertifyOptions certify_options(const Scene& s, double backend_error) {
    cmp::CertifyOptions o;
    o.points_per_side = opt<int>(s.params, "points_per_side", 9);
    o.tol = opt<double>(s.params, "tol", 1e-9);
    o.backend_error = backend_error;
    if (o.points_per_side < 1) throw SceneError("/params/points_per_side", "expected a positive count");
    return o;
}

cmp::Mode mode_of(const Scene& s) {
    auto m = opt<std::string>(s.params, "mode", "timelike");
    if (m == "timelike") return cmp::Mode::timelike;
    if (m == "causal") return cmp::Mode::causal;
    throw SceneError("/params/mode", "expected 'timelike' or 'causal'");
}

void verdict_lines(Artifacts& a, const cmp::ComparisonVerdict& v) {
    std::string line = "K = " + fmt(v.K) + ", " + cmp::to_string(v.side) + ": " + cmp::to_string(v.status) + " (" +
                       std::to_string(v.evaluated) + " triangles, " + std::to_string(v.samples) + " pairs, " +
                       std::to_string(v.skipped.size()) + " skipped, " + std::to_string(v.rejected.size()) +
                       " rejected, max |tau - tau_bar| = " + fmt(v.max_abs_diff) + ")";
    a.report.push_back(line);
    if (v.witness)
        a.report.push_back("  witness in " + v.witness->label + ": tau = " + fmt(v.witness->tau) +
                           ", tau_bar = " + fmt(v.witness->tau_bar) + ", margin " + fmt(v.witness->margin) +
                           " > threshold " + fmt(v.witness->threshold));
}

template <class P>
void compare_on(const Scene& s, Artifacts& a, const SpaceHandle<P>& space, const std::vector<cmp::TriangleInstance<P>>& tris,
                double backend_error) {
    if (tris.empty()) throw Error("compare: empty triangle family");
    double K = opt<double>(s.params, "K", 0.0);
    auto side = opt<std::string>(s.params, "side", "both");
    if (side != "below" && side != "above" && side != "both")
        throw SceneError("/params/side", "expected 'below', 'above' or 'both'");
    auto o = certify_options(s, backend_error);
    auto mode = mode_of(s);
    Json verdicts = Json::array();
    for (auto bs : {cmp::BoundSide::below, cmp::BoundSide::above}) {
        if (side != "both" && side != cmp::to_string(bs)) continue;
        auto v = cmp::certify_curvature_bound(space, tris, K, bs, mode, o);
        verdicts.push_back(cmp::verdict_json(v, tris, space));
        verdict_lines(a, v);
    }
    Json fam = Json::array();
    for (const auto& t : tris) fam.push_back(cmp::triangle_json(t));
    a.result["family"] = fam;
    a.result["verdicts"] = verdicts;
}

template <class P>
void scan_on(const Scene& s, Artifacts& a, const SpaceHandle<P>& space, const std::vector<cmp::TriangleInstance<P>>& tris,
             double backend_error) {
    std::vector<double> grid;
    for (int K = -10; K <= 10; ++K) grid.push_back(K);
    if (s.params.contains("K_grid")) grid = s.params["K_grid"].get<std::vector<double>>();
    cmp::ScanOptions o;
    o.certify = certify_options(s, backend_error);
    o.mode = mode_of(s);
    auto rep = cmp::singularity_scan<P>(space, tris, std::span<const double>(grid), o);
    a.result["scan"] = cmp::scan_json(rep, tris, space);
    for (const auto& row : rep.rows) {
        verdict_lines(a, row.below);
        verdict_lines(a, row.above);
    }
    a.report.push_back("conclusion: " + rep.conclusion);
}

void task_compare(const Scene& s, Artifacts& a, bool scan) {
    if (s.kind == "finite") throw SceneError("/spacetime/kind", "triangle comparison needs a continuum spacetime");
    auto f = make_family(s);
    if (f.kind == "model") {
        scan ? scan_on(s, a, *f.mspace, f.mtris, 0.0) : compare_on(s, a, *f.mspace, f.mtris, 0.0);
    } else if (f.kind == "lattice") {
        a.result["backend_error"] = f.backend_error;
        scan ? scan_on(s, a, *f.lat, f.ltris, f.backend_error) : compare_on(s, a, *f.lat, f.ltris, f.backend_error);
    } else {
        scan ? scan_on(s, a, *f.space, f.tris, 0.0) : compare_on(s, a, *f.space, f.tris, 0.0);
    }
}

}  // namespace

Artifacts run_scene(const Scene& s) {
    if (s.task == "reproduce") return detail::run_reproduce(s);
    Artifacts a;
    a.result["task"] = s.task;
    a.result["scene"] = s.source;
    a.report.push_back("task " + s.task + " on " + s.kind + " (" + s.backend + " backend)");
    if (s.lattice)
        a.report.push_back("lattice h = " + fmt(s.lattice->h) + ", R = " + std::to_string(s.lattice->R) +
                           ", quadrature " + std::to_string(s.lattice->quadrature));
    if (s.task == "tau") task_tau(s, a);
    else if (s.task == "maximizer") task_maximizer(s, a);
    else if (s.task == "cones") task_cones(s, a);
    else if (s.task == "audit") task_audit(s, a);
    else if (s.task == "ladder") task_ladder(s, a);
    else if (s.task == "topology") task_topology(s, a);
    else if (s.task == "compare") task_compare(s, a, false);
    else if (s.task == "scan") task_compare(s, a, true);
    return a;
}

}  // namespace lorentz::cli
