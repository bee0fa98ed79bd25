#pragma once

#include <json.hpp>

#include "lorentz/comparison/comparison.hpp"
#include "lorentz/core/vec.hpp"

namespace lorentz::comparison {

using Json = nlohmann::ordered_json;

inline Json point_json(const Vec2& p) { return Json::array({p.x0, p.x1}); }
inline Json point_json(const Vec3& p) { return Json::array({p.x0, p.x1, p.x2}); }
inline Json point_json(int node) { return node; }
inline Json point_json(const model::ModelPoint& p) { return Json{{"K", p.K}, {"c", p.c}}; }

inline Json sample_json(const SamplePoint& s) {
    return Json{{"side", model::to_string(s.side)}, {"s", s.s}, {"target", s.target}};
}

Json branch_json(const BranchReport& b);

template <class P>
Json triangle_json(const TriangleInstance<P>& t) {
    return Json{{"label", t.label},
                {"x", point_json(t.x)},
                {"y", point_json(t.y)},
                {"z", point_json(t.z)},
                {"a", t.a},
                {"b", t.b},
                {"c", t.c}};
}

template <class P>
Json witness_json(const Witness& w, const std::vector<TriangleInstance<P>>& tris) {
    return Json{{"triangle", triangle_json(tris[w.triangle])},
                {"P", sample_json(w.P)},
                {"Q", sample_json(w.Q)},
                {"tau", w.tau},
                {"tau_bar", w.tau_bar},
                {"margin", w.margin},
                {"threshold", w.threshold}};
}

template <class P>
Json verdict_json(const ComparisonVerdict& v, const std::vector<TriangleInstance<P>>& tris,
                  const SpaceHandle<P>& space) {
    Json j{{"K", v.K},
           {"side", to_string(v.side)},
           {"mode", to_string(v.mode)},
           {"status", to_string(v.status)},
           {"samples", v.samples},
           {"evaluated", v.evaluated},
           {"max_abs_diff", v.max_abs_diff},
           {"provenance",
            {{"backend", to_string(space.backend())},
             {"space", space.id()},
             {"exactness", to_string(space.exactness())},
             {"space_tolerance", space.tolerance()},
             {"tol", v.tol},
             {"backend_error", v.backend_error},
             {"points_per_side", v.points_per_side}}}};
    if (v.witness) j["witness"] = witness_json(*v.witness, tris);
    Json skipped = Json::array();
    for (const auto& s : v.skipped) skipped.push_back({{"triangle", tris[s.triangle].label}, {"reason", s.reason}});
    j["skipped"] = skipped;
    Json rejected = Json::array();
    for (const auto& s : v.rejected) rejected.push_back({{"triangle", tris[s.triangle].label}, {"reason", s.reason}});
    j["rejected"] = rejected;
    j["note"] = "consistency is a sampled statement; only violations are conclusive";
    return j;
}

template <class P>
Json scan_json(const SingularityReport& r, const std::vector<TriangleInstance<P>>& tris, const SpaceHandle<P>& space) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"K", row.K}, {"below", verdict_json(row.below, tris, space)},
                        {"above", verdict_json(row.above, tris, space)}});
    Json fam = Json::array();
    for (const auto& t : tris) fam.push_back(triangle_json(t));
    return Json{{"family", fam},
                {"rows", rows},
                {"unbounded_below", r.unbounded_below},
                {"unbounded_above", r.unbounded_above},
                {"push_up_fails", r.push_up_fails},
                {"conclusion", r.conclusion}};
}

}  // namespace lorentz::comparison
