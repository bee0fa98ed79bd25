#include "lorentz/comparison/branching.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace lorentz::comparison {

namespace {

std::vector<int> walk(const cone::CausalLattice::Paths& P, int x, int y) {
    if (!(P.dist[y] > -std::numeric_limits<double>::infinity())) throw Error("detect_branching: target unreachable");
    if (std::isinf(P.dist[y])) throw Error("detect_branching: infinite time separation");
    std::vector<int> path{y};
    while (path.back() != x) {
        int p = P.pred[path.back()];
        if (p < 0) throw Error("detect_branching: broken predecessor chain");
        path.push_back(p);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

CausalCharacter character(const cone::CausalLattice& lat, const std::vector<int>& nodes) {
    if (nodes.size() < 2) return CausalCharacter::null;
    return causal_character(lat, PolylineCurve<int>::indexed(nodes));
}

}  // namespace

BranchReport detect_branching(const cone::CausalLattice& lat, int x, int y1, int y2, double min_shared) {
    if (y1 == y2) throw Error("detect_branching: targets coincide");
    BranchReport r;
    auto P = lat.longest_paths(x);
    auto g1 = walk(P, x, y1), g2 = walk(P, x, y2);
    for (int v : g1) r.gamma1.push_back(lat.coord(v));
    for (int v : g2) r.gamma2.push_back(lat.coord(v));

    std::size_t k = 0;
    while (k < g1.size() && k < g2.size() && g1[k] == g2[k]) ++k;
    std::vector<int> shared(g1.begin(), g1.begin() + k);
    for (std::size_t i = 1; i < shared.size(); ++i) {
        r.shared_d_length += euclid(lat.coord(shared[i - 1]), lat.coord(shared[i]));
        r.shared_tau += lat.tau(shared[i - 1], shared[i]).value();
    }
    r.branch_node = shared.back();
    r.branch_point = lat.coord(r.branch_node);
    if (k == g1.size() || k == g2.size()) {
        r.reason = "no branching: one target lies on the other maximizer";
        return r;
    }
    if (!(r.shared_d_length > min_shared)) {
        r.reason = "no branching: no common initial segment";
        return r;
    }
    std::unordered_set<int> tail1(g1.begin() + k, g1.end());
    for (std::size_t i = k; i < g2.size(); ++i)
        if (tail1.count(g2[i])) {
            r.reason = "no branching: maximizers meet again after separating";
            return r;
        }
    std::vector<int> rest1(g1.begin() + (k - 1), g1.end()), rest2(g2.begin() + (k - 1), g2.end());
    r.shared = character(lat, shared);
    r.rest1 = character(lat, rest1);
    r.rest2 = character(lat, rest2);
    r.timelike = r.shared == CausalCharacter::timelike && r.rest1 == CausalCharacter::timelike &&
                 r.rest2 == CausalCharacter::timelike;
    r.branching = true;
    return r;
}

}  // namespace lorentz::comparison
