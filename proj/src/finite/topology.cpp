#include "lorentz/finite/topology.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace lorentz::finite {

namespace {

PointSet to_mask(const Bits& b) {
    PointSet m = 0;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) m |= PointSet{1} << i;
    return m;
}

std::string lbl(int i) { return std::to_string(i + 1); }

void add_unique(std::vector<NamedSet>& fam, std::string name, PointSet m) {
    for (auto& s : fam)
        if (s.members == m) return;
    fam.push_back({std::move(name), m});
}

std::vector<BaseFailure> base_failures(const std::vector<NamedSet>& fam, int n) {
    std::vector<BaseFailure> out;
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
            PointSet inter = fam[a].members & fam[b].members;
            for (int z = 0; z < n; ++z) {
                PointSet bit = PointSet{1} << z;
                if (!(inter & bit)) continue;
                bool fits = std::any_of(fam.begin(), fam.end(), [&](const NamedSet& c) {
                    return (c.members & bit) && (c.members & ~inter) == 0;
                });
                if (!fits) out.push_back({z, fam[a].name, fam[b].name, inter});
            }
        }
    return out;
}

std::vector<int> uncovered(const std::vector<NamedSet>& fam, int n) {
    PointSet u = 0;
    for (auto& s : fam) u |= s.members;
    std::vector<int> out;
    for (int z = 0; z < n; ++z)
        if (!(u & (PointSet{1} << z))) out.push_back(z);
    return out;
}

}  // namespace

std::string set_to_string(PointSet s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if (s & (PointSet{1} << i)) {
            if (!first) out += ",";
            out += lbl(i);
            first = false;
        }
    return out + "}";
}

std::vector<PointSet> generate_topology(int n, const std::vector<PointSet>& subbase, std::size_t max_sets) {
    const PointSet all = n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
    // Finite intersections, the empty intersection being X.
    std::set<PointSet> base{all};
    for (PointSet s : subbase) {
        std::vector<PointSet> add;
        for (PointSet b : base) add.push_back(b & s);
        base.insert(add.begin(), add.end());
        if (base.size() > max_sets) return {};
    }
    // Arbitrary unions.
    std::unordered_set<PointSet> top{0};
    std::vector<PointSet> list{0};
    for (PointSet b : base) {
        std::size_t m = list.size();
        for (std::size_t i = 0; i < m; ++i) {
            PointSet u = list[i] | b;
            if (top.insert(u).second) list.push_back(u);
        }
        if (list.size() > max_sets) return {};
    }
    std::sort(list.begin(), list.end());
    return list;
}

TopologyReport topology_report(const FiniteCausalSpace& s, std::size_t max_sets) {
    const int n = s.size();
    if (n > 64) throw Error("topology_report: at most 64 points supported");
    TopologyReport r;
    r.n = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) add_unique(r.S, "I(" + lbl(x) + "," + lbl(y) + ")", to_mask(s.interval(x, y)));
    for (int x = 0; x < n; ++x) {
        add_unique(r.P, "I+(" + lbl(x) + ")", to_mask(s.chron_future(x)));
        add_unique(r.P, "I-(" + lbl(x) + ")", to_mask(s.chron_past(x)));
    }
    r.S_uncovered = uncovered(r.S, n);
    r.P_uncovered = uncovered(r.P, n);
    r.S_covers = r.S_uncovered.empty();
    r.P_covers = r.P_uncovered.empty();
    r.S_base_failures = base_failures(r.S, n);
    r.P_base_failures = base_failures(r.P, n);

    std::vector<PointSet> sb, pb;
    for (auto& x : r.S) sb.push_back(x.members);
    for (auto& x : r.P) pb.push_back(x.members);
    r.alexandrov = generate_topology(n, sb, max_sets);
    r.chronological = generate_topology(n, pb, max_sets);
    r.topologies_computed = !r.alexandrov.empty() && !r.chronological.empty();
    if (r.topologies_computed) {
        auto in_chron = [&](PointSet m) {
            return std::binary_search(r.chronological.begin(), r.chronological.end(), m);
        };
        r.alexandrov_in_chronological = std::all_of(r.alexandrov.begin(), r.alexandrov.end(), in_chron);
        r.S_in_chronological = std::all_of(sb.begin(), sb.end(), in_chron);
        r.equal = r.alexandrov == r.chronological;
    }
    return r;
}

}  // namespace lorentz::finite
