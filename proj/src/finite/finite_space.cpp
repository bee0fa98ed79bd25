#include "lorentz/finite/finite_space.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

namespace lorentz::finite {

namespace {

void close_transitively(std::vector<Bits>& r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k]) r[i] |= r[k];
}

void check_edge(int n, const Edge& e) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
        throw Error("finite space: edge endpoint out of range");
}

}  // namespace

FiniteCausalSpace::FiniteCausalSpace(int n, const std::vector<Edge>& chron_generators,
                                     const std::optional<std::vector<Edge>>& leq_generators)
    : n_(n), gens_(chron_generators), leq_gens_(leq_generators) {
    if (n < 0) throw Error("finite space: negative size");
    ch_.assign(n, Bits(n));
    for (const auto& e : chron_generators) {
        check_edge(n, e);
        ch_[e.first].set(e.second);
    }
    close_transitively(ch_);
    le_ = ch_;
    for (int i = 0; i < n; ++i) le_[i].set(i);
    if (leq_generators) {
        for (const auto& e : *leq_generators) {
            check_edge(n, e);
            le_[e.first].set(e.second);
        }
        close_transitively(le_);
    }
    chp_.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ch_[i][j]) chp_[j].set(i);
    for (int i = 0; i < n; ++i) {
        if (ch_[i][i]) acyclic_ = false;
        else topo_.push_back(i);
    }
    // x << y implies |I-(x)| < |I-(y)| among irreflexive points.
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](int a, int b) { return chp_[a].count() < chp_[b].count(); });
}

bool FiniteCausalSpace::cycle_between(int x, int y) const {
    for (int z = 0; z < n_; ++z) {
        if (!ch_[z][z]) continue;
        bool from = (x == z) || ch_[x][z];
        bool to = (z == y) || ch_[z][y];
        if (from && to) return true;
    }
    return false;
}

std::vector<long> FiniteCausalSpace::longest_from(int x) const {
    std::vector<long> best(n_, -1);
    best[x] = 0;
    for (int z : topo_) {
        if (!ch_[x][z]) continue;
        long b = -1;
        for (int w = 0; w < n_; ++w)
            if (best[w] >= 0 && ch_[w][z]) b = std::max(b, best[w] + 1);
        best[z] = b;
    }
    return best;
}

ExtTime FiniteCausalSpace::tau(const int& x, const int& y) const {
    if (cycle_between(x, y)) return ExtTime::infinity();
    if (!ch_[x][y]) return 0.0;
    return static_cast<double>(longest_from(x)[y]);
}

std::vector<ExtTime> FiniteCausalSpace::tau_row(const int& x, std::span<const int> ys) const {
    std::vector<long> best;
    std::vector<ExtTime> out;
    out.reserve(ys.size());
    for (int y : ys) {
        if (cycle_between(x, y)) { out.push_back(ExtTime::infinity()); continue; }
        if (!ch_[x][y]) { out.push_back(0.0); continue; }
        if (best.empty()) best = longest_from(x);
        out.push_back(static_cast<double>(best[y]));
    }
    return out;
}

ExtTime longest_chain_tau(const FiniteCausalSpace& s, int x, int y) { return s.tau(x, y); }

std::vector<ChainRecord> causal_set_geodesics(const FiniteCausalSpace& s, int x, int y) {
    if (s.cycle_between(x, y)) throw Error("not a causal set: cycle in the interval");
    if (x == y) return {ChainRecord{{x}, true}};
    if (!s.chron(x, y)) return {};
    const int n = s.size();
    // Longest link-path (in vertices) from each z to y, restricted to the interval.
    std::vector<long> down(n, -1);
    down[y] = 1;
    std::vector<int> order;
    for (int z = 0; z < n; ++z)
        if ((s.chron(x, z) && s.chron(z, y)) || z == x) order.push_back(z);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.chron_past(a).count() > s.chron_past(b).count(); });
    for (int z : order) {
        long b = -1;
        for (int w = 0; w < n; ++w)
            if (down[w] > 0 && s.is_link(z, w)) b = std::max(b, down[w] + 1);
        down[z] = b;
    }
    std::vector<ChainRecord> out;
    if (down[x] < 0) return out;
    std::vector<int> cur{x};
    auto walk = [&](auto&& self, int z) -> void {
        if (z == y) {
            out.push_back({cur, true});
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (down[w] == down[z] - 1 && s.is_link(z, w)) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
        }
    };
    walk(walk, x);
    return out;
}

LadderReport ladder_report(const FiniteCausalSpace& s) {
    LadderReport r;
    for (int x = 0; x < s.size(); ++x)
        if (s.chron(x, x)) r.chron_witnesses.push_back(x);
    for (int x = 0; x < s.size(); ++x)
        for (int y = x + 1; y < s.size(); ++y)
            if (s.caus(x, y) && s.caus(y, x)) r.causal_witnesses.push_back({x, y});
    r.chronological = r.chron_witnesses.empty();
    r.causal = r.causal_witnesses.empty();
    return r;
}

PlsReport verify_pls(const FiniteCausalSpace& s, const std::vector<ExtTime>& tau) {
    const int n = s.size();
    if (tau.size() != static_cast<std::size_t>(n) * n) throw Error("verify_pls: table size mismatch");
    PlsReport r;
    auto T = [&](int i, int j) { return tau[static_cast<std::size_t>(i) * n + j]; };
    auto fail = [&](std::string w) {
        r.pass = false;
        if (r.witnesses.size() < 50) r.witnesses.push_back(std::move(w));
    };
    auto lbl = [](int i) { return std::to_string(i + 1); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (T(i, j).positive() != s.chron(i, j))
                fail("positivity at (" + lbl(i) + "," + lbl(j) + ")");
            if (!s.caus(i, j) && T(i, j).positive())
                fail("nonzero tau on unrelated pair (" + lbl(i) + "," + lbl(j) + ")");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!s.caus(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                if (!s.caus(j, k)) continue;
                if (T(i, k) < T(i, j) + T(j, k))
                    fail("reverse triangle at (" + lbl(i) + "," + lbl(j) + "," + lbl(k) + ")");
            }
        }
    return r;
}

FiniteCausalSpace parse_finite_space(std::istream& in) {
    std::string line;
    int n = -1;
    int lineno = 0;
    bool in_leq = false;
    std::vector<Edge> gens;
    std::optional<std::vector<Edge>> leq;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto bad = [&](const std::string& what) {
            return Error("finite space text, line " + std::to_string(lineno) + ": " + what);
        };
        if (n < 0) {
            if (tok != "points" || !(ls >> n) || n < 0) throw bad("expected 'points N'");
            continue;
        }
        if (tok == "leq") {
            in_leq = true;
            leq.emplace();
            continue;
        }
        int a = 0, b = 0;
        std::istringstream es(line);
        if (!(es >> a >> b)) throw bad("expected 'a b'");
        if (std::string rest; es >> rest) throw bad("trailing tokens");
        if (a < 1 || a > n || b < 1 || b > n) throw bad("label out of range 1.." + std::to_string(n));
        (in_leq ? *leq : gens).push_back({a - 1, b - 1});
    }
    if (n < 0) throw Error("finite space text: missing 'points N' header");
    return FiniteCausalSpace(n, gens, leq);
}

FiniteCausalSpace parse_finite_space_text(const std::string& text) {
    std::istringstream in(text);
    return parse_finite_space(in);
}

std::string to_text(const FiniteCausalSpace& s) {
    std::ostringstream os;
    os << "points " << s.size() << "\n";
    for (auto [a, b] : s.generators()) os << a + 1 << " " << b + 1 << "\n";
    if (auto leq = s.leq_generators()) {
        os << "leq\n";
        for (auto [a, b] : *leq) os << a + 1 << " " << b + 1 << "\n";
    }
    return os.str();
}

}  // namespace lorentz::finite
