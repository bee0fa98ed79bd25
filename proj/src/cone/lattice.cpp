#include "lorentz/cone/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include <boost/math/special_functions/legendre.hpp>

namespace lorentz::cone {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 1e-12;

int grid_count(double lo, double hi, double h, const char* what) {
    double steps = (hi - lo) / h;
    double r = std::round(steps);
    if (!(h > 0) || steps < 0 || std::abs(steps - r) > 1e-6)
        throw Error(std::string("lattice: region extent along ") + what + " is not a multiple of h");
    return static_cast<int>(r) + 1;
}

struct Offset {
    int di, dj;
};

std::vector<Offset> stencil(int R) {
    std::vector<Offset> out;
    for (int di = -R; di <= R; ++di)
        for (int dj = -R; dj <= R; ++dj)
            if (di != 0 || dj != 0) out.push_back({di, dj});
    std::sort(out.begin(), out.end(), [](Offset a, Offset b) {
        return std::tuple(a.di * a.di + a.dj * a.dj, a.di, a.dj) < std::tuple(b.di * b.di + b.dj * b.dj, b.di, b.dj);
    });
    return out;
}

// Signed grid offset with wrap-around on a periodic axis.
int wrap_delta(int d, int n, bool periodic) {
    if (!periodic) return d;
    d %= n;
    if (d > n / 2) d -= n;
    if (d < -(n - 1) / 2) d += n;
    return d;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int order) {
    if (order < 1 || order > 64) throw Error("gauss_legendre01: order must be in [1, 64]");
    auto zeros = boost::math::legendre_p_zeros<double>(order);  // nonnegative zeros, ascending
    std::vector<std::pair<double, double>> nw;
    for (double x : zeros) {
        double dp = boost::math::legendre_p_prime(order, x);
        double w = 2.0 / ((1 - x * x) * dp * dp);
        if (x == 0.0) {
            nw.push_back({0.5, w / 2});
        } else {
            nw.push_back({0.5 - x / 2, w / 2});
            nw.push_back({0.5 + x / 2, w / 2});
        }
    }
    std::sort(nw.begin(), nw.end());
    std::vector<double> s, w;
    for (auto [a, b] : nw) {
        s.push_back(a);
        w.push_back(b);
    }
    return {s, w};
}

LatticeNodes lattice_nodes(const ConeField& field, const LatticeSpec& spec) {
    const auto& g = spec.region;
    LatticeNodes out;
    double period = field.period0();
    if (period > 0) {
        double steps = period / spec.h;
        if (std::abs(steps - std::round(steps)) > 1e-6) throw Error("lattice: period is not a multiple of h");
        out.n0 = static_cast<int>(std::round(steps));
    } else {
        out.n0 = grid_count(g.lo0, g.hi0, spec.h, "first coordinate");
    }
    out.n1 = grid_count(g.lo1, g.hi1, spec.h, "second coordinate");
    for (int i = 0; i < out.n0; ++i)
        for (int j = 0; j < out.n1; ++j) {
            Vec2 p{g.lo0 + i * spec.h, g.lo1 + j * spec.h};
            if (!field.contains(p)) continue;
            out.coords.push_back(p);
            out.grid.push_back({i, j});
        }
    return out;
}

std::vector<EdgeRecord> build_edges(const ConeField& field, const LatticeSpec& spec, const LatticeNodes& nodes,
                                    Exec exec) {
    if (spec.R < 1) throw Error("lattice: stencil radius must be >= 1");
    const bool periodic = field.period0() > 0;
    const int n0 = nodes.n0, n1 = nodes.n1;
    std::vector<int> lookup(static_cast<std::size_t>(n0) * n1, -1);
    for (std::size_t k = 0; k < nodes.grid.size(); ++k)
        lookup[static_cast<std::size_t>(nodes.grid[k].first) * n1 + nodes.grid[k].second] = static_cast<int>(k);
    const auto offs = stencil(spec.R);
    const auto [qs, qw] = gauss_legendre01(spec.quadrature);
    const double h = spec.h;
    const std::ptrdiff_t N = static_cast<std::ptrdiff_t>(nodes.coords.size());
    std::vector<std::vector<EdgeRecord>> per(N);

    auto work = [&](std::ptrdiff_t k) {
        auto [i, j] = nodes.grid[k];
        Vec2 a = nodes.coords[k];
        auto& out = per[k];
        for (Offset o : offs) {
            int ti = i + o.di, tj = j + o.dj;
            if (tj < 0 || tj >= n1) continue;
            if (periodic) ti = ((ti % n0) + n0) % n0;
            else if (ti < 0 || ti >= n0) continue;
            int t = lookup[static_cast<std::size_t>(ti) * n1 + tj];
            if (t < 0) continue;
            Vec2 d{o.di * h, o.dj * h};
            Vec2 mid = a + 0.5 * d;
            if (!field.future_causal(mid, d)) continue;
            if (!field.segment_inside(a, a + d)) continue;
            double len = 0.0;
            for (std::size_t q = 0; q < qs.size(); ++q) len += qw[q] * field.finsler(a + qs[q] * d, d);
            out.push_back({static_cast<std::int32_t>(k), t, len});
        }
    };
    if (exec == Exec::serial) {
        for (std::ptrdiff_t k = 0; k < N; ++k) work(k);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t k = 0; k < N; ++k) work(k);
    }
    std::size_t total = 0;
    for (auto& v : per) total += v.size();
    std::vector<EdgeRecord> edges;
    edges.reserve(total);
    for (auto& v : per) edges.insert(edges.end(), v.begin(), v.end());
    return edges;
}

CausalLattice build_lattice(const ConeField& field, const LatticeSpec& spec, Exec exec) {
    auto nodes = lattice_nodes(field, spec);
    auto edges = build_edges(field, spec, nodes, exec);
    LatticeMeta meta{field.id(), spec, field.period0(), nodes.n0, nodes.n1};
    return CausalLattice(std::move(meta), std::move(nodes.coords), std::move(nodes.grid), std::move(edges));
}

CausalLattice::CausalLattice(LatticeMeta meta, std::vector<Vec2> nodes, std::vector<std::pair<int, int>> grid,
                             std::vector<EdgeRecord> edges)
    : meta_(std::move(meta)), nodes_(std::move(nodes)), grid_(std::move(grid)) {
    const int n = node_count();
    if (static_cast<int>(grid_.size()) != n) throw Error("lattice: grid/node size mismatch");
    grid_lookup_.assign(static_cast<std::size_t>(meta_.n0) * meta_.n1, -1);
    for (int k = 0; k < n; ++k) {
        auto [i, j] = grid_[k];
        if (i < 0 || i >= meta_.n0 || j < 0 || j >= meta_.n1) throw Error("lattice: grid index out of range");
        grid_lookup_[static_cast<std::size_t>(i) * meta_.n1 + j] = k;
    }
    const bool periodic = meta_.period0 > 0;
    auto key = [&](const EdgeRecord& e) {
        int di = wrap_delta(grid_[e.to].first - grid_[e.from].first, meta_.n0, periodic);
        int dj = grid_[e.to].second - grid_[e.from].second;
        return std::tuple(e.to, di * di + dj * dj, di, dj);
    };
    for (const auto& e : edges)
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) throw Error("lattice: edge endpoint out of range");
    std::sort(edges.begin(), edges.end(), [&](const EdgeRecord& a, const EdgeRecord& b) { return key(a) < key(b); });
    in_off_.assign(n + 1, 0);
    src_.reserve(edges.size());
    len_.reserve(edges.size());
    for (const auto& e : edges) {
        ++in_off_[e.to + 1];
        src_.push_back(e.from);
        len_.push_back(e.length);
    }
    for (int v = 0; v < n; ++v) in_off_[v + 1] += in_off_[v];
    order_acyclic();
    if (cyclic_) order_cyclic();
    pos_.assign(n, 0);
    for (int k = 0; k < n; ++k) pos_[order_[k]] = k;
}

void CausalLattice::order_acyclic() {
    const int n = node_count();
    std::vector<std::int64_t> out_off(n + 1, 0);
    for (int v = 0; v < n; ++v)
        for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) ++out_off[src_[e] + 1];
    for (int v = 0; v < n; ++v) out_off[v + 1] += out_off[v];
    std::vector<std::int32_t> out(src_.size());
    auto fill = out_off;
    for (int v = 0; v < n; ++v)
        for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) out[fill[src_[e]]++] = v;
    std::vector<std::int64_t> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = in_off_[v + 1] - in_off_[v];
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    order_.clear();
    order_.reserve(n);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order_.push_back(v);
        for (auto e = out_off[v]; e < out_off[v + 1]; ++e)
            if (--indeg[out[e]] == 0) q.push_back(out[e]);
    }
    cyclic_ = static_cast<int>(order_.size()) != n;
}

void CausalLattice::order_cyclic() {
    // Iterative Tarjan on the reversed graph (in-edges); its emission order is then
    // a topological order of the original components.
    const int n = node_count();
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on(n, 0);
    comp_.assign(n, -1);
    comp_nodes_.clear();
    int counter = 0;
    struct Frame {
        int v;
        std::int64_t e;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, in_off_[root]}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.e < in_off_[f.v + 1]) {
                int w = src_[f.e++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on[w] = 1;
                    call.push_back({w, in_off_[w]});
                } else if (on[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            if (low[v] == index[v]) {
                std::vector<int> members;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    comp_[w] = static_cast<int>(comp_nodes_.size());
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                comp_nodes_.push_back(std::move(members));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    comp_positive_.assign(comp_nodes_.size(), 0);
    std::vector<char> has_cycle(comp_nodes_.size(), 0);
    for (int v = 0; v < n; ++v)
        for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) {
            int u = src_[e];
            if (comp_[u] != comp_[v]) continue;
            has_cycle[comp_[v]] = 1;
            if (len_[e] > 0) comp_positive_[comp_[v]] = 1;
        }
    order_.clear();
    for (const auto& c : comp_nodes_) order_.insert(order_.end(), c.begin(), c.end());
    // Mark singletons without self-loops as plain DAG nodes.
    for (std::size_t c = 0; c < comp_nodes_.size(); ++c)
        if (!has_cycle[c]) comp_positive_[c] = 2;
}

int CausalLattice::node(int i, int j) const {
    if (meta_.period0 > 0) i = ((i % meta_.n0) + meta_.n0) % meta_.n0;
    if (i < 0 || i >= meta_.n0 || j < 0 || j >= meta_.n1) return -1;
    return grid_lookup_[static_cast<std::size_t>(i) * meta_.n1 + j];
}

int CausalLattice::node_at(Vec2 p, double tol) const {
    const auto& g = meta_.spec.region;
    double h = meta_.spec.h;
    int i = static_cast<int>(std::lround((p.x0 - g.lo0) / h));
    int j = static_cast<int>(std::lround((p.x1 - g.lo1) / h));
    int v = node(i, j);
    if (v < 0) return -1;
    Vec2 c = nodes_[v];
    double d0 = std::abs(c.x0 - p.x0);
    if (meta_.period0 > 0) d0 = std::abs(std::remainder(c.x0 - p.x0, meta_.period0));
    if (d0 > tol || std::abs(c.x1 - p.x1) > tol) return -1;
    return v;
}

std::span<const std::int32_t> CausalLattice::in_sources(int v) const {
    return {src_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
}

std::span<const double> CausalLattice::in_lengths(int v) const {
    return {len_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
}

std::vector<EdgeRecord> CausalLattice::edges() const {
    std::vector<EdgeRecord> out;
    out.reserve(src_.size());
    for (int v = 0; v < node_count(); ++v)
        for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) out.push_back({src_[e], v, len_[e]});
    return out;
}

CausalLattice::Paths CausalLattice::longest_paths(int x, int until) const {
    const int n = node_count();
    if (x < 0 || x >= n) throw Error("lattice: node outside lattice");
    Paths P;
    P.dist.assign(n, kNegInf);
    P.pred.assign(n, -1);
    P.dist[x] = 0.0;
    auto pull = [&](int v) {
        double best = kNegInf;
        std::int32_t bp = -1;
        for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) {
            double du = P.dist[src_[e]];
            if (du == kNegInf) continue;
            double cand = du + len_[e];
            if (bp < 0 || cand > best + kTie * std::max(1.0, std::abs(best))) {
                best = cand;
                bp = src_[e];
            }
        }
        P.dist[v] = best;
        P.pred[v] = bp;
    };
    if (!cyclic_) {
        int last = until >= 0 ? pos_[until] : n - 1;
        for (int k = pos_[x] + 1; k <= last; ++k) pull(order_[k]);
        return P;
    }
    for (std::size_t c = static_cast<std::size_t>(comp_[x]); c < comp_nodes_.size(); ++c) {
        const auto& members = comp_nodes_[c];
        if (comp_positive_[c] == 2) {
            if (members[0] != x) pull(members[0]);
            continue;
        }
        double entry = kNegInf;
        for (int v : members) {
            if (v == x) entry = std::max(entry, 0.0);
            for (auto e = in_off_[v]; e < in_off_[v + 1]; ++e) {
                int u = src_[e];
                if (comp_[u] == static_cast<int>(c) || P.dist[u] == kNegInf) continue;
                entry = std::max(entry, P.dist[u] + len_[e]);
            }
        }
        if (entry == kNegInf) continue;
        double val = comp_positive_[c] ? kInf : entry;
        for (int v : members) P.dist[v] = val;
    }
    return P;
}

namespace {
ExtTime as_time(double d) { return d == kNegInf ? ExtTime(0.0) : ExtTime::clamped(d); }
}  // namespace

ExtTime CausalLattice::tau(const int& x, const int& y) const {
    if (y < 0 || y >= node_count()) throw Error("lattice: node outside lattice");
    if (!cyclic_ && x == y) return 0.0;
    if (!cyclic_ && pos_[y] < pos_[x]) return 0.0;
    return as_time(longest_paths(x, y).dist[y]);
}

bool CausalLattice::caus(const int& x, const int& y) const {
    if (x == y) return true;
    if (!cyclic_ && pos_[y] < pos_[x]) return false;
    return longest_paths(x, y).dist[y] != kNegInf;
}

bool CausalLattice::chron(const int& x, const int& y) const { return tau(x, y).positive(); }

double CausalLattice::dist(const int& x, const int& y) const { return euclid(nodes_[x], nodes_[y]); }

std::vector<ExtTime> CausalLattice::tau_row(const int& x, std::span<const int> ys) const {
    auto P = longest_paths(x);
    std::vector<ExtTime> out;
    out.reserve(ys.size());
    for (int y : ys) out.push_back(as_time(P.dist[y]));
    return out;
}

std::vector<char> CausalLattice::chron_row(const int& x, std::span<const int> ys) const {
    auto r = tau_row(x, ys);
    std::vector<char> out;
    out.reserve(r.size());
    for (auto t : r) out.push_back(t.positive() ? 1 : 0);
    return out;
}

std::string CausalLattice::id() const {
    std::ostringstream os;
    os.precision(17);
    os << "lattice[" << meta_.spacetime << ",h=" << meta_.spec.h << ",R=" << meta_.spec.R
       << ",q=" << meta_.spec.quadrature << "]";
    return os.str();
}

ExtTime lattice_tau(const CausalLattice& lat, int x, int y) { return lat.tau(x, y); }

std::vector<ExtTime> lattice_tau_many(const CausalLattice& lat, std::span<const std::pair<int, int>> pairs,
                                      Exec exec) {
    std::map<int, std::vector<std::size_t>> by_source;
    for (std::size_t k = 0; k < pairs.size(); ++k) by_source[pairs[k].first].push_back(k);
    std::vector<std::pair<int, std::vector<std::size_t>>> groups(by_source.begin(), by_source.end());
    std::vector<ExtTime> out(pairs.size());
    auto work = [&](std::ptrdiff_t g) {
        auto P = lat.longest_paths(groups[g].first);
        for (std::size_t k : groups[g].second) {
            double d = P.dist[pairs[k].second];
            out[k] = d == kNegInf ? ExtTime(0.0) : ExtTime::clamped(d);
        }
    };
    const auto G = static_cast<std::ptrdiff_t>(groups.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t g = 0; g < G; ++g) work(g);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t g = 0; g < G; ++g) work(g);
    }
    return out;
}

PolylineCurve<int> extract_maximizer(const CausalLattice& lat, int x, int y) {
    if (x == y) throw Error("extract_maximizer: endpoints coincide");
    auto P = lat.longest_paths(x, y);
    double d = P.dist[y];
    if (d == kNegInf) throw Error("extract_maximizer: unreachable");
    if (std::isinf(d)) throw Error("extract_maximizer: infinite time separation");
    std::vector<int> path{y};
    while (path.back() != x) {
        int p = P.pred[path.back()];
        if (p < 0) throw Error("extract_maximizer: broken predecessor chain");
        path.push_back(p);
    }
    std::reverse(path.begin(), path.end());
    return PolylineCurve<int>::indexed(std::move(path));
}

PolylineCurve<Vec2> to_coordinates(const CausalLattice& lat, const PolylineCurve<int>& c) {
    std::vector<Vec2> pts;
    pts.reserve(c.size());
    for (int v : c.points()) pts.push_back(lat.coord(v));
    return PolylineCurve<Vec2>(c.params(), std::move(pts), c.orientation());
}

}  // namespace lorentz::cone
