#include "lorentz/cone/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lorentz::cone {

namespace {

std::string hex(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double unhex(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw Error("lattice cache: bad number '" + s + "'");
    return v;
}

std::string expect(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) throw Error("lattice cache: truncated before '" + key + "'");
    if (line.rfind(key + " ", 0) != 0) throw Error("lattice cache: expected '" + key + "'");
    return line.substr(key.size() + 1);
}

}  // namespace

void save_lattice(const CausalLattice& lat, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("lattice cache: cannot write " + path);
    const auto& m = lat.meta();
    const auto& g = m.spec.region;
    out << "lorentz-lattice " << kLatticeCacheVersion << "\n";
    out << "spacetime " << m.spacetime << "\n";
    out << "region " << hex(g.lo0) << " " << hex(g.hi0) << " " << hex(g.lo1) << " " << hex(g.hi1) << "\n";
    out << "h " << hex(m.spec.h) << "\n";
    out << "R " << m.spec.R << "\n";
    out << "quadrature " << m.spec.quadrature << "\n";
    out << "period " << hex(m.period0) << "\n";
    out << "grid " << m.n0 << " " << m.n1 << "\n";
    out << "nodes " << lat.node_count() << "\n";
    for (int v = 0; v < lat.node_count(); ++v) {
        auto [i, j] = lat.grid_index(v);
        Vec2 c = lat.coord(v);
        out << i << " " << j << " " << hex(c.x0) << " " << hex(c.x1) << "\n";
    }
    auto edges = lat.edges();
    out << "edges " << edges.size() << "\n";
    for (const auto& e : edges) out << e.from << " " << e.to << " " << hex(e.length) << "\n";
}

CausalLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("lattice cache: cannot read " + path);
    std::string line;
    std::getline(in, line);
    std::istringstream hs(line);
    std::string magic;
    int version = 0;
    hs >> magic >> version;
    if (magic != "lorentz-lattice") throw Error("lattice cache: not a lattice cache file");
    if (version != kLatticeCacheVersion) throw Error("lattice cache: unsupported version " + std::to_string(version));
    LatticeMeta m;
    m.spacetime = expect(in, "spacetime");
    {
        std::istringstream s(expect(in, "region"));
        std::string a, b, c, d;
        s >> a >> b >> c >> d;
        m.spec.region = {unhex(a), unhex(b), unhex(c), unhex(d)};
    }
    m.spec.h = unhex(expect(in, "h"));
    m.spec.R = std::stoi(expect(in, "R"));
    m.spec.quadrature = std::stoi(expect(in, "quadrature"));
    m.period0 = unhex(expect(in, "period"));
    {
        std::istringstream s(expect(in, "grid"));
        s >> m.n0 >> m.n1;
    }
    long n = std::stol(expect(in, "nodes"));
    std::vector<Vec2> nodes(n);
    std::vector<std::pair<int, int>> grid(n);
    for (long k = 0; k < n; ++k) {
        std::string a, b;
        if (!(in >> grid[k].first >> grid[k].second >> a >> b)) throw Error("lattice cache: truncated node list");
        nodes[k] = {unhex(a), unhex(b)};
    }
    in >> std::ws;
    long E = std::stol(expect(in, "edges"));
    std::vector<EdgeRecord> edges(E);
    for (long k = 0; k < E; ++k) {
        std::string w;
        if (!(in >> edges[k].from >> edges[k].to >> w)) throw Error("lattice cache: truncated edge list");
        edges[k].length = unhex(w);
    }
    return CausalLattice(std::move(m), std::move(nodes), std::move(grid), std::move(edges));
}

}  // namespace lorentz::cone
