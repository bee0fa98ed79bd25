#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lorentz/core/audit.hpp"
#include "lorentz/finite/finite_space.hpp"
#include "lorentz/finite/topology.hpp"

using namespace lorentz;
using namespace lorentz::finite;

namespace {

// Longest generator path x -> y by plain DFS; -1 when none.
long brute_longest(int n, const std::vector<Edge>& edges, int x, int y) {
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : edges) out[a].push_back(b);
    long best = -1;
    std::function<void(int, long)> dfs = [&](int v, long len) {
        if (v == y && len > 0) best = std::max(best, len);
        for (int w : out[v]) dfs(w, len + 1);
    };
    dfs(x, 0);
    return best;
}

std::vector<Edge> random_dag(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution B(p);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (B(rng)) e.push_back({perm[i], perm[j]});
    return e;
}

std::vector<ExtTime> table(const FiniteCausalSpace& s) {
    std::vector<ExtTime> t;
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) t.push_back(s.tau(i, j));
    return t;
}

bool subset_family(const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
    return std::all_of(a.begin(), a.end(), [&](PointSet s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

FiniteCausalSpace seven_point() {
    return FiniteCausalSpace(7, {{0, 5}, {0, 6}, {5, 1}, {6, 1}, {2, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("longest_chain_tau examples") {
    FiniteCausalSpace edge(2, {{0, 1}});
    CHECK(longest_chain_tau(edge, 0, 1).value() == 1);
    CHECK(edge.tau(1, 0).value() == 0);

    FiniteCausalSpace shortcut(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(longest_chain_tau(shortcut, 0, 3).value() == 3);

    FiniteCausalSpace two_cycle(2, {{0, 1}, {1, 0}});
    CHECK(longest_chain_tau(two_cycle, 0, 0).is_infinite());
    CHECK(two_cycle.tau(0, 1).is_infinite());
}

TEST_CASE("exhaustive DAGs up to 6 nodes: tau equals brute force and satisfies the axioms") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.push_back({i, j});
        const std::size_t m = all.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<Edge> e;
            for (std::size_t k = 0; k < m; ++k)
                if (mask >> k & 1) e.push_back(all[k]);
            FiniteCausalSpace s(n, e);
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    long want = std::max(0L, brute_longest(n, e, x, y));
                    ok = s.tau(x, y).value() == static_cast<double>(want);
                }
            REQUIRE_MESSAGE(ok, "n=", n, " mask=", mask);
            if (n <= 5 || mask % 7 == 0) {
                auto r = verify_pls(s, table(s));
                REQUIRE_MESSAGE(r.pass, "n=", n, " mask=", mask);
            }
        }
    }
}

TEST_CASE("random DAGs up to 12 nodes") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 11;
        auto e = random_dag(rng, n, 0.3);
        FiniteCausalSpace s(n, e);
        CHECK(s.acyclic());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) CHECK(s.tau(x, y).value() == std::max(0L, brute_longest(n, e, x, y)));
        CHECK(verify_pls(s, table(s)).pass);
        auto L = ladder_report(s);
        CHECK(L.chronological);
        CHECK(L.causal);
        std::vector<Triple<int>> triples;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if ((s.caus(x, y) && s.chron(y, z)) || (s.chron(x, y) && s.caus(y, z))) triples.push_back({x, y, z});
        CHECK(push_up_audit(s, triples).empty());
        auto rep = topology_report(s);
        CHECK(rep.alexandrov_in_chronological);
    }
}

TEST_CASE("vertex counting breaks the reverse triangle inequality on a 3-chain") {
    FiniteCausalSpace chain(3, {{0, 1}, {1, 2}});
    std::vector<ExtTime> vertex_count;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) vertex_count.push_back(chain.chron(x, y) ? chain.tau(x, y).value() + 1 : 0.0);
    CHECK_FALSE(verify_pls(chain, vertex_count).pass);
    CHECK(verify_pls(chain, table(chain)).pass);
}

TEST_CASE("verify_pls rejects corrupted tables") {
    FiniteCausalSpace s(4, {{0, 1}, {1, 2}, {0, 3}});
    auto t = table(s);
    auto shifted = t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) shifted[i * 4 + j] = shifted[i * 4 + j] + 1.0;
    CHECK_FALSE(verify_pls(s, shifted).pass);
    std::vector<ExtTime> zero(16, 0.0);
    auto r = verify_pls(s, zero);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("causal_set_geodesics") {
    FiniteCausalSpace diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto g = causal_set_geodesics(diamond, 0, 3);
    REQUIRE(g.size() == 2);
    for (const auto& c : g) {
        CHECK(c.length() == 3);
        CHECK(c.is_path);
    }

    FiniteCausalSpace sc(3, {{0, 1}, {1, 2}, {0, 2}});
    auto g2 = causal_set_geodesics(sc, 0, 2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].vertices == std::vector<int>{0, 1, 2});
    CHECK_FALSE(sc.is_link(0, 2));

    FiniteCausalSpace apart(2, {});
    CHECK(causal_set_geodesics(apart, 0, 1).empty());

    FiniteCausalSpace loop(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_WITH_AS(causal_set_geodesics(loop, 0, 1), doctest::Contains("not a causal set"), Error);
}

TEST_CASE("ladder_report examples") {
    FiniteCausalSpace point(1, {{0, 0}});
    auto r = ladder_report(point);
    CHECK_FALSE(r.chronological);
    CHECK(r.causal);
    CHECK(r.chron_witnesses == std::vector<int>{0});

    FiniteCausalSpace full(3, {{0, 1}, {1, 2}, {2, 0}});
    auto f = ladder_report(full);
    CHECK_FALSE(f.chronological);
    CHECK_FALSE(f.causal);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(full.tau(x, y).is_infinite());
}

TEST_CASE("one-point reflexive space: diagonal infinite, so the axioms hold only with tau = inf") {
    FiniteCausalSpace point(1, {{0, 0}});
    CHECK(point.tau(0, 0).is_infinite());
    CHECK(verify_pls(point, {ExtTime::infinity()}).pass);
    CHECK_FALSE(verify_pls(point, {ExtTime(1.0)}).pass);
}

TEST_CASE("seven-point topology") {
    auto s = seven_point();
    auto r = topology_report(s);
    CHECK_FALSE(r.S_covers);
    CHECK(std::find(r.S_uncovered.begin(), r.S_uncovered.end(), 0) != r.S_uncovered.end());
    CHECK(r.P_covers);
    CHECK((s.chron_future(0) & s.chron_past(1)).count() == 2);
    bool at7 = false;
    for (const auto& f : r.P_base_failures)
        if (f.point == 6 && f.intersection == ((PointSet{1} << 5) | (PointSet{1} << 6)) &&
            ((f.first == "I+(1)" && f.second == "I-(2)") || (f.first == "I-(2)" && f.second == "I+(1)")))
            at7 = true;
    CHECK(at7);
    CHECK(set_to_string((PointSet{1} << 5) | (PointSet{1} << 6)) == "{6,7}");
    CHECK(r.alexandrov_in_chronological);
    CHECK_FALSE(r.equal);
}

TEST_CASE("two-point space: trivial Alexandrov, discrete chronological topology") {
    FiniteCausalSpace s(2, {{0, 1}});
    auto r = topology_report(s);
    REQUIRE(r.S.size() == 1);
    CHECK(r.S[0].members == 0);
    CHECK(r.alexandrov == std::vector<PointSet>{0, 3});
    CHECK(r.chronological.size() == 4);
    CHECK(r.alexandrov_in_chronological);
    CHECK_FALSE(r.equal);
}

TEST_CASE("empty relation: trivial Alexandrov, P has only empty sets") {
    FiniteCausalSpace s(3, {});
    auto r = topology_report(s);
    CHECK(r.alexandrov.size() == 2);
    for (const auto& p : r.P) CHECK(p.members == 0);
    CHECK_FALSE(r.P_covers);
}

TEST_CASE("generate_topology is closed under unions and intersections") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> U(0, 31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<PointSet> sub;
        for (int k = 0; k < 4; ++k) sub.push_back(static_cast<PointSet>(U(rng)));
        auto T = generate_topology(5, sub);
        CHECK(std::find(T.begin(), T.end(), PointSet{0}) != T.end());
        CHECK(std::find(T.begin(), T.end(), PointSet{31}) != T.end());
        for (PointSet a : T)
            for (PointSet b : T) {
                CHECK(std::find(T.begin(), T.end(), a | b) != T.end());
                CHECK(std::find(T.begin(), T.end(), a & b) != T.end());
            }
        CHECK(subset_family(sub, T));
    }
}

TEST_CASE("text format round trip") {
    auto s = parse_finite_space_text("# seven points\npoints 7\n1 6\n1 7\n6 2\n7 2\n3 4\n4 5\n");
    CHECK(s.size() == 7);
    CHECK(s.chron(0, 1));
    CHECK(s.tau(0, 1).value() == 2);
    auto again = parse_finite_space_text(to_text(s));
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y) {
            CHECK(again.chron(x, y) == s.chron(x, y));
            CHECK(again.caus(x, y) == s.caus(x, y));
        }
    auto leq = parse_finite_space_text("points 3\n1 2\nleq\n2 3\n");
    CHECK(leq.caus(0, 2));
    CHECK_FALSE(leq.chron(1, 2));
    CHECK_THROWS_AS(parse_finite_space_text("points 2\n1 3\n"), Error);
    CHECK_THROWS_AS(parse_finite_space_text("1 2\n"), Error);
}
