#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lorentz/core/space.hpp"

namespace lorentz::finite {

using Bits = boost::dynamic_bitset<>;
using Edge = std::pair<int, int>;

// Finite causal space on points 0..n-1. << is the transitive closure of the
// generators; <= is the reflexive-transitive closure of << plus optional extra pairs.
class FiniteCausalSpace : public SpaceHandle<int> {
public:
    FiniteCausalSpace(int n, const std::vector<Edge>& chron_generators,
                      const std::optional<std::vector<Edge>>& leq_generators = std::nullopt);

    int size() const { return n_; }

    bool chron(const int& x, const int& y) const override { return ch_[x][y]; }
    bool caus(const int& x, const int& y) const override { return le_[x][y]; }
    ExtTime tau(const int& x, const int& y) const override;
    double dist(const int& x, const int& y) const override { return x == y ? 0.0 : 1.0; }
    std::vector<ExtTime> tau_row(const int& x, std::span<const int> ys) const override;

    Backend backend() const override { return acyclic_ ? Backend::causal_set : Backend::finite; }
    Exactness exactness() const override { return Exactness::exact; }
    std::string id() const override { return "finite(" + std::to_string(n_) + ")"; }
    double tolerance() const override { return 0.0; }

    const Bits& chron_future(int x) const { return ch_[x]; }
    const Bits& chron_past(int x) const { return chp_[x]; }
    const Bits& caus_future(int x) const { return le_[x]; }
    bool reflexive_chron(int x) const { return ch_[x][x]; }
    bool acyclic() const { return acyclic_; }

    // I(x,y) = {z : x << z << y}
    Bits interval(int x, int y) const { return ch_[x] & chp_[y]; }
    // Some z with z << z and x <<= z <<= y.
    bool cycle_between(int x, int y) const;
    bool is_link(int x, int y) const { return ch_[x][y] && interval(x, y).none(); }

    std::vector<Edge> generators() const { return gens_; }
    std::optional<std::vector<Edge>> leq_generators() const { return leq_gens_; }

private:
    std::vector<long> longest_from(int x) const;

    int n_;
    std::vector<Edge> gens_;
    std::optional<std::vector<Edge>> leq_gens_;
    std::vector<Bits> ch_, chp_, le_;
    std::vector<int> topo_;  // order of the non-reflexive points by past size
    bool acyclic_ = true;
};

// Longest <<-step chain from x to y; +inf through a cycle. Counts edges.
ExtTime longest_chain_tau(const FiniteCausalSpace& s, int x, int y);

struct ChainRecord {
    std::vector<int> vertices;
    bool is_path = false;
    std::size_t length() const { return vertices.size(); }
};

// All link-paths from x to y of maximal vertex count.
std::vector<ChainRecord> causal_set_geodesics(const FiniteCausalSpace& s, int x, int y);

struct LadderReport {
    bool chronological = true;
    bool causal = true;
    std::vector<int> chron_witnesses;   // x with x << x
    std::vector<Edge> causal_witnesses; // x != y with x <= y <= x
};

LadderReport ladder_report(const FiniteCausalSpace& s);

struct PlsReport {
    bool pass = true;
    std::vector<std::string> witnesses;
};

// Exhaustive check of the time separation axioms for a tau table (row-major n x n).
PlsReport verify_pls(const FiniteCausalSpace& s, const std::vector<ExtTime>& tau);

// Text format: "points N", then "a b" per << generator (labels 1..N),
// then optionally a line "leq" followed by extra <= pairs. '#' starts a comment.
FiniteCausalSpace parse_finite_space(std::istream& in);
FiniteCausalSpace parse_finite_space_text(const std::string& text);
std::string to_text(const FiniteCausalSpace& s);

}  // namespace lorentz::finite
