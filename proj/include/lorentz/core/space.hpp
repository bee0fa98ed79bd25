#pragma once

#include <span>
#include <string>
#include <vector>

#include "lorentz/core/ext_time.hpp"

namespace lorentz {

enum class Backend { finite, causal_set, lattice_spacetime, model_space, restricted_subset, smooth_spacetime };
enum class Exactness { exact, lower_approximate };

const char* to_string(Backend b);
const char* to_string(Exactness e);

// Oracles for <<, <=, tau and the auxiliary metric on points of type P.
// Implementations must be safe for concurrent const calls.
template <class P>
class SpaceHandle {
public:
    using point_type = P;
    virtual ~SpaceHandle() = default;

    virtual bool chron(const P& p, const P& q) const = 0;
    virtual bool caus(const P& p, const P& q) const = 0;
    virtual ExtTime tau(const P& p, const P& q) const = 0;
    virtual double dist(const P& p, const P& q) const = 0;

    virtual Backend backend() const = 0;
    virtual Exactness exactness() const = 0;
    virtual std::string id() const = 0;

    // Relative slack for roundoff (exact backends) or discretization (approximate ones).
    virtual double tolerance() const { return 1e-12; }

    // tau(p, q) for every q; backends with single-source algorithms override this.
    virtual std::vector<ExtTime> tau_row(const P& p, std::span<const P> qs) const {
        std::vector<ExtTime> out;
        out.reserve(qs.size());
        for (const auto& q : qs) out.push_back(tau(p, q));
        return out;
    }

    virtual std::vector<char> chron_row(const P& p, std::span<const P> qs) const {
        std::vector<char> out;
        out.reserve(qs.size());
        for (const auto& q : qs) out.push_back(chron(p, q) ? 1 : 0);
        return out;
    }
};

}  // namespace lorentz
