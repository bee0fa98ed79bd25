#pragma once

#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/core/parallel.hpp"
#include "lorentz/core/tolerance.hpp"

namespace lorentz {

struct AuditViolation {
    std::string kind;  // reverse_triangle | positivity | diagonal | lower_semicontinuity
    std::vector<std::size_t> indices;
    std::string detail;
};

struct AuditReport {
    std::size_t points = 0;
    std::size_t chains_checked = 0;
    std::size_t reverse_triangle = 0;
    std::size_t positivity = 0;
    std::size_t diagonal = 0;
    std::size_t lsc = 0;
    std::vector<AuditViolation> witnesses;  // capped

    std::size_t total() const { return reverse_triangle + positivity + diagonal + lsc; }
};

// (p_n, q_n) -> (p, q)
template <class P>
struct ApproxSequence {
    P p;
    P q;
    std::vector<std::pair<P, P>> terms;
};

struct AuditOptions {
    double lsc_epsilon = 1e-9;
    std::size_t max_witnesses = 20;
    Exec exec = Exec::parallel;
};

namespace detail {
inline std::string fmt_time(ExtTime t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}
}  // namespace detail

template <class P>
AuditReport audit_axioms(const SpaceHandle<P>& space, const std::vector<P>& points,
                         const std::vector<ApproxSequence<P>>& sequences = {}, AuditOptions opt = {}) {
    AuditReport rep;
    const std::size_t n = points.size();
    rep.points = n;
    const double tol = space.tolerance();
    auto T = tau_matrix<P>(space, points, opt.exec);
    auto C = chron_matrix<P>(space, points, opt.exec);
    std::vector<char> L(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) L[i * n + j] = space.caus(points[i], points[j]) ? 1 : 0;

    auto witness = [&](AuditViolation v) {
        if (rep.witnesses.size() < opt.max_witnesses) rep.witnesses.push_back(std::move(v));
    };

    for (std::size_t i = 0; i < n; ++i) {
        ExtTime d = T[i * n + i];
        if (d.positive() && d.is_finite()) {
            ++rep.diagonal;
            witness({"diagonal", {i}, "tau(x,x) = " + detail::fmt_time(d)});
        }
        for (std::size_t j = 0; j < n; ++j) {
            ExtTime t = T[i * n + j];
            bool c = C[i * n + j];
            if (t.positive() != c || (t.positive() && !L[i * n + j])) {
                ++rep.positivity;
                witness({"positivity", {i, j},
                         "tau = " + detail::fmt_time(t) + ", chron = " + (c ? "1" : "0") +
                             ", caus = " + (L[i * n + j] ? "1" : "0")});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!L[i * n + j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!L[j * n + k]) continue;
                ++rep.chains_checked;
                ExtTime lhs = T[i * n + k];
                ExtTime rhs = T[i * n + j] + T[j * n + k];
                if (lhs.is_infinite()) continue;
                if (rhs.is_infinite() || lhs.value() < rhs.value() - tol * rel_scale(rhs.value())) {
                    ++rep.reverse_triangle;
                    witness({"reverse_triangle", {i, j, k},
                             "tau(x,z) = " + detail::fmt_time(lhs) + " < " + detail::fmt_time(rhs)});
                }
            }
        }

    for (std::size_t s = 0; s < sequences.size(); ++s) {
        const auto& seq = sequences[s];
        if (seq.terms.empty()) continue;
        ExtTime limit = space.tau(seq.p, seq.q);
        // Deficit must persist over the finest third of the sequence.
        std::size_t from = seq.terms.size() - std::max<std::size_t>(1, seq.terms.size() / 3);
        bool persists = true;
        double last = 0.0;
        for (std::size_t m = from; m < seq.terms.size(); ++m) {
            ExtTime tn = space.tau(seq.terms[m].first, seq.terms[m].second);
            if (limit.is_infinite()) {
                if (tn.is_infinite()) { persists = false; break; }
                last = std::numeric_limits<double>::infinity();
                continue;
            }
            if (tn.is_infinite()) { persists = false; break; }
            last = limit.value() - tn.value();
            if (!(last > opt.lsc_epsilon + tol * rel_scale(limit.value()))) { persists = false; break; }
        }
        if (persists) {
            ++rep.lsc;
            witness({"lower_semicontinuity", {s},
                     "tau(p,q) = " + detail::fmt_time(limit) + ", deficit at finest term " + std::to_string(last)});
        }
    }
    return rep;
}

struct PushUpViolation {
    std::size_t index;
    bool causal_first;  // pattern x <= y << z (true) or x << y <= z (false)
};

template <class P>
struct Triple {
    P x, y, z;
};

template <class P>
std::vector<PushUpViolation> push_up_audit(const SpaceHandle<P>& space, const std::vector<Triple<P>>& triples) {
    std::vector<PushUpViolation> out;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        bool a = space.caus(t.x, t.y) && space.chron(t.y, t.z);
        bool b = space.chron(t.x, t.y) && space.caus(t.y, t.z);
        if (!a && !b) throw Error("push_up_audit: triple " + std::to_string(i) + " matches neither x<=y<<z nor x<<y<=z");
        if (!space.chron(t.x, t.z)) out.push_back({i, a});
    }
    return out;
}

}  // namespace lorentz
