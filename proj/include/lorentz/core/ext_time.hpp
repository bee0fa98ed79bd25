#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

#include "lorentz/core/error.hpp"

namespace lorentz {

// Value in [0, +inf]. Addition saturates; inf - inf is an error.
class ExtTime {
public:
    constexpr ExtTime() = default;
    ExtTime(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0) throw Error("ExtTime: negative or NaN value");
    }

    static ExtTime infinity() { return ExtTime(std::numeric_limits<double>::infinity()); }
    // Clamps tiny negative roundoff to zero.
    static ExtTime clamped(double v) { return ExtTime(v > 0.0 ? v : 0.0); }

    bool is_infinite() const { return std::isinf(v_); }
    bool is_finite() const { return !is_infinite(); }
    bool positive() const { return v_ > 0.0; }
    double value() const { return v_; }

    friend ExtTime operator+(ExtTime a, ExtTime b) { return ExtTime(a.v_ + b.v_); }
    ExtTime& operator+=(ExtTime b) { return *this = *this + b; }

    // Signed difference; throws on inf - inf.
    friend double operator-(ExtTime a, ExtTime b) {
        if (a.is_infinite() && b.is_infinite()) throw Error("ExtTime: inf - inf is undefined");
        return a.v_ - b.v_;
    }

    friend bool operator==(ExtTime a, ExtTime b) { return a.v_ == b.v_; }
    friend std::partial_ordering operator<=>(ExtTime a, ExtTime b) { return a.v_ <=> b.v_; }

    friend std::ostream& operator<<(std::ostream& os, ExtTime t) {
        if (t.is_infinite()) return os << "inf";
        return os << t.v_;
    }

private:
    double v_ = 0.0;
};

}  // namespace lorentz
