#pragma once

#include <cmath>
#include <ostream>

namespace lorentz {

struct Vec2 {
    double x0 = 0.0;
    double x1 = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x0 - b.x0, a.x1 - b.x1}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x0, s * a.x1}; }
    friend bool operator==(Vec2 a, Vec2 b) = default;
    friend std::ostream& operator<<(std::ostream& os, Vec2 v) {
        return os << "(" << v.x0 << ", " << v.x1 << ")";
    }
};

struct Vec3 {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x0, s * a.x1, s * a.x2}; }
    friend bool operator==(Vec3 a, Vec3 b) = default;
};

inline double euclid(Vec2 a, Vec2 b) { return std::hypot(a.x0 - b.x0, a.x1 - b.x1); }
inline double euclid(Vec3 a, Vec3 b) {
    return std::sqrt((a.x0 - b.x0) * (a.x0 - b.x0) + (a.x1 - b.x1) * (a.x1 - b.x1) +
                     (a.x2 - b.x2) * (a.x2 - b.x2));
}

}  // namespace lorentz
