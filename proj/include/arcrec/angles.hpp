#pragma once

#include <cmath>
#include <numbers>

namespace arcrec {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduce an angle to [0, 2*pi).
inline double reduce_angle(double a) {
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2*pi
    return r;
}

// Shortest distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
    double d = std::fabs(reduce_angle(a) - reduce_angle(b));
    return d > std::numbers::pi ? two_pi - d : d;
}

}  // namespace arcrec
