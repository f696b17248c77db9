#pragma once

#include <cmath>
#include <random>

#include "qgrushin/plane_value.hpp"
#include "qgrushin/quaternion.hpp"

namespace qgrushin::testing {

inline double rel_diff(const Plane& a, const Plane& b) {
    return abs(a - b) / std::max({abs(a), abs(b), 1e-300});
}

inline double rel_diff(const Quaternion& a, const Quaternion& b) {
    return (a - b).norm() / std::max({a.norm(), b.norm(), 1e-300});
}

inline Quaternion random_pure(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {0.0, u(rng), u(rng), u(rng)};
}

}  // namespace qgrushin::testing
