#pragma once

#include <string>

#include "qgrushin/plane_value.hpp"

namespace qgrushin {

struct Quaternion {
    double w{};  ///< scalar part
    double x{};  ///< i
    double y{};  ///< j
    double z{};  ///< k

    static constexpr Quaternion pure(double L, double M, double N) { return {0.0, L, M, N}; }
    static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }

    constexpr bool is_pure() const { return w == 0.0; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const;

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& q);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion conj(const Quaternion& q);
std::string to_string(const Quaternion& q);

enum class DriftCase { CaseI, CaseII };

/**
 * Drift coefficient Q = Li + Mj + Nk reduced to the data the solution families need.
 *
 * In both cases Q = xi·axis and g = scale·(c(y₁−a)^{n+1} + axis·(n+1)(y₂−b)), so the
 * whole construction lives in the plane span{1, axis}.
 *
 *   Case I  (L+M+N ≠ 0): mu = ‖Q‖/|L+M+N|, omega = Q/(L+M+N), axis = omega/mu,
 *                        xi = mu·(L+M+N), scale = mu.
 *   Case II (L+M+N = 0): xi = √(2|LM+LN+MN|) = ‖Q‖, axis = Q/‖Q‖, scale = xi.
 *
 * xi_printed keeps the alternative √|Q²|·(L+M+N); it differs from xi unless
 * |L+M+N| = 1 and does not annihilate the operators. Reports surface it for
 * comparison.
 */
struct DriftSpec {
    Quaternion q;
    DriftCase drift_case = DriftCase::CaseI;
    double mu = 1.0;
    Quaternion omega;
    double xi = 0.0;
    double scale = 1.0;
    Quaternion axis;
    double xi_printed = 0.0;
};

DriftSpec analyze_drift(const Quaternion& q);

/// Complex drift iL of the baseline theorems: axis i, unit scale, xi = L (L may be 0).
DriftSpec complex_drift(double L);

/// The drift coefficient as an element of its own plane: (0, xi).
inline Plane drift_in_plane(const DriftSpec& d) { return {0.0, d.xi}; }

/// u·1 + v·axis in ℍ.
Quaternion embed(const Plane& z, const Quaternion& axis);

/// Relative comparison used for the case split and parameter exclusions.
bool nearly_equal(double a, double b, double rel = 1e-12, double abs_floor = 1e-300);

}  // namespace qgrushin
