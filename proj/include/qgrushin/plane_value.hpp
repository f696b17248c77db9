#pragma once

#include <cmath>
#include <complex>

#include "qgrushin/error.hpp"

namespace qgrushin {

/**
 * Element u + v·ω̂ of the commutative drift plane span{1, ω̂} ⊂ ℍ, where ω̂ is
 * a unit purely imaginary quaternion. Since ω̂² = −1 the plane is a copy of ℂ
 * and every operation below is the complex one under (u, v) ↦ u + iv.
 *
 * Templated on the scalar so the finite-difference path can run in long double.
 */
template <typename T>
struct PlaneValue {
    T u{};
    T v{};

    constexpr PlaneValue() = default;
    constexpr PlaneValue(T real) : u(real) {}  // NOLINT(google-explicit-constructor)
    constexpr PlaneValue(T real, T axis) : u(real), v(axis) {}

    template <typename U>
    constexpr explicit PlaneValue(const PlaneValue<U>& other)
        : u(static_cast<T>(other.u)), v(static_cast<T>(other.v)) {}

    static constexpr PlaneValue axis() { return {T(0), T(1)}; }

    std::complex<T> to_complex() const { return {u, v}; }
    static PlaneValue from_complex(const std::complex<T>& z) { return {z.real(), z.imag()}; }

    constexpr PlaneValue& operator+=(const PlaneValue& o) { u += o.u; v += o.v; return *this; }
    constexpr PlaneValue& operator-=(const PlaneValue& o) { u -= o.u; v -= o.v; return *this; }
    constexpr PlaneValue& operator*=(const PlaneValue& o) { return *this = *this * o; }
    constexpr PlaneValue& operator*=(T s) { u *= s; v *= s; return *this; }

    friend constexpr PlaneValue operator+(PlaneValue a, const PlaneValue& b) { return a += b; }
    friend constexpr PlaneValue operator-(PlaneValue a, const PlaneValue& b) { return a -= b; }
    friend constexpr PlaneValue operator-(const PlaneValue& a) { return {-a.u, -a.v}; }
    friend constexpr PlaneValue operator*(const PlaneValue& a, const PlaneValue& b) {
        return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u};
    }
    friend constexpr PlaneValue operator*(PlaneValue a, T s) { return a *= s; }
    friend constexpr PlaneValue operator*(T s, PlaneValue a) { return a *= s; }
    friend PlaneValue operator/(const PlaneValue& a, const PlaneValue& b) {
        return from_complex(a.to_complex() / b.to_complex());
    }
    friend constexpr PlaneValue operator/(const PlaneValue& a, T s) { return {a.u / s, a.v / s}; }
    friend constexpr bool operator==(const PlaneValue&, const PlaneValue&) = default;
};

using Plane = PlaneValue<double>;

/// Quaternion conjugation restricted to the plane: u + vω̂ ↦ u − vω̂.
template <typename T>
constexpr PlaneValue<T> conj(const PlaneValue<T>& z) { return {z.u, -z.v}; }

template <typename T>
T abs(const PlaneValue<T>& z) { return std::hypot(z.u, z.v); }

template <typename T>
constexpr bool is_zero(const PlaneValue<T>& z) { return z.u == T(0) && z.v == T(0); }

/// Negative real axis, where the principal branch is discontinuous.
template <typename T>
constexpr bool on_branch_cut(const PlaneValue<T>& z) { return z.v == T(0) && z.u < T(0); }

template <typename T>
PlaneValue<T> plane_exp(const PlaneValue<T>& z) {
    return PlaneValue<T>::from_complex(std::exp(z.to_complex()));
}

/// Principal logarithm, argument in (−π, π]. A signed zero on the axis
/// coefficient is normalised so the cut itself maps to +π.
template <typename T>
PlaneValue<T> plane_log(const PlaneValue<T>& z) {
    if (is_zero(z)) throw Error(ErrorCode::ZeroBase, "logarithm of zero");
    const std::complex<T> w{z.u, z.v == T(0) ? T(0) : z.v};
    return PlaneValue<T>::from_complex(std::log(w));
}

/// Principal power exp(r·Log z).
template <typename T>
PlaneValue<T> plane_pow(const PlaneValue<T>& z, T r) {
    if (is_zero(z)) throw Error(ErrorCode::ZeroBase, "power of zero");
    if (z.v == T(0) && z.u > T(0)) return {std::pow(z.u, r), T(0)};
    const auto l = plane_log(z);
    const T mag = std::exp(r * l.u);
    const T arg = r * l.v;
    return {mag * std::cos(arg), mag * std::sin(arg)};
}

// Overloads found by the generic field code, so one template body serves
// plain values and jets alike.
template <typename T>
PlaneValue<T> pow(const PlaneValue<T>& z, T r) { return plane_pow(z, r); }

template <typename T>
PlaneValue<T> log(const PlaneValue<T>& z) { return plane_log(z); }

}  // namespace qgrushin
