#pragma once

#include "qgrushin/plane_value.hpp"

namespace qgrushin {

/// The plane 𝔾ₙ with Y₁ = ∂/∂y₁ and Y₂ = c(y₁−a)ⁿ ∂/∂y₂.
struct GrushinParams {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    void validate() const;
};

struct Point {
    double y1 = 0.0;
    double y2 = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

/// Value and partials (∂/∂y₁, ∂/∂y₂, second order) of a plane-valued field at a point.
template <typename T>
struct Jet2T {
    PlaneValue<T> value;
    PlaneValue<T> d1, d2;
    PlaneValue<T> d11, d12, d22;
};

using Jet2 = Jet2T<double>;
using Jet2L = Jet2T<long double>;

template <typename To, typename From>
Jet2T<To> jet_cast(const Jet2T<From>& j) {
    using V = PlaneValue<To>;
    return {V(j.value), V(j.d1), V(j.d2), V(j.d11), V(j.d12), V(j.d22)};
}

/// Integer power by repeated multiplication; x⁰ = 1 including x = 0.
template <typename S>
S ipow(const S& x, int k) {
    S r(1);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

/// c(y₁−a)ⁿ, the coefficient of ∂/∂y₂ in Y₂.
double y2_coefficient(const Point& p, const GrushinParams& g);
/// c·n·(y₁−a)^{n−1}, the coefficient of ∂/∂y₂ in [Y₁, Y₂].
double bracket_coefficient(const Point& p, const GrushinParams& g);
/// ∂/∂y₁ of y2_coefficient; equal to bracket_coefficient.
inline double y2_coefficient_d1(const Point& p, const GrushinParams& g) { return bracket_coefficient(p, g); }

Plane apply_Y1(const Jet2& jet, const Point& p, const GrushinParams& g);
Plane apply_Y2(const Jet2& jet, const Point& p, const GrushinParams& g);
Plane apply_bracket(const Jet2& jet, const Point& p, const GrushinParams& g);

/// Formal horizontal norm v₁·conj(v₁) + v₂·conj(v₂) with plane conjugation.
Plane horizontal_norm_sq(const Plane& v1, const Plane& v2);

}  // namespace qgrushin
