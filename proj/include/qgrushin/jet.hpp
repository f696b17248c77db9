#pragma once

#include <array>
#include <type_traits>

#include "qgrushin/grushin.hpp"
#include "qgrushin/plane_value.hpp"

namespace qgrushin {

/**
 * Second-order forward-mode jet in two real variables with plane-valued
 * coefficients. hess holds (∂₁₁, ∂₁₂, ∂₂₂).
 *
 * Elementary functions φ that are analytic on the plane propagate by
 *   ∂ᵢφ(z)  = φ'(z) ∂ᵢz
 *   ∂ᵢⱼφ(z) = φ''(z) ∂ᵢz ∂ⱼz + φ'(z) ∂ᵢⱼz,
 * which is valid because the plane is commutative.
 */
template <typename T>
struct JetScalar {
    using Value = PlaneValue<T>;

    Value value;
    std::array<Value, 2> grad{};
    std::array<Value, 3> hess{};

    JetScalar() = default;
    JetScalar(T c) : value(c) {}  // NOLINT(google-explicit-constructor)
    JetScalar(Value c) : value(c) {}  // NOLINT(google-explicit-constructor)

    static JetScalar variable(int index, T at) {
        JetScalar j(at);
        j.grad[static_cast<std::size_t>(index)] = Value(T(1));
        return j;
    }

    Jet2T<T> to_jet2() const {
        return {value, grad[0], grad[1], hess[0], hess[1], hess[2]};
    }

    JetScalar& operator+=(const JetScalar& o) {
        value += o.value;
        for (std::size_t i = 0; i < 2; ++i) grad[i] += o.grad[i];
        for (std::size_t i = 0; i < 3; ++i) hess[i] += o.hess[i];
        return *this;
    }
    JetScalar& operator-=(const JetScalar& o) { return *this += -o; }

    friend JetScalar operator-(const JetScalar& a) {
        JetScalar r;
        r.value = -a.value;
        for (std::size_t i = 0; i < 2; ++i) r.grad[i] = -a.grad[i];
        for (std::size_t i = 0; i < 3; ++i) r.hess[i] = -a.hess[i];
        return r;
    }
    friend JetScalar operator+(JetScalar a, const JetScalar& b) { return a += b; }
    friend JetScalar operator-(JetScalar a, const JetScalar& b) { return a -= b; }

    friend JetScalar operator*(const JetScalar& a, const JetScalar& b) {
        JetScalar r;
        r.value = a.value * b.value;
        r.grad[0] = a.grad[0] * b.value + a.value * b.grad[0];
        r.grad[1] = a.grad[1] * b.value + a.value * b.grad[1];
        r.hess[0] = a.hess[0] * b.value + T(2) * (a.grad[0] * b.grad[0]) + a.value * b.hess[0];
        r.hess[1] = a.hess[1] * b.value + a.grad[0] * b.grad[1] + a.grad[1] * b.grad[0] + a.value * b.hess[1];
        r.hess[2] = a.hess[2] * b.value + T(2) * (a.grad[1] * b.grad[1]) + a.value * b.hess[2];
        return r;
    }
    friend JetScalar operator*(JetScalar a, const Value& s) {
        a.value *= s;
        for (auto& g : a.grad) g *= s;
        for (auto& h : a.hess) h *= s;
        return a;
    }
    friend JetScalar operator*(const Value& s, const JetScalar& a) { return a * s; }
    friend JetScalar operator*(const JetScalar& a, T s) { return a * Value(s); }
    friend JetScalar operator*(T s, const JetScalar& a) { return a * Value(s); }

    friend JetScalar operator/(const JetScalar& a, const JetScalar& b) {
        return a * apply(b, [](const Value& z) {
            const Value inv = Value(T(1)) / z;
            return std::array<Value, 3>{inv, -(inv * inv), T(2) * (inv * inv * inv)};
        });
    }

    /// φ(a) given (φ, φ', φ'') at a.value.
    template <typename F>
    static JetScalar apply(const JetScalar& a, F&& derivs) {
        const auto [f0, f1, f2] = derivs(a.value);
        JetScalar r;
        r.value = f0;
        r.grad[0] = f1 * a.grad[0];
        r.grad[1] = f1 * a.grad[1];
        r.hess[0] = f2 * a.grad[0] * a.grad[0] + f1 * a.hess[0];
        r.hess[1] = f2 * a.grad[0] * a.grad[1] + f1 * a.hess[1];
        r.hess[2] = f2 * a.grad[1] * a.grad[1] + f1 * a.hess[2];
        return r;
    }
};

/// Plane conjugation is real-linear, so it acts coefficientwise.
template <typename T>
JetScalar<T> conj(const JetScalar<T>& a) {
    JetScalar<T> r;
    r.value = conj(a.value);
    for (std::size_t i = 0; i < 2; ++i) r.grad[i] = conj(a.grad[i]);
    for (std::size_t i = 0; i < 3; ++i) r.hess[i] = conj(a.hess[i]);
    return r;
}

/// d(z^r) = r z^{r−1} dz on the principal branch.
template <typename T>
JetScalar<T> pow(const JetScalar<T>& a, T r) {
    using V = PlaneValue<T>;
    return JetScalar<T>::apply(a, [r](const V& z) {
        const V zr = plane_pow(z, r);
        const V inv = V(T(1)) / z;
        return std::array<V, 3>{zr, r * (zr * inv), r * (r - T(1)) * (zr * inv * inv)};
    });
}

/// d(log z) = dz / z.
template <typename T>
JetScalar<T> log(const JetScalar<T>& a) {
    using V = PlaneValue<T>;
    return JetScalar<T>::apply(a, [](const V& z) {
        const V inv = V(T(1)) / z;
        return std::array<V, 3>{plane_log(z), inv, -(inv * inv)};
    });
}

template <typename T>
JetScalar<T> exp(const JetScalar<T>& a) {
    using V = PlaneValue<T>;
    return JetScalar<T>::apply(a, [](const V& z) {
        const V e = plane_exp(z);
        return std::array<V, 3>{e, e, e};
    });
}

using Jet = JetScalar<double>;

/// Exact (to rounding) value and partials of a field written over JetScalar<T>.
template <typename T = double, typename Field>
Jet2T<T> jet_eval(Field&& field, const Point& p) {
    using J = JetScalar<T>;
    const J y1 = J::variable(0, static_cast<T>(p.y1));
    const J y2 = J::variable(1, static_cast<T>(p.y2));
    return J(field(y1, y2)).to_jet2();
}

}  // namespace qgrushin
