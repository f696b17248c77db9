#include "qgrushin/quaternion.hpp"

#include <cmath>
#include <sstream>

namespace qgrushin {

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

std::string to_string(const Quaternion& q) {
    std::ostringstream os;
    os.precision(17);
    os << q.w << (q.x < 0 ? " - " : " + ") << std::abs(q.x) << "i"
       << (q.y < 0 ? " - " : " + ") << std::abs(q.y) << "j"
       << (q.z < 0 ? " - " : " + ") << std::abs(q.z) << "k";
    return os.str();
}

bool nearly_equal(double a, double b, double rel, double abs_floor) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(rel * scale, abs_floor);
}

DriftSpec analyze_drift(const Quaternion& q) {
    if (q.w != 0.0) {
        throw Error(ErrorCode::QNotPurelyImaginary,
                    "drift coefficient must be purely imaginary, got " + to_string(q));
    }
    if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0) {
        throw Error(ErrorCode::QZero, "drift coefficient must be nonzero (Q in H \\ R)");
    }

    const double L = q.x, M = q.y, N = q.z;
    const double sum = L + M + N;
    const double norm_q = q.norm();

    DriftSpec d;
    d.q = q;
    if (std::abs(sum) <= 1e-12 * (std::abs(L) + std::abs(M) + std::abs(N))) {
        d.drift_case = DriftCase::CaseII;
        d.xi = std::sqrt(2.0 * std::abs(L * M + L * N + M * N));
        d.scale = d.xi;
        d.mu = 0.0;
        d.axis = (1.0 / norm_q) * q;
        d.xi_printed = d.xi;
        return d;
    }

    d.drift_case = DriftCase::CaseI;
    d.mu = norm_q / std::abs(sum);
    d.omega = (1.0 / sum) * q;
    d.xi = d.mu * sum;
    d.scale = d.mu;
    d.axis = (1.0 / d.mu) * d.omega;
    d.xi_printed = norm_q * sum;
    return d;
}

DriftSpec complex_drift(double L) {
    DriftSpec d;
    d.q = Quaternion::pure(L, 0.0, 0.0);
    d.drift_case = DriftCase::CaseI;
    d.mu = 1.0;
    d.omega = Quaternion::pure(1.0, 0.0, 0.0);
    d.xi = L;
    d.scale = 1.0;
    d.axis = Quaternion::pure(1.0, 0.0, 0.0);
    d.xi_printed = L;
    return d;
}

Quaternion embed(const Plane& z, const Quaternion& axis) {
    return Quaternion::real(z.u) + z.v * axis;
}

}  // namespace qgrushin
