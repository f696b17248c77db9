#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qgrushin/quaternion.hpp"

using namespace qgrushin;
using testing::rel_diff;

TEST_SUITE("quaternion") {

const Quaternion one{1, 0, 0, 0}, I{0, 1, 0, 0}, J{0, 0, 1, 0}, K{0, 0, 0, 1};

TEST_CASE("basis relations") {
    CHECK(quat_mul(I, J) == K);
    CHECK(quat_mul(J, K) == I);
    CHECK(quat_mul(K, I) == J);
    CHECK(quat_mul(J, I) == -1.0 * K);
    CHECK(I * I == -1.0 * one);
    CHECK(J * J == -1.0 * one);
    CHECK(K * K == -1.0 * one);
    CHECK(I * J * K == -1.0 * one);
}

TEST_CASE("identity and pure squares") {
    const Quaternion q{0.3, -1.2, 2.0, 0.7};
    CHECK(one * q == q);
    CHECK(q * one == q);
    CHECK((I + J + K) * (I + J + K) == -3.0 * one);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        const Quaternion p = testing::random_pure(rng);
        CHECK(rel_diff(p * p, -p.norm_sq() * one) < 1e-14);
    }
}

TEST_CASE("conjugate gives the squared norm") {
    const Quaternion q{0.5, -1.5, 2.5, 3.0};
    CHECK(rel_diff(conj(q) * q, q.norm_sq() * one) < 1e-15);
    CHECK(q.norm_sq() == doctest::Approx(0.25 + 2.25 + 6.25 + 9.0));
}

TEST_CASE("Q = 2i is Case I with xi = mu (L+M+N)") {
    const DriftSpec d = analyze_drift({0, 2, 0, 0});
    CHECK(d.drift_case == DriftCase::CaseI);
    CHECK(d.mu == doctest::Approx(1.0));
    CHECK(rel_diff(d.omega, I) < 1e-15);
    CHECK(rel_diff(d.axis, I) < 1e-15);
    CHECK(d.xi == doctest::Approx(2.0));
    // Literal √|Q²|(L+M+N).
    CHECK(d.xi_printed == doctest::Approx(4.0));
}

TEST_CASE("Q = i+j+k") {
    const DriftSpec d = analyze_drift(I + J + K);
    CHECK(d.drift_case == DriftCase::CaseI);
    CHECK(d.mu == doctest::Approx(std::sqrt(3.0) / 3));
    CHECK(rel_diff(d.omega, (1.0 / 3) * (I + J + K)) < 1e-15);
    CHECK(rel_diff(d.axis, (1 / std::sqrt(3.0)) * (I + J + K)) < 1e-15);
    CHECK(d.xi == doctest::Approx(std::sqrt(3.0)));
    CHECK(d.xi_printed == doctest::Approx(3 * std::sqrt(3.0)));
    CHECK(rel_diff(d.omega * d.omega, -d.mu * d.mu * one) < 1e-15);
}

TEST_CASE("Q = i-j is Case II") {
    const DriftSpec d = analyze_drift(I - J);
    CHECK(d.drift_case == DriftCase::CaseII);
    CHECK(d.xi == doctest::Approx(std::sqrt(2.0)));
    CHECK(d.xi == doctest::Approx(d.q.norm()));
    CHECK(rel_diff(d.axis, (1 / std::sqrt(2.0)) * (I - J)) < 1e-15);
}

TEST_CASE("invalid drift coefficients") {
    CHECK_THROWS_AS(analyze_drift({0, 0, 0, 0}), Error);
    try {
        analyze_drift({0, 0, 0, 0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::QZero);
    }
    try {
        analyze_drift({1, 1, 0, 0});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::QNotPurelyImaginary);
    }
}

TEST_CASE("axis squares to -1 and omega has norm mu") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Quaternion q = testing::random_pure(rng);
        const DriftSpec d = analyze_drift(q);
        CHECK(rel_diff(d.axis * d.axis, -1.0 * one) < 1e-14);
        if (d.drift_case == DriftCase::CaseI) CHECK(std::abs(d.omega.norm() - d.mu) <= 1e-15 * d.mu * 4);
        CHECK(rel_diff(d.xi * d.axis, q) < 1e-14);
    }
}

TEST_CASE("Case II xi equals both sqrt(2|LM+LN+MN|) and the norm") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const double L = u(rng), M = u(rng);
        const Quaternion q{0, L, M, -(L + M)};
        const DriftSpec d = analyze_drift(q);
        REQUIRE(d.drift_case == DriftCase::CaseII);
        const double N = -(L + M);
        CHECK(std::abs(d.xi - q.norm()) <= 1e-14 * q.norm());
        CHECK(std::abs(d.xi - std::sqrt(2 * std::abs(L * M + L * N + M * N))) <= 1e-14 * q.norm());
    }
}

TEST_CASE("plane embedding is an algebra homomorphism") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        const DriftSpec d = analyze_drift(testing::random_pure(rng));
        const Plane a{u(rng), u(rng)}, b{u(rng), u(rng)};
        CHECK(rel_diff(embed(a * b, d.axis), embed(a, d.axis) * embed(b, d.axis)) < 1e-14);
        CHECK(rel_diff(embed(a + b, d.axis), embed(a, d.axis) + embed(b, d.axis)) < 1e-14);
        CHECK(rel_diff(embed(conj(a), d.axis), conj(embed(a, d.axis))) < 1e-14);
    }
}

TEST_CASE("complex drift of the baselines") {
    const DriftSpec d = complex_drift(0.5);
    CHECK(d.xi == 0.5);
    CHECK(d.scale == 1.0);
    CHECK(d.axis == I);
}

}  // TEST_SUITE
