#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qgrushin/plane_value.hpp"

using namespace qgrushin;
using testing::rel_diff;

TEST_SUITE("plane") {

TEST_CASE("plane_pow examples") {
    for (double r : {-2.5, 0.0, 0.3, 7.0}) CHECK(plane_pow(Plane(1.0), r) == Plane(1.0));
    CHECK(rel_diff(plane_pow(Plane(0.0, 1.0), 2.0), Plane(-1.0)) < 1e-15);
    CHECK(plane_pow(Plane(4.0), 0.5) == Plane(2.0));
    CHECK_THROWS_AS(plane_pow(Plane(0.0), 0.5), Error);
}

TEST_CASE("plane_log examples") {
    CHECK(plane_log(Plane(1.0)) == Plane(0.0));
    CHECK(rel_diff(plane_log(Plane(std::numbers::e)), Plane(1.0)) < 1e-15);
    CHECK(rel_diff(plane_log(Plane(0.0, 1.0)), Plane(0.0, std::numbers::pi / 2)) < 1e-15);
    try {
        plane_log(Plane(0.0));
        FAIL("expected ZeroBase");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroBase);
    }
}

TEST_CASE("argument lies in (-pi, pi] including signed zero on the cut") {
    CHECK(plane_log(Plane(-1.0, 0.0)).v == doctest::Approx(std::numbers::pi));
    CHECK(plane_log(Plane(-1.0, -0.0)).v == doctest::Approx(std::numbers::pi));
    CHECK(on_branch_cut(Plane(-2.0, 0.0)));
    CHECK_FALSE(on_branch_cut(Plane(2.0, 0.0)));
}

TEST_CASE("arithmetic matches std::complex") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int k = 0; k < 200; ++k) {
        const Plane a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const std::complex<double> ca = a.to_complex(), cb = b.to_complex();
        CHECK(a * b == b * a);
        CHECK(rel_diff(a * b, Plane::from_complex(ca * cb)) < 1e-15);
        CHECK(rel_diff(a / b, Plane::from_complex(ca / cb)) < 1e-14);
        CHECK(abs(a) == doctest::Approx(std::abs(ca)));
    }
}

TEST_CASE("power additivity and pow = exp(r log) off the cut") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4.0, 4.0), r(-2.0, 2.0);
    for (int k = 0; k < 300; ++k) {
        const Plane z{u(rng), u(rng)};
        if (on_branch_cut(z) || is_zero(z)) continue;
        const double a = r(rng), b = r(rng);
        CHECK(rel_diff(plane_pow(z, a) * plane_pow(z, b), plane_pow(z, a + b)) < 1e-13);
        CHECK(rel_diff(plane_pow(z, a), plane_exp(a * plane_log(z))) < 1e-14);
    }
}

TEST_CASE("conjugation commutes with principal powers off the cut") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int k = 0; k < 100; ++k) {
        const Plane z{u(rng), u(rng)};
        CHECK(rel_diff(conj(plane_pow(z, 0.37)), plane_pow(conj(z), 0.37)) < 1e-14);
    }
}

}  // TEST_SUITE
