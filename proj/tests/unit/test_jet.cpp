#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qgrushin/jet.hpp"
#include "qgrushin/oracle.hpp"
#include "qgrushin/parameters.hpp"
#include "qgrushin/solutions.hpp"

using namespace qgrushin;
using testing::rel_diff;

TEST_SUITE("jet") {

TEST_CASE("product of coordinates") {
    const Jet2 j = jet_eval([](const Jet& y1, const Jet& y2) { return y1 * y2; }, {2.0, 3.0});
    CHECK(j.value == Plane(6.0));
    CHECK(j.d1 == Plane(3.0));
    CHECK(j.d2 == Plane(2.0));
    CHECK(j.d11 == Plane(0.0));
    CHECK(j.d12 == Plane(1.0));
    CHECK(j.d22 == Plane(0.0));
}

TEST_CASE("monomials against hand derivatives") {
    const Jet2 j = jet_eval([](const Jet& y1, const Jet& y2) { return ipow(y1, 3) * ipow(y2, 2); }, {1.5, -2.0});
    CHECK(j.d1.u == doctest::Approx(3 * 1.5 * 1.5 * 4.0));
    CHECK(j.d2.u == doctest::Approx(1.5 * 1.5 * 1.5 * 2 * -2.0));
    CHECK(j.d11.u == doctest::Approx(6 * 1.5 * 4.0));
    CHECK(j.d12.u == doctest::Approx(3 * 1.5 * 1.5 * 2 * -2.0));
    CHECK(j.d22.u == doctest::Approx(2 * 1.5 * 1.5 * 1.5));
    const Jet2 sq = jet_eval([](const Jet& y1, const Jet&) { return y1 * y1; }, {3.0, 0.4});
    CHECK(sq.d11 == Plane(2.0));
}

TEST_CASE("z^2 for z = y1 + axis y2 follows the product rule") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        const Point p{u(rng), u(rng)};
        const Jet2 j = jet_eval(
            [](const Jet& y1, const Jet& y2) {
                const Jet z = y1 + Plane::axis() * y2;
                return z * z;
            },
            p);
        const Plane z{p.y1, p.y2};
        CHECK(rel_diff(j.d1, 2.0 * z) < 1e-15);
        CHECK(rel_diff(j.d2, 2.0 * z * Plane::axis()) < 1e-15);
        CHECK(rel_diff(j.d22, Plane(-2.0)) < 1e-15);
    }
}

TEST_CASE("power and log rules") {
    const Point p{0.7, 1.3};
    const Plane z{p.y1, p.y2};
    const Jet2 pw = jet_eval([](const Jet& y1, const Jet& y2) { return pow(y1 + Plane::axis() * y2, 0.4); }, p);
    CHECK(rel_diff(pw.d1, 0.4 * plane_pow(z, -0.6)) < 1e-14);
    CHECK(rel_diff(pw.d11, 0.4 * -0.6 * plane_pow(z, -1.6)) < 1e-14);
    const Jet2 lg = jet_eval([](const Jet& y1, const Jet& y2) { return log(y1 + Plane::axis() * y2); }, p);
    CHECK(rel_diff(lg.d1, Plane(1.0) / z) < 1e-15);
    CHECK(rel_diff(lg.d2, Plane::axis() / z) < 1e-15);
}

TEST_CASE("linearity and Leibniz on random compositions") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    const auto f = [](const Jet& y1, const Jet& y2) { return pow(y1 * y1 + y2, 0.7) + exp(y1 * y2 * 0.1); };
    const auto g = [](const Jet& y1, const Jet& y2) { return log(y1 + Plane(0.0, 1.0) * y2) * y1; };
    for (int k = 0; k < 50; ++k) {
        const Point p{u(rng), u(rng)};
        const Jet2 jf = jet_eval(f, p), jg = jet_eval(g, p);
        const Jet2 sum = jet_eval([&](const Jet& a, const Jet& b) { return 2.0 * f(a, b) + g(a, b); }, p);
        const Jet2 prod = jet_eval([&](const Jet& a, const Jet& b) { return f(a, b) * g(a, b); }, p);
        CHECK(rel_diff(sum.d12, 2.0 * jf.d12 + jg.d12) < 1e-13);
        CHECK(rel_diff(prod.d1, jf.d1 * jg.value + jf.value * jg.d1) < 1e-13);
        CHECK(rel_diff(prod.d12, jf.d12 * jg.value + jf.d1 * jg.d2 + jf.d2 * jg.d1 + jf.value * jg.d12) < 1e-13);
    }
}

TEST_CASE("DivFormPower jets match the closed-form oracle derivatives") {
    const SolutionSpec s = derive_divform({0, 1, 1, 1}, 4.0, {1, 0, 0, 1});
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 100; ++k) {
        const Point p{u(rng), u(rng)};
        if (std::abs(p.y2) < 0.05) continue;
        const Jet2 ad = eval_solution_jet(s, p);
        const OracleRecord o = oracle_eval(s, p);
        CHECK(rel_diff(ad.d1, o.y1f) < 1e-11);
        CHECK(rel_diff(y2_coefficient(p, s.grushin) * ad.d2, o.y2f) < 1e-11);
    }
}

}  // TEST_SUITE
