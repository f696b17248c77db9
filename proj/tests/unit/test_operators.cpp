#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qgrushin/harness.hpp"
#include "qgrushin/operators.hpp"
#include "qgrushin/solutions.hpp"

using namespace qgrushin;

TEST_SUITE("operators") {

double residual(const SolutionSpec& s, OperatorTag op, const Point& p) {
    return apply_operator(op, eval_solution_jet_l(s, p), p, operator_params(s)).relative();
}

double worst(const SolutionSpec& s, OperatorTag op, int count = 100) {
    double m = 0.0;
    for (const auto& p : sample_points({0.1, 10.0, 0.05, count, 11}, s.grushin)) m = std::max(m, residual(s, op, p));
    return m;
}

TEST_CASE("psi solves the p-Laplacian") {
    const SolutionSpec s = derive_psi(4.0, {1, 0.0, 0.0, 1.0});
    CHECK(residual(s, OperatorTag::PLaplace, {1.0, 1.0}) < 1e-10);
    CHECK(worst(derive_psi(2.5, {2, 1.0, -1.0, -2.0}), OperatorTag::PLaplace) < 1e-10);
    CHECK(worst(derive_psi(4.0, {2, 0.0, 0.0, 1.0}), OperatorTag::PLaplace) < 1e-10);  // p = n+2: log
}

TEST_CASE("complex drift Laplacian") {
    CHECK(worst(derive_mg(0.5, {1, 0.0, 0.0, 1.0}), OperatorTag::MGDrift) < 1e-10);
    CHECK(worst(derive_mg(0.0, {2, 0.0, 0.0, -2.0}), OperatorTag::MGDrift) < 1e-10);
    // L = 0: symmetric exponents, so the solution is real
    const SolutionSpec s = derive_mg(0.0, {1, 0.0, 0.0, 1.0});
    CHECK(s.alpha == s.beta);
    CHECK(std::abs(eval_solution(s, {0.7, 1.3}).v) < 1e-15);
}

TEST_CASE("divergence form at a fixed point") {
    const GrushinParams g{1, 0.0, 0.0, 1.0};
    for (double p : {4.0, 3.0, 2.5, 10.0}) {
        const SolutionSpec s = derive_divform({0, 1, 1, 1}, p, g);
        CHECK(s.is_log() == (p == 3.0));
        CHECK(residual(s, OperatorTag::DivFormReduced, {1.0, 0.5}) < 1e-10);
        CHECK(residual(s, OperatorTag::DivFormFull, {1.0, 0.5}) < 1e-10);
    }
}

TEST_CASE("drift form, Case I and Case II") {
    CHECK(worst(derive_driftform({0, 2, 0, 0}, 4.0, {1, 0.0, 0.0, 1.0}), OperatorTag::DriftFormFull) < 1e-10);
    CHECK(worst(derive_driftform({0, 1, -1, 0}, 4.0, {2, 0.0, 0.0, -2.0}), OperatorTag::DriftFormFull) < 1e-10);
}

TEST_CASE("infinity operators") {
    const GrushinParams g{2, 0.5, 0.5, 1.0};
    CHECK(worst(derive_infinity({0, 2, 0, 0}, FamilyTag::DivFormInfinity, g), OperatorTag::DivFormInfinity) < 1e-10);
    CHECK(worst(derive_infinity({0, 0, 3, -3}, FamilyTag::DivFormInfinity, g), OperatorTag::DivFormInfinity) <
          1e-10);
    CHECK(worst(derive_infinity({0, 1, 1, 1}, FamilyTag::DriftFormInfinity, g), OperatorTag::DriftFormInfinity) <
          1e-10);
    CHECK(worst(derive_infinity({0, 1, -1, 0}, FamilyTag::DriftFormInfinity, g), OperatorTag::DriftFormInfinity) <
          1e-10);
}

TEST_CASE("the p-Laplacian is homogeneous of degree p-1") {
    const SolutionSpec s = derive_divform({0, 1, 1, 1}, 4.0, {1, 0.0, 0.0, 1.0});
    const Point pt{0.9, -0.4};
    Jet2L j = eval_solution_jet_l(s, pt);
    const OperatorResult base = p_laplacian(j, pt, s.grushin, 3.5);
    const long double k = 2.5L;
    for (auto* f : {&j.value, &j.d1, &j.d2, &j.d11, &j.d12, &j.d22}) *f = k * *f;
    const OperatorResult scaled = p_laplacian(j, pt, s.grushin, 3.5);
    CHECK(testing::rel_diff(scaled.value, std::pow(2.5, 2.5) * base.value) < 1e-10);
}

TEST_CASE("complex divergence baseline matches the quaternion family with Q = Li") {
    const GrushinParams g{1, 0.0, 0.0, 1.0};
    const SolutionSpec cd = derive_childers_div(2.0, 4.0, g);
    const SolutionSpec q = derive_divform({0, 2, 0, 0}, 4.0, g);
    CHECK(cd.alpha == q.alpha);
    CHECK(cd.beta == q.beta);
    CHECK(worst(cd, OperatorTag::DivFormReduced) < 1e-10);
    CHECK(worst(derive_bb_drift(2.0, 4.0, g), OperatorTag::DriftFormFull) < 1e-10);
}

TEST_CASE("constant field has a degenerate gradient") {
    Jet2 j;
    j.value = Plane(1.0);
    try {
        p_laplacian(j, {1.0, 1.0}, GrushinParams{}, 4.0);
        FAIL("expected DegenerateGradient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateGradient);
    }
}

TEST_CASE("compatibility and names") {
    CHECK(compatible(FamilyTag::DivFormPower, OperatorTag::DivFormFull));
    CHECK(compatible(FamilyTag::DivFormLog, OperatorTag::DivFormReduced));
    CHECK_FALSE(compatible(FamilyTag::DriftForm, OperatorTag::DivFormReduced));
    CHECK_FALSE(compatible(FamilyTag::BaselinePsi, OperatorTag::MGDrift));
    CHECK(default_operator(FamilyTag::BaselineMG) == OperatorTag::MGDrift);
    for (auto t : {OperatorTag::PLaplace, OperatorTag::DriftFormInfinity, OperatorTag::InfinityLaplace})
        CHECK(operator_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(operator_from_string("Laplace"), Error);
}

TEST_CASE("perturbed exponents leave a visible residual") {
    const SolutionSpec s = perturb_alpha(derive_divform({0, 1, 1, 1}, 4.0, {1, 0.0, 0.0, 1.0}), 0.1);
    CHECK(residual(s, OperatorTag::DivFormReduced, {1.0, 0.5}) > 1e-3);
}

}  // TEST_SUITE
