#include "doctest.h"
#include "qgrushin/theorems.hpp"

using namespace qgrushin;

TEST_SUITE("theorems") {

RunConfig config(const std::string& id, Quaternion q, double p) {
    RunConfig c;
    c.theorem = id;
    c.q = q;
    c.p = p;
    return c;
}

TEST_CASE("families and operators") {
    const Quaternion q1{0, 1, 1, 1}, q2{0, 1, -1, 0};
    struct Row {
        std::string id;
        Quaternion q;
        double p;
        FamilyTag family;
        OperatorTag op;
    };
    const std::vector<Row> rows{
        {"t31", q1, 4.0, FamilyTag::BaselinePsi, OperatorTag::PLaplace},
        {"t32", {0, 2, 0, 0}, 4.0, FamilyTag::BaselineMG, OperatorTag::MGDrift},
        {"t33", {0, 2, 0, 0}, 4.0, FamilyTag::BaselineChildersDiv, OperatorTag::DivFormReduced},
        {"t34", {0, 2, 0, 0}, 4.0, FamilyTag::BaselineBBDrift, OperatorTag::DriftFormFull},
        {"t41", q1, 4.0, FamilyTag::DivFormPower, OperatorTag::DivFormReduced},
        {"t41", q1, 3.0, FamilyTag::DivFormLog, OperatorTag::DivFormReduced},
        {"t42", q2, 4.0, FamilyTag::DivFormPower, OperatorTag::DivFormReduced},
        {"t51", q1, 4.0, FamilyTag::DriftForm, OperatorTag::DriftFormFull},
        {"t52", q2, 4.0, FamilyTag::DriftForm, OperatorTag::DriftFormFull},
        {"t61", q1, 4.0, FamilyTag::DivFormInfinity, OperatorTag::DivFormInfinity},
        {"t62", q2, 4.0, FamilyTag::DivFormInfinity, OperatorTag::DivFormInfinity},
        {"t63", q1, 4.0, FamilyTag::DriftFormInfinity, OperatorTag::DriftFormInfinity},
        {"t64", q2, 4.0, FamilyTag::DriftFormInfinity, OperatorTag::DriftFormInfinity},
        {"t41", q1, kInfinity, FamilyTag::DivFormInfinity, OperatorTag::DivFormInfinity},
        {"t52", q2, kInfinity, FamilyTag::DriftFormInfinity, OperatorTag::DriftFormInfinity},
    };
    for (const auto& r : rows) {
        CAPTURE(r.id);
        const TheoremCase tc = build_case(config(r.id, r.q, r.p));
        CHECK(tc.spec.family == r.family);
        CHECK(tc.op == r.op);
        CHECK(tc.kind == CaseKind::Residual);
    }
    CHECK(build_case(config("c43", q1, 10.0)).kind == CaseKind::Dirichlet);
    CHECK(build_case(config("c53", q2, 10.0)).spec.family == FamilyTag::DriftForm);
}

TEST_CASE("complex drift defaults to the i coefficient") {
    RunConfig c = config("t32", {0, 0.5, 3, 3}, 4.0);
    CHECK(build_case(c).spec.drift.xi == 0.5);
    c.L = -1.5;
    CHECK(build_case(c).spec.drift.xi == -1.5);
}

TEST_CASE("Case requirements") {
    for (const auto& [id, q] : std::vector<std::pair<std::string, Quaternion>>{
             {"t41", {0, 1, -1, 0}}, {"t42", {0, 1, 1, 1}}, {"t63", {0, 0, 3, -3}}, {"t64", {0, 2, 0, 0}}}) {
        CAPTURE(id);
        try {
            build_case(config(id, q, 4.0));
            FAIL("expected QInvalid");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::QInvalid);
        }
    }
}

TEST_CASE("invalid configurations") {
    CHECK_THROWS_AS(build_case(config("t99", {0, 1, 1, 1}, 4.0)), Error);
    CHECK_THROWS_AS(build_case(config("t31", {0, 1, 1, 1}, kInfinity)), Error);
    try {
        build_case(config("t41", {0, 1, 0, 0}, 4.0));
        FAIL("expected XiDegenerate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::XiDegenerate);
    }
    RunConfig bad = config("t41", {0, 2, 0, 0}, 4.0);
    bad.grushin.n = 0;
    CHECK_THROWS_AS(build_case(bad), Error);
}

TEST_CASE("perturbation applies after derivation") {
    RunConfig c = config("t41", {0, 2, 0, 0}, 4.0);
    const TheoremCase base = build_case(c);
    c.perturb_alpha = 0.1;
    const TheoremCase pert = build_case(c);
    CHECK(double(pert.spec.alpha) == doctest::Approx(1.1 * double(base.spec.alpha)));
    CHECK(pert.spec.beta == base.spec.beta);
}

}  // TEST_SUITE
