#include "qgrushin/theorems.hpp"

#include <algorithm>

#include "qgrushin/error.hpp"

namespace qgrushin {

namespace {

void require_case(const SolutionSpec& spec, DriftCase want, const std::string& id) {
    if (spec.drift.drift_case == want) return;
    const char* need = want == DriftCase::CaseI ? "L+M+N != 0" : "L+M+N = 0";
    throw Error(ErrorCode::QInvalid, id + " requires " + need);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"t31", "t32", "t33", "t34", "t41", "t42", "t51",
                                              "t52", "t61", "t62", "t63", "t64", "c43", "c53"};
    return ids;
}

TheoremCase build_case(const RunConfig& cfg) {
    const auto& id = cfg.theorem;
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + id + "'");
    }
    const GrushinParams& gp = cfg.grushin;
    gp.validate();
    const double L = cfg.L.value_or(cfg.q.x);
    const bool inf = cfg.p == kInfinity;
    auto finite_p = [&]() {
        if (inf) throw Error(ErrorCode::InvalidArgument, id + " requires a finite p");
        return cfg.p;
    };

    TheoremCase tc;
    if (id == "t31") {
        tc.spec = derive_psi(finite_p(), gp);
    } else if (id == "t32") {
        tc.spec = derive_mg(L, gp);
    } else if (id == "t33") {
        tc.spec = derive_childers_div(L, finite_p(), gp);
    } else if (id == "t34") {
        tc.spec = derive_bb_drift(L, finite_p(), gp);
    } else {
        const char tail = id.back();
        const DriftCase want = (tail == '1' || tail == '3') ? DriftCase::CaseI : DriftCase::CaseII;
        const bool div = id == "t41" || id == "t42" || id == "t61" || id == "t62" || id == "c43";
        const bool infinity_family = id[1] == '6' || (inf && id[0] == 't');
        if (infinity_family) {
            tc.spec = derive_infinity(cfg.q, div ? FamilyTag::DivFormInfinity : FamilyTag::DriftFormInfinity, gp);
        } else if (div) {
            tc.spec = derive_divform(cfg.q, finite_p(), gp);
        } else {
            tc.spec = derive_driftform(cfg.q, finite_p(), gp);
        }
        if (id[0] == 't') require_case(tc.spec, want, id);
        if (id[0] == 'c') tc.kind = CaseKind::Dirichlet;
    }
    if (cfg.perturb_alpha) tc.spec = perturb_alpha(tc.spec, *cfg.perturb_alpha);
    tc.op = default_operator(tc.spec.family);
    return tc;
}

}  // namespace qgrushin
