#include "qgrushin/parameters.hpp"

#include <cmath>
#include <sstream>

namespace qgrushin {

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::DivFormPower: return "DivFormPower";
        case FamilyTag::DivFormLog: return "DivFormLog";
        case FamilyTag::DriftForm: return "DriftForm";
        case FamilyTag::DivFormInfinity: return "DivFormInfinity";
        case FamilyTag::DriftFormInfinity: return "DriftFormInfinity";
        case FamilyTag::BaselinePsi: return "BaselinePsi";
        case FamilyTag::BaselineMG: return "BaselineMG";
        case FamilyTag::BaselineChildersDiv: return "BaselineChildersDiv";
        case FamilyTag::BaselineBBDrift: return "BaselineBBDrift";
    }
    return "Unknown";
}

namespace {

bool is_critical(int n, double p) { return nearly_equal(p, n + 2.0); }

void require_finite_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        std::ostringstream os;
        os << "p must be a finite real > 1, got " << p;
        throw Error(ErrorCode::InvalidArgument, os.str());
    }
}

DriftSpec analyze_or_invalid(const Quaternion& q) {
    try {
        return analyze_drift(q);
    } catch (const Error& e) {
        throw Error(ErrorCode::QInvalid, e.what());
    }
}

}  // namespace

bool SolutionSpec::is_log() const {
    if (family == FamilyTag::DivFormLog) return true;
    if (family == FamilyTag::BaselineChildersDiv || family == FamilyTag::BaselinePsi) {
        return is_critical(grushin.n, p);
    }
    return false;
}

ExponentPair family_exponents(FamilyTag family, int n, double xi_in, double p_in) {
    using L = long double;
    const L xi = xi_in, p = p_in, nn = n, np1 = nn + 1;
    switch (family) {
        case FamilyTag::DivFormPower:
        case FamilyTag::DivFormLog:
        case FamilyTag::BaselineChildersDiv: {
            if (is_critical(n, p_in)) return {1 + xi, 1 - xi};
            const L k = (nn + 2 - p) / ((1 - p) * (2 * np1));
            return {k * (1 + xi), k * (1 - xi)};
        }
        case FamilyTag::DriftForm:
        case FamilyTag::BaselineBBDrift: {
            const L d = 2 * np1 * (1 - p);
            const L shift = xi * nn * (1 - p);
            return {(nn + 2 - p - shift) / d, (nn + 2 - p + shift) / d};
        }
        case FamilyTag::DivFormInfinity:
            return {(1 + xi) / (2 * np1), (1 - xi) / (2 * np1)};
        case FamilyTag::DriftFormInfinity:
            return {(1 - nn * xi) / (2 * np1), (1 + nn * xi) / (2 * np1)};
        case FamilyTag::BaselinePsi: {
            if (is_critical(n, p_in)) return {1, 1};
            const L tau = (nn + 2 - p) / ((2 * np1) * (1 - p));
            return {tau, tau};
        }
        case FamilyTag::BaselineMG: {
            const L k = -nn / (2 * np1);
            return {k * (1 + xi), k * (1 - xi)};
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

SolutionSpec make_spec(FamilyTag family, const DriftSpec& drift, double p, const GrushinParams& params) {
    SolutionSpec s;
    s.family = family;
    s.grushin = params;
    s.drift = drift;
    s.p = p;
    const auto e = family_exponents(family, params.n, drift.xi, p);
    s.alpha = e.alpha;
    s.beta = e.beta;
    return s;
}

void require_not_degenerate(double xi, const char* who) {
    if (nearly_equal(std::abs(xi), 1.0)) {
        std::ostringstream os;
        os << "xi = " << xi << " excluded by " << who << " (requires xi != +-1)";
        throw Error(ErrorCode::XiDegenerate, os.str());
    }
}

void require_not_resonant(double xi, int n, double p, const char* who) {
    const double r = drift_resonance(n, p);
    if (nearly_equal(std::abs(xi), std::abs(r))) {
        std::ostringstream os;
        os << "xi = " << xi << " excluded by " << who << " (requires xi != +-(n+2-p)/(n(p-1)) = +-" << r << ")";
        throw Error(ErrorCode::XiResonant, os.str());
    }
}

}  // namespace

double drift_resonance(int n, double p) { return (n + 2.0 - p) / (n * (p - 1.0)); }

SolutionSpec divform_from_drift(const DriftSpec& drift, double p, const GrushinParams& params) {
    params.validate();
    require_finite_p(p);
    require_not_degenerate(drift.xi, "the divergence-form theorem");
    const auto family = is_critical(params.n, p) ? FamilyTag::DivFormLog : FamilyTag::DivFormPower;
    return make_spec(family, drift, p, params);
}

SolutionSpec driftform_from_drift(const DriftSpec& drift, double p, const GrushinParams& params) {
    params.validate();
    require_finite_p(p);
    require_not_resonant(drift.xi, params.n, p, "the drift-form theorem");
    return make_spec(FamilyTag::DriftForm, drift, p, params);
}

SolutionSpec infinity_from_drift(const DriftSpec& drift, FamilyTag family, const GrushinParams& params) {
    params.validate();
    if (family != FamilyTag::DivFormInfinity && family != FamilyTag::DriftFormInfinity) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("not an infinity family: ") + std::string(to_string(family)));
    }
    return make_spec(family, drift, kInfinity, params);
}

SolutionSpec derive_divform(const Quaternion& q, double p, const GrushinParams& params) {
    return divform_from_drift(analyze_or_invalid(q), p, params);
}

SolutionSpec derive_driftform(const Quaternion& q, double p, const GrushinParams& params) {
    return driftform_from_drift(analyze_or_invalid(q), p, params);
}

SolutionSpec derive_infinity(const Quaternion& q, FamilyTag family, const GrushinParams& params) {
    return infinity_from_drift(analyze_or_invalid(q), family, params);
}

SolutionSpec derive_psi(double p, const GrushinParams& params) {
    params.validate();
    require_finite_p(p);
    return make_spec(FamilyTag::BaselinePsi, complex_drift(0.0), p, params);
}

SolutionSpec derive_mg(double L, const GrushinParams& params) {
    params.validate();
    return make_spec(FamilyTag::BaselineMG, complex_drift(L), 2.0, params);
}

SolutionSpec derive_childers_div(double L, double p, const GrushinParams& params) {
    params.validate();
    require_finite_p(p);
    require_not_degenerate(L, "the complex divergence-form theorem");
    return make_spec(FamilyTag::BaselineChildersDiv, complex_drift(L), p, params);
}

SolutionSpec derive_bb_drift(double L, double p, const GrushinParams& params) {
    params.validate();
    require_finite_p(p);
    require_not_resonant(L, params.n, p, "the complex drift theorem");
    return make_spec(FamilyTag::BaselineBBDrift, complex_drift(L), p, params);
}

double dirichlet_bound_divform(int n) { return n + 2.0; }

double dirichlet_bound_driftform(int n, double xi) {
    auto branch = [n](double num, double den) {
        return std::abs(den) <= 1e-12 * n ? kInfinity : std::abs(num / den);
    };
    return std::max(branch(xi * (n + 2.0) + n, n + xi), branch(xi * (n + 2.0) - n, n - xi));
}

SolutionSpec perturb_alpha(SolutionSpec spec, double fraction) {
    spec.alpha *= 1.0L + fraction;
    return spec;
}

}  // namespace qgrushin
