#pragma once

#include <limits>
#include <string_view>

#include "qgrushin/grushin.hpp"
#include "qgrushin/quaternion.hpp"

namespace qgrushin {

enum class FamilyTag {
    DivFormPower,        ///< g^α h^β for the divergence-form operator, p ≠ n+2
    DivFormLog,          ///< (1+ξ)log g + (1−ξ)log h, p = n+2
    DriftForm,           ///< g^α h^β for the drift-term operator
    DivFormInfinity,     ///< exponents (1±ξ)/(2n+2)
    DriftFormInfinity,   ///< exponents (1∓nξ)/(2(n+1))
    BaselinePsi,         ///< real ψ_p = F^{τ_p} or log F, F = c²(y₁−a)^{2n+2} + (n+1)²(y₂−b)²
    BaselineMG,          ///< complex drift Laplacian, exponents −n(1±L)/(2n+2)
    BaselineChildersDiv, ///< complex divergence form (power or log)
    BaselineBBDrift,     ///< complex drift p-Laplacian
};

std::string_view to_string(FamilyTag tag);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * Everything needed to evaluate one solution field.
 *
 * For power families f = g^alpha h^beta. For the log families alpha and beta are
 * the inner exponents (1+ξ, 1−ξ). BaselinePsi is F^τ = g^τ h^τ with the complex
 * g of unit drift, so alpha = beta = τ_p (1 and 1 for the log case). p is +∞ for the infinity families and BaselineMG carries p = 2.
 */
struct SolutionSpec {
    FamilyTag family = FamilyTag::DivFormPower;
    GrushinParams grushin;
    DriftSpec drift;
    double p = 2.0;
    // Extended precision: the operators cancel several digits near y₂ = b, and
    // exponents rounded to double leave a visible residual there.
    long double alpha = 0.0L;
    long double beta = 0.0L;

    bool is_log() const;
    bool is_infinity() const { return p == kInfinity; }
};

SolutionSpec derive_divform(const Quaternion& q, double p, const GrushinParams& params);
SolutionSpec derive_driftform(const Quaternion& q, double p, const GrushinParams& params);
SolutionSpec derive_infinity(const Quaternion& q, FamilyTag family, const GrushinParams& params);

// Same derivations from an already analysed drift (used by the complex baselines
// and the reduction checks).
SolutionSpec divform_from_drift(const DriftSpec& drift, double p, const GrushinParams& params);
SolutionSpec driftform_from_drift(const DriftSpec& drift, double p, const GrushinParams& params);
SolutionSpec infinity_from_drift(const DriftSpec& drift, FamilyTag family, const GrushinParams& params);

SolutionSpec derive_psi(double p, const GrushinParams& params);
SolutionSpec derive_mg(double L, const GrushinParams& params);
SolutionSpec derive_childers_div(double L, double p, const GrushinParams& params);
SolutionSpec derive_bb_drift(double L, double p, const GrushinParams& params);

struct ExponentPair {
    long double alpha;
    long double beta;
};

/// α, β from (family, n, ξ, p) alone, evaluated in long double; the stored
/// values of every derived spec equal this.
ExponentPair family_exponents(FamilyTag family, int n, double xi, double p);

/// Dirichlet thresholds: n+2 for the divergence form, and for the drift form
/// max{|(ξ(n+2)+n)/(n+ξ)|, |(ξ(n+2)−n)/(n−ξ)|} (+∞ when a denominator vanishes).
double dirichlet_bound_divform(int n);
double dirichlet_bound_driftform(int n, double xi);

/// The resonance excluded for the drift form: ξ = ±(n+2−p)/(n(p−1)).
double drift_resonance(int n, double p);

/// Negative control: alpha scaled by (1 + fraction), beta untouched. For the log
/// families this scales the first inner exponent.
SolutionSpec perturb_alpha(SolutionSpec spec, double fraction);

}  // namespace qgrushin
