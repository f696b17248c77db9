#pragma once

#include <complex>

#include "qgrushin/grushin.hpp"
#include "qgrushin/jet.hpp"
#include "qgrushin/parameters.hpp"

namespace qgrushin {

struct GHPair {
    Plane g;
    Plane h;
};

/// g = scale·(c(y₁−a)^{n+1} + axis·(n+1)(y₂−b)), h = conj(g).
GHPair eval_gh(const SolutionSpec& spec, const Point& p);

/// Throws SingularPoint at (a, b) and BranchCut when g sits on the negative
/// real axis for a family that needs principal powers or logarithms there.
void check_domain(const SolutionSpec& spec, const Point& p);

/**
 * The solution field written once over a generic scalar S (PlaneValue<T> or
 * JetScalar<T>). Parameters are converted to T so the same body runs in long
 * double for finite differences.
 */
template <typename T, typename S>
S solution_field(const SolutionSpec& spec, const S& y1, const S& y2) {
    const auto& gp = spec.grushin;
    const S t = y1 - S(static_cast<T>(gp.a));
    const S s = y2 - S(static_cast<T>(gp.b));
    const S base = static_cast<T>(gp.c) * ipow(t, gp.n + 1);
    const S axial = static_cast<T>(gp.n + 1) * s;
    const T alpha = static_cast<T>(spec.alpha);
    const T beta = static_cast<T>(spec.beta);

    if (spec.family == FamilyTag::BaselinePsi && spec.alpha == spec.beta) {
        const S F = base * base + axial * axial;
        return spec.is_log() ? alpha * log(F) : pow(F, alpha);
    }

    const T scale = static_cast<T>(spec.drift.scale);
    const PlaneValue<T> ax = PlaneValue<T>::axis();
    const S g = scale * (base + ax * axial);
    const S h = scale * (base - ax * axial);
    if (spec.is_log()) return alpha * log(g) + beta * log(h);
    return pow(g, alpha) * pow(h, beta);
}

Plane eval_solution(const SolutionSpec& spec, const Point& p);

enum class JetMode { AD, Oracle };

/// AD: forward-mode jets through solution_field. Oracle: closed-form partials of
/// g^α h^β (see closed_form_jet). The two agree to ~1e−13 relative.
Jet2 eval_solution_jet(const SolutionSpec& spec, const Point& p, JetMode mode = JetMode::AD);

/// Same in long double. The operators cancel several digits near y₂ = b, and
/// the harness evaluates them from these jets.
Jet2L eval_solution_jet_l(const SolutionSpec& spec, const Point& p, JetMode mode = JetMode::AD);

/// Axis-aligned box [lo, hi] avoids (a, b) and, for families with a cut, the
/// set {c(y₁−a)^{n+1} < 0, y₂ = b}.
bool stencil_admissible(const SolutionSpec& spec, const Point& lo, const Point& hi);

bool has_branch_cut(const SolutionSpec& spec);

/**
 * Independent evaluation of the complex baselines with std::complex: the
 * divergence-form (p ≠ n+2 or log) and drift-form families with drift iL,
 * unit scale and exponents computed here from L and p. Used by the reduction
 * checks; i is identified with the axis of whatever spec is compared.
 */
std::complex<double> eval_complex_baseline(FamilyTag family, double L, double p,
                                           const GrushinParams& params, const Point& pt);

}  // namespace qgrushin
