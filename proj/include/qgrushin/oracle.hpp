#pragma once

#include <optional>

#include "qgrushin/grushin.hpp"
#include "qgrushin/parameters.hpp"

namespace qgrushin {

/**
 * Intermediate quantities of each family evaluated from closed forms. Fields not defined for
 * a family stay empty.
 *
 * Divergence families (finite p and p = ∞) fill the Υ block; lambda_half_1/2 are
 * (p−2)/2 Σ Y_s‖Υ‖²Υ_s and ‖Υ‖²(Y₁Υ₁+Y₂Υ₂) for finite p, and the two summands
 * Y_s‖Υ‖²Υ_s of Δ̄_∞ for p = ∞. Drift families fill the second-order block;
 * laplace_part/drift_part are Δ_p f (or Δ_∞ f) and the bracket term.
 */
template <typename T>
struct OracleRecordT {
    using V = PlaneValue<T>;
    V y1f, y2f, y1f_conj, y2f_conj, grad_norm_sq;

    std::optional<V> upsilon1, upsilon2, upsilon_norm_sq;
    std::optional<V> y1_upsilon_norm_sq, y2_upsilon_norm_sq;
    std::optional<V> div_upsilon;
    std::optional<V> lambda_half_1, lambda_half_2;

    std::optional<V> y1y1f, y2y2f;
    std::optional<V> y1_grad_norm_sq, y2_grad_norm_sq;
    std::optional<V> sum_grad_terms;   ///< Σ Y_s‖∇₀f‖² Y_s f
    std::optional<V> norm_laplacian;   ///< ‖∇₀f‖²(Y₁Y₁f + Y₂Y₂f)
    std::optional<V> laplace_part;
    std::optional<V> drift_part;
};

using OracleRecord = OracleRecordT<double>;

/// Families with closed forms: DivFormPower, DriftForm, both infinity
/// families, and the complex baselines of the same shape (ChildersDiv, BBDrift).
bool oracle_supports(FamilyTag family, bool is_log);

/// Evaluated in long double and rounded. Throws FamilyNotTranscribed for the rest.
OracleRecord oracle_eval(const SolutionSpec& spec, const Point& p);

/// Exact partials of g^α h^β (or α log g + β log h) from the chain rule on
/// g and h directly, without jet arithmetic.
Jet2 closed_form_jet(const SolutionSpec& spec, const Point& p);
Jet2L closed_form_jet_l(const SolutionSpec& spec, const Point& p);

}  // namespace qgrushin
