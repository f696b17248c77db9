#pragma once

#include <string_view>
#include <vector>

#include "qgrushin/grushin.hpp"
#include "qgrushin/oracle.hpp"
#include "qgrushin/parameters.hpp"

namespace qgrushin {

enum class OperatorTag {
    PLaplace,
    MGDrift,
    DivFormFull,
    DivFormReduced,
    DriftFormFull,
    DivFormInfinity,
    DriftFormInfinity,
    InfinityLaplace,
};

std::string_view to_string(OperatorTag tag);
OperatorTag operator_from_string(std::string_view name);

/**
 * Operator value with its additive expansion. `terms` are the summands used for
 * normalisation; `first`/`second` are the two groups that cancel against
 * each other (the Λ halves, or Δ_p f against the drift term).
 */
struct OperatorResult {
    Plane value;
    std::vector<Plane> terms;
    Plane first;
    Plane second;

    double scale() const;
    /// |value| / max(Σ|terms|, 1e−280).
    double relative() const;
};

/// Drift parameters used by the Q-dependent operators: Q acts as (0, xi) in the plane.
struct OperatorParams {
    GrushinParams grushin;
    double p = 2.0;
    double xi = 0.0;
};

/// Kernels take double or long double jets (explicitly instantiated for both);
/// results are reported in double.
template <typename T>
OperatorResult apply_operator(OperatorTag op, const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);

template <typename T>
OperatorResult p_laplacian(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g, double p);
template <typename T>
OperatorResult mg_drift(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g, double L);
template <typename T>
OperatorResult divform_reduced(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);
template <typename T>
OperatorResult divform_full(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);
template <typename T>
OperatorResult driftform_operator(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);
template <typename T>
OperatorResult divform_infinity(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);
template <typename T>
OperatorResult driftform_infinity(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params);
template <typename T>
OperatorResult infinity_laplacian(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g);

/// The operator each family is asserted to solve (DivFormReduced for the divergence families).
OperatorTag default_operator(FamilyTag family);
bool compatible(FamilyTag family, OperatorTag op);
OperatorParams operator_params(const SolutionSpec& spec);

/**
 * The OracleRecord quantities rebuilt from a jet, for comparison with
 * oracle_eval. `scale` holds, per field, the sum of magnitudes of the products
 * the quantity is assembled from (|value| for the first-order fields); the
 * derivatives of ‖∇₀f‖² and ‖Υ‖² cancel to O(s²) near y₂ = b, so agreement is
 * measured against that scale.
 */
struct JetRecord {
    OracleRecord value;
    OracleRecord scale;
};

template <typename T>
JetRecord jet_record(const SolutionSpec& spec, const Jet2T<T>& jet, const Point& pt);

}  // namespace qgrushin
