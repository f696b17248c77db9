#pragma once

#include <functional>
#include <optional>

#include "qgrushin/grushin.hpp"
#include "qgrushin/parameters.hpp"

namespace qgrushin {

using PlaneL = PlaneValue<long double>;

// Stencils are formed in quad precision where the compiler offers it: the
// second differences lose about log10(|f|/|∂²f|·h⁻²) digits, which exceeds
// the long double budget for n = 3 fields far from (a, b).
#if defined(__SIZEOF_FLOAT128__)
using FdReal = __float128;
#else
using FdReal = long double;
#endif
using PlaneF = PlaneValue<FdReal>;

enum class FdScheme { Central2 };

/// Central differences at h = h0·max(1, |y₁−a|, |y₂−b|), refined by Richardson
/// extrapolation over the steps h/2^k, k = 0..levels.
struct FDConfig {
    double h0 = 1e-3;
    int levels = 2;
    FdScheme scheme = FdScheme::Central2;

    /// Throws InvalidArgument unless 0 < h0 ≤ 1e−2 and 2 ≤ levels ≤ 4.
    void validate() const;
};

/// A field sampled in FdReal. `admissible` (optional) decides whether the
/// box [lo, hi] may be used; the default only rejects boxes containing origin.
struct FdField {
    std::function<PlaneF(FdReal, FdReal)> eval;
    Point origin;
    std::function<bool(const Point&, const Point&)> admissible;
};

/// One raw second-order central stencil of step h (no extrapolation). Jets
/// stay in long double: the operators cancel several digits near y₂ = b.
Jet2L fd_central(const FdField& field, const Point& p, double h);

struct FdResult {
    Jet2L jet;
    double step = 0.0;   ///< base step h actually used
    /// Observed order of the raw stencil from the three finest steps; empty
    /// when the differences are at round-off level.
    std::optional<double> order;
};

/// Throws StencilInvalid if the widest stencil box is not admissible.
FdResult fd_eval(const FdField& field, const Point& p, const FDConfig& cfg);

FdField solution_fd_field(const SolutionSpec& spec);

}  // namespace qgrushin
