#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgrushin/differentiation.hpp"
#include "qgrushin/operators.hpp"
#include "qgrushin/parameters.hpp"

namespace qgrushin {

/// Annulus r_min ≤ |(y₁−a, y₂−b)| ≤ r_max minus the strip |y₂−b| < cut_margin
/// wherever c(y₁−a)^{n+1} < 0.
struct DomainSpec {
    double r_min = 0.1;
    double r_max = 10.0;
    double cut_margin = 0.05;
    int count = 200;
    std::uint64_t seed = 42;

    void validate() const;
};

/// Uniform in area over the annulus (rejection for the strip). Throws
/// EmptyDomain when 1000·count draws do not yield count points.
std::vector<Point> sample_points(const DomainSpec& dom, const GrushinParams& params);

enum class EvalMode { AD, FD, Oracle };

std::string_view to_string(EvalMode mode);
EvalMode mode_from_string(std::string_view name);

struct RunOptions {
    EvalMode mode = EvalMode::AD;
    std::optional<double> threshold;  ///< default 1e−9 (AD, Oracle) or 100·h0² (FD)
    FDConfig fd;

    double effective_threshold() const;
};

struct PointResult {
    Point point;
    double rel_residual = 0.0;  ///< +∞ when evaluation raised
    std::string status;         ///< "ok", "fail", or the error code name
};

struct ResidualReport {
    std::string spec_summary;          ///< JSON text of the spec parameters
    std::string operator_name;
    EvalMode mode = EvalMode::AD;
    double threshold = 0.0;
    std::size_t point_count = 0;
    double max_rel_residual = 0.0;
    double mean_rel_residual = 0.0;
    double median_rel_residual = 0.0;
    std::vector<PointResult> points;
    std::vector<PointResult> failures;
    bool passed = false;

    /// Fraction of points whose residual exceeds x (errored points count as above).
    double fraction_above(double x) const;
};

nlohmann::json spec_to_json(const SolutionSpec& spec);
nlohmann::json report_to_json(const ResidualReport& report);
std::string report_to_csv(const ResidualReport& report);

/// Residual of `op` applied to `spec` at one point, or throws.
OperatorResult evaluate_point(const SolutionSpec& spec, OperatorTag op, const Point& pt, const RunOptions& opt);

/// OpenMP over points; the reduction runs in point order so output is identical
/// to run_residuals_serial.
ResidualReport run_residuals(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom, const RunOptions& opt = {});
ResidualReport run_residuals_serial(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom,
                                    const RunOptions& opt = {});

/// Builds a report from per-point values already computed (used by the
/// reduction check and by tests).
ResidualReport summarize(std::string spec_summary, std::string operator_name, EvalMode mode, double threshold,
                         std::vector<PointResult> points);

enum class ReductionFamily { DivForm, DriftForm };

/**
 * Pointwise relative difference between the quaternion family and scale^{α+β}
 * times the complex baseline with L = ξ (for the log family the scale enters
 * additively as (α+β)·log scale). Throws XiDegenerate / XiResonant as derive_*.
 */
ResidualReport reduction_check(const Quaternion& q, double p, const GrushinParams& params, ReductionFamily family,
                               const DomainSpec& dom = {}, double threshold = 1e-12);

struct RayTrace {
    double angle = 0.0;
    std::vector<double> radii;
    std::vector<double> values;  ///< |f| at each radius
    bool monotone = false;
    double decay_ratio = 0.0;    ///< |f(r_min)| / |f(1)|
};

struct DirichletReport {
    std::string spec_summary;
    bool applicable = false;     ///< p above the Dirichlet bound
    double bound = 0.0;
    std::string explanation;
    double predicted_exponent = 0.0;  ///< α+β: |f| ~ r^{α+β} off y₂ = b
    double decay_threshold = 1e-6;
    std::vector<RayTrace> rays;
    bool monotone = false;
    bool decayed = false;
    bool passed = false;
};

/// Eight rays at angles π/8 + kπ/4 into (a, b), radii 1, 1e−1, …, 1e−8.
DirichletReport dirichlet_check(const SolutionSpec& spec);
nlohmann::json dirichlet_to_json(const DirichletReport& report);

struct ConvergenceReport {
    std::string spec_summary;
    std::vector<double> steps;
    std::vector<double> median_residuals;
    double order = 0.0;
    bool passed = false;
};

/// Raw central-difference residuals at each relative step (no Richardson),
/// median over the sampled points, least-squares slope of log residual
/// against log h. Passes when the slope lies in [1.8, 2.2].
ConvergenceReport convergence_study(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom,
                                    const std::vector<double>& steps = {1e-2, 1e-3, 1e-4});
nlohmann::json convergence_to_json(const ConvergenceReport& report);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qgrushin
