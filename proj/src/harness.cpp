#include "qgrushin/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qgrushin/error.hpp"
#include "qgrushin/oracle.hpp"
#include "qgrushin/solutions.hpp"

namespace qgrushin {

using nlohmann::json;

void DomainSpec::validate() const {
    if (!(r_min > 0.0)) throw Error(ErrorCode::InvalidArgument, "r_min must be positive");
    if (!(r_max > r_min)) throw Error(ErrorCode::InvalidArgument, "r_max must exceed r_min");
    if (!(cut_margin > 0.0)) throw Error(ErrorCode::InvalidArgument, "cut_margin must be positive");
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "count must be non-negative");
}

std::vector<Point> sample_points(const DomainSpec& dom, const GrushinParams& params) {
    dom.validate();
    params.validate();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(dom.count));
    std::mt19937_64 rng(dom.seed);
    std::uniform_real_distribution<double> r2(dom.r_min * dom.r_min, dom.r_max * dom.r_max);
    std::uniform_real_distribution<double> theta(-std::numbers::pi, std::numbers::pi);
    const long long budget = 1000LL * dom.count;
    for (long long tries = 0; static_cast<int>(out.size()) < dom.count; ++tries) {
        if (tries >= budget) throw Error(ErrorCode::EmptyDomain, "exclusions leave no room for the requested points");
        const double r = std::sqrt(r2(rng));
        const double th = theta(rng);
        const double t = r * std::cos(th), s = r * std::sin(th);
        const bool cut_side = params.c * ipow(t, params.n + 1) < 0.0;
        if (cut_side && std::abs(s) < dom.cut_margin) continue;
        out.push_back({params.a + t, params.b + s});
    }
    return out;
}

std::string_view to_string(EvalMode mode) {
    switch (mode) {
        case EvalMode::AD: return "AD";
        case EvalMode::FD: return "FD";
        case EvalMode::Oracle: return "Oracle";
    }
    return "?";
}

EvalMode mode_from_string(std::string_view name) {
    if (name == "AD" || name == "ad") return EvalMode::AD;
    if (name == "FD" || name == "fd") return EvalMode::FD;
    if (name == "Oracle" || name == "oracle") return EvalMode::Oracle;
    throw Error(ErrorCode::InvalidArgument, "mode must be one of AD, FD, Oracle");
}

double RunOptions::effective_threshold() const {
    if (threshold) return *threshold;
    return mode == EvalMode::FD ? 100.0 * fd.h0 * fd.h0 : 1e-9;
}

double ResidualReport::fraction_above(double x) const {
    if (points.empty()) return 0.0;
    const auto n = std::count_if(points.begin(), points.end(),
                                 [x](const PointResult& r) { return !(r.rel_residual <= x); });
    return static_cast<double>(n) / static_cast<double>(points.size());
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

PointResult evaluate_safe(const SolutionSpec& spec, OperatorTag op, const Point& pt, const RunOptions& opt,
                          double threshold) {
    try {
        const double rel = evaluate_point(spec, op, pt, opt).relative();
        return {pt, rel, rel < threshold ? "ok" : "fail"};
    } catch (const Error& e) {
        return {pt, std::numeric_limits<double>::infinity(), std::string(to_string(e.code()))};
    }
}

std::string summary_text(const SolutionSpec& spec) { return spec_to_json(spec).dump(); }

}  // namespace

json spec_to_json(const SolutionSpec& spec) {
    const auto& d = spec.drift;
    return {
        {"family", std::string(to_string(spec.family))},
        {"n", spec.grushin.n},
        {"a", spec.grushin.a},
        {"b", spec.grushin.b},
        {"c", spec.grushin.c},
        {"p", spec.is_infinity() ? json("inf") : json(spec.p)},
        {"log_branch", spec.is_log()},
        {"alpha", static_cast<double>(spec.alpha)},
        {"beta", static_cast<double>(spec.beta)},
        {"Q", quaternion_json(d.q)},
        {"case", d.drift_case == DriftCase::CaseI ? "CaseI" : "CaseII"},
        {"mu", d.mu},
        {"xi", d.xi},
        {"xi_printed", d.xi_printed},
        {"scale", d.scale},
        {"axis", quaternion_json(d.axis)},
    };
}

OperatorResult evaluate_point(const SolutionSpec& spec, OperatorTag op, const Point& pt, const RunOptions& opt) {
    const OperatorParams params = operator_params(spec);
    switch (opt.mode) {
        case EvalMode::AD:
            return apply_operator(op, eval_solution_jet_l(spec, pt, JetMode::AD), pt, params);
        case EvalMode::Oracle:
            return apply_operator(op, eval_solution_jet_l(spec, pt, JetMode::Oracle), pt, params);
        case EvalMode::FD:
            check_domain(spec, pt);
            return apply_operator(op, fd_eval(solution_fd_field(spec), pt, opt.fd).jet, pt, params);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown evaluation mode");
}

ResidualReport summarize(std::string spec_summary, std::string operator_name, EvalMode mode, double threshold,
                         std::vector<PointResult> points) {
    ResidualReport r;
    r.spec_summary = std::move(spec_summary);
    r.operator_name = std::move(operator_name);
    r.mode = mode;
    r.threshold = threshold;
    r.point_count = points.size();
    std::vector<double> values;
    values.reserve(points.size());
    double sum = 0.0;
    for (const auto& pr : points) {
        values.push_back(pr.rel_residual);
        sum += pr.rel_residual;
        r.max_rel_residual = std::max(r.max_rel_residual, pr.rel_residual);
        if (!(pr.rel_residual < threshold)) r.failures.push_back(pr);
    }
    if (!values.empty()) {
        r.mean_rel_residual = sum / static_cast<double>(values.size());
        const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
        std::nth_element(values.begin(), mid, values.end());
        r.median_rel_residual = *mid;
        if (values.size() % 2 == 0) {
            const double lower = *std::max_element(values.begin(), mid);
            r.median_rel_residual = 0.5 * (lower + *mid);
        }
    }
    r.points = std::move(points);
    r.passed = r.failures.empty();
    return r;
}

ResidualReport run_residuals(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom, const RunOptions& opt) {
    if (!compatible(spec.family, op)) {
        throw Error(ErrorCode::IncompatibleOperator,
                    std::string(to_string(op)) + " does not apply to " + std::string(to_string(spec.family)));
    }
    const auto pts = sample_points(dom, spec.grushin);
    const double thr = opt.effective_threshold();
    std::vector<PointResult> results(pts.size());
    const auto count = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) {
        results[static_cast<std::size_t>(i)] = evaluate_safe(spec, op, pts[static_cast<std::size_t>(i)], opt, thr);
    }
    return summarize(summary_text(spec), std::string(to_string(op)), opt.mode, thr, std::move(results));
}

ResidualReport run_residuals_serial(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom,
                                    const RunOptions& opt) {
    if (!compatible(spec.family, op)) {
        throw Error(ErrorCode::IncompatibleOperator,
                    std::string(to_string(op)) + " does not apply to " + std::string(to_string(spec.family)));
    }
    const auto pts = sample_points(dom, spec.grushin);
    const double thr = opt.effective_threshold();
    std::vector<PointResult> results;
    results.reserve(pts.size());
    for (const auto& pt : pts) results.push_back(evaluate_safe(spec, op, pt, opt, thr));
    return summarize(summary_text(spec), std::string(to_string(op)), opt.mode, thr, std::move(results));
}

json report_to_json(const ResidualReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"point", {f.point.y1, f.point.y2}}, {"value", number_or_null(f.rel_residual)},
                            {"status", f.status}});
    }
    json points = json::array();
    for (const auto& pr : r.points) points.push_back({pr.point.y1, pr.point.y2});
    return {
        {"spec", json::parse(r.spec_summary)},
        {"operator", r.operator_name},
        {"mode", std::string(to_string(r.mode))},
        {"threshold", r.threshold},
        {"point_count", r.point_count},
        {"max_rel_residual", number_or_null(r.max_rel_residual)},
        {"mean_rel_residual", number_or_null(r.mean_rel_residual)},
        {"median_rel_residual", number_or_null(r.median_rel_residual)},
        {"failures", failures},
        {"points", points},
        {"passed", r.passed},
    };
}

std::string report_to_csv(const ResidualReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "y1,y2,rel_residual,status\n";
    for (const auto& pr : r.points) {
        os << pr.point.y1 << ',' << pr.point.y2 << ',';
        if (std::isfinite(pr.rel_residual)) os << pr.rel_residual;
        else os << "inf";
        os << ',' << pr.status << '\n';
    }
    return os.str();
}

ResidualReport reduction_check(const Quaternion& q, double p, const GrushinParams& params, ReductionFamily family,
                               const DomainSpec& dom, double threshold) {
    const SolutionSpec spec = family == ReductionFamily::DivForm ? derive_divform(q, p, params)
                                                                  : derive_driftform(q, p, params);
    const FamilyTag baseline =
        family == ReductionFamily::DivForm ? FamilyTag::BaselineChildersDiv : FamilyTag::BaselineBBDrift;
    const double xi = spec.drift.xi;
    const double k = spec.drift.scale;
    const auto pts = sample_points(dom, params);
    std::vector<PointResult> results(pts.size());
    const auto count = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        const Point& pt = pts[static_cast<std::size_t>(i)];
        PointResult pr{pt, std::numeric_limits<double>::infinity(), "ok"};
        try {
            const Plane f = eval_solution(spec, pt);
            const std::complex<double> base = eval_complex_baseline(baseline, xi, p, params, pt);
            const double ab = static_cast<double>(spec.alpha + spec.beta);
            const std::complex<double> expected = spec.is_log() ? base + ab * std::log(k) : std::pow(k, ab) * base;
            const std::complex<double> got = f.to_complex();
            pr.rel_residual = std::abs(got - expected) / std::max(std::abs(expected), 1e-300);
            pr.status = pr.rel_residual < threshold ? "ok" : "fail";
        } catch (const Error& e) {
            pr.status = std::string(to_string(e.code()));
        }
        results[static_cast<std::size_t>(i)] = pr;
    }
    return summarize(summary_text(spec), "Reduction", EvalMode::AD, threshold, std::move(results));
}

DirichletReport dirichlet_check(const SolutionSpec& spec) {
    DirichletReport r;
    r.spec_summary = summary_text(spec);
    r.predicted_exponent = spec.is_log() ? 0.0 : static_cast<double>(spec.alpha + spec.beta);
    const int n = spec.grushin.n;
    switch (spec.family) {
        case FamilyTag::DivFormPower:
        case FamilyTag::DivFormLog:
            r.bound = dirichlet_bound_divform(n);
            break;
        case FamilyTag::DriftForm:
            r.bound = dirichlet_bound_driftform(n, spec.drift.xi);
            break;
        default:
            r.explanation = "no Dirichlet statement for " + std::string(to_string(spec.family));
            return r;
    }
    if (!(spec.p > r.bound)) {
        std::ostringstream os;
        os << "skipped: p = " << spec.p << " is not above the bound " << r.bound;
        r.explanation = os.str();
        return r;
    }
    r.applicable = true;
    r.monotone = true;
    r.decayed = true;
    const Point origin{spec.grushin.a, spec.grushin.b};
    for (int k = 0; k < 8; ++k) {
        RayTrace ray;
        ray.angle = std::numbers::pi / 8 + k * std::numbers::pi / 4;
        for (int e = 0; e <= 8; ++e) {
            const double rad = std::pow(10.0, -e);
            const Point pt{origin.y1 + rad * std::cos(ray.angle), origin.y2 + rad * std::sin(ray.angle)};
            ray.radii.push_back(rad);
            ray.values.push_back(abs(eval_solution(spec, pt)));
        }
        ray.monotone = std::adjacent_find(ray.values.begin(), ray.values.end(), std::less_equal<>()) == ray.values.end();
        ray.decay_ratio = ray.values.back() / ray.values.front();
        r.monotone = r.monotone && ray.monotone;
        r.decayed = r.decayed && ray.decay_ratio < r.decay_threshold;
        r.rays.push_back(std::move(ray));
    }
    r.passed = r.monotone && r.decayed;
    std::ostringstream os;
    os << "p = " << spec.p << " above bound " << r.bound << "; |f| ~ r^" << r.predicted_exponent;
    r.explanation = os.str();
    return r;
}

json dirichlet_to_json(const DirichletReport& r) {
    json rays = json::array();
    for (const auto& ray : r.rays) {
        rays.push_back({{"angle", ray.angle}, {"radii", ray.radii}, {"values", ray.values},
                        {"monotone", ray.monotone}, {"decay_ratio", ray.decay_ratio}});
    }
    return {
        {"spec", json::parse(r.spec_summary)},
        {"applicable", r.applicable},
        {"bound", number_or_null(r.bound)},
        {"explanation", r.explanation},
        {"predicted_exponent", r.predicted_exponent},
        {"decay_threshold", r.decay_threshold},
        {"monotone", r.monotone},
        {"decayed", r.decayed},
        {"passed", r.passed},
        {"rays", rays},
    };
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t m = std::min(x.size(), y.size());
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double dm = static_cast<double>(m);
    return (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
}

ConvergenceReport convergence_study(const SolutionSpec& spec, OperatorTag op, const DomainSpec& dom,
                                    const std::vector<double>& steps) {
    ConvergenceReport r;
    r.spec_summary = summary_text(spec);
    r.steps = steps;
    const auto pts = sample_points(dom, spec.grushin);
    const FdField field = solution_fd_field(spec);
    const OperatorParams params = operator_params(spec);
    const Point origin{spec.grushin.a, spec.grushin.b};
    for (double h0 : steps) {
        std::vector<double> rel(pts.size(), std::numeric_limits<double>::infinity());
        const auto count = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < count; ++i) {
            const Point& pt = pts[static_cast<std::size_t>(i)];
            try {
                const double h = h0 * std::max({1.0, std::abs(pt.y1 - origin.y1), std::abs(pt.y2 - origin.y2)});
                rel[static_cast<std::size_t>(i)] = apply_operator(op, fd_central(field, pt, h), pt, params).relative();
            } catch (const Error&) {
            }
        }
        std::vector<double> finite;
        for (double v : rel) {
            if (std::isfinite(v)) finite.push_back(v);
        }
        if (finite.empty()) throw Error(ErrorCode::StencilInvalid, "no point admits the finite-difference stencil");
        const auto mid = finite.begin() + static_cast<std::ptrdiff_t>(finite.size() / 2);
        std::nth_element(finite.begin(), mid, finite.end());
        r.median_residuals.push_back(*mid);
    }
    r.order = loglog_slope(r.steps, r.median_residuals);
    r.passed = r.order >= 1.8 && r.order <= 2.2;
    return r;
}

json convergence_to_json(const ConvergenceReport& r) {
    return {
        {"spec", json::parse(r.spec_summary)},
        {"steps", r.steps},
        {"median_rel_residual", r.median_residuals},
        {"order", r.order},
        {"passed", r.passed},
    };
}

}  // namespace qgrushin
