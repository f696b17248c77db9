#include "qgrushin/solutions.hpp"

#include <cmath>
#include <sstream>

#include "qgrushin/oracle.hpp"

namespace qgrushin {

GHPair eval_gh(const SolutionSpec& spec, const Point& p) {
    const auto& gp = spec.grushin;
    const double base = gp.c * ipow(p.y1 - gp.a, gp.n + 1);
    const double axial = (gp.n + 1) * (p.y2 - gp.b);
    const Plane g{spec.drift.scale * base, spec.drift.scale * axial};
    return {g, conj(g)};
}

bool has_branch_cut(const SolutionSpec& spec) {
    if (spec.family == FamilyTag::BaselinePsi && spec.alpha == spec.beta) return false;
    if (spec.is_log()) return true;
    return std::trunc(spec.alpha) != spec.alpha || std::trunc(spec.beta) != spec.beta;
}

void check_domain(const SolutionSpec& spec, const Point& p) {
    const auto& gp = spec.grushin;
    if (p.y1 == gp.a && p.y2 == gp.b) {
        std::ostringstream os;
        os << "(" << p.y1 << ", " << p.y2 << ") is the singular point";
        throw Error(ErrorCode::SingularPoint, os.str());
    }
    const auto [g, h] = eval_gh(spec, p);
    if (is_zero(g)) throw Error(ErrorCode::SingularPoint, "g vanishes at the evaluation point");
    if (has_branch_cut(spec) && on_branch_cut(g)) {
        std::ostringstream os;
        os << "g(" << p.y1 << ", " << p.y2 << ") lies on the negative real axis";
        throw Error(ErrorCode::BranchCut, os.str());
    }
}

Plane eval_solution(const SolutionSpec& spec, const Point& p) {
    check_domain(spec, p);
    return solution_field<double>(spec, Plane(p.y1), Plane(p.y2));
}

Jet2 eval_solution_jet(const SolutionSpec& spec, const Point& p, JetMode mode) {
    check_domain(spec, p);
    if (mode == JetMode::Oracle) return closed_form_jet(spec, p);
    return jet_eval([&spec](const Jet& y1, const Jet& y2) { return solution_field<double>(spec, y1, y2); }, p);
}

Jet2L eval_solution_jet_l(const SolutionSpec& spec, const Point& p, JetMode mode) {
    using JL = JetScalar<long double>;
    check_domain(spec, p);
    if (mode == JetMode::Oracle) return closed_form_jet_l(spec, p);
    return jet_eval<long double>(
        [&spec](const JL& y1, const JL& y2) { return solution_field<long double>(spec, y1, y2); }, p);
}

bool stencil_admissible(const SolutionSpec& spec, const Point& lo, const Point& hi) {
    const auto& gp = spec.grushin;
    const bool contains_origin = lo.y1 <= gp.a && gp.a <= hi.y1 && lo.y2 <= gp.b && gp.b <= hi.y2;
    if (contains_origin) return false;
    if (!has_branch_cut(spec)) return true;
    if (!(lo.y2 <= gp.b && gp.b <= hi.y2)) return true;
    // Does c(y₁−a)^{n+1} take a negative value somewhere on [lo.y1, hi.y1]?
    const bool even_power = (gp.n + 1) % 2 == 0;
    if (even_power) return !(gp.c < 0.0 && (lo.y1 != gp.a || hi.y1 != gp.a));
    if (gp.c > 0.0) return lo.y1 >= gp.a;
    return hi.y1 <= gp.a;
}

std::complex<double> eval_complex_baseline(FamilyTag family, double L, double p,
                                           const GrushinParams& gp, const Point& pt) {
    using C = std::complex<double>;
    const int n = gp.n;
    const double t = pt.y1 - gp.a;
    const C g{gp.c * std::pow(t, n + 1), (n + 1) * (pt.y2 - gp.b)};
    const C h = std::conj(g);
    switch (family) {
        case FamilyTag::BaselineChildersDiv: {
            if (std::abs(p - (n + 2)) <= 1e-12 * (n + 2)) {
                return (1.0 + L) * std::log(g) + (1.0 - L) * std::log(h);
            }
            const double k = (n + 2 - p) / ((1 - p) * (2 * n + 2));
            return std::pow(g, k * (1 + L)) * std::pow(h, k * (1 - L));
        }
        case FamilyTag::BaselineBBDrift: {
            const double a = (n + 2 - p - L * n * (1 - p)) / (2 * (n + 1) * (1 - p));
            const double b = (n + 2 - p + L * n * (1 - p)) / (2 * (n + 1) * (1 - p));
            return std::pow(g, a) * std::pow(h, b);
        }
        default:
            throw Error(ErrorCode::InvalidArgument,
                        std::string("no complex baseline for ") + std::string(to_string(family)));
    }
}

}  // namespace qgrushin
