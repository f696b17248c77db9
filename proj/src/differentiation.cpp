#include "qgrushin/differentiation.hpp"

#include <array>
#include <cmath>
#include <vector>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#endif

#include "qgrushin/error.hpp"
#include "qgrushin/solutions.hpp"

namespace qgrushin {

namespace {

using R = FdReal;
using JetF = std::array<PlaneF, 6>;  // value, d1, d2, d11, d12, d22

#if defined(__SIZEOF_FLOAT128__)
R r_log(R x) { return logq(x); }
R r_exp(R x) { return expq(x); }
R r_cos(R x) { return cosq(x); }
R r_sin(R x) { return sinq(x); }
R r_atan2(R y, R x) { return atan2q(y, x); }
R r_hypot(R x, R y) { return hypotq(x, y); }
#else
R r_log(R x) { return std::log(x); }
R r_exp(R x) { return std::exp(x); }
R r_cos(R x) { return std::cos(x); }
R r_sin(R x) { return std::sin(x); }
R r_atan2(R y, R x) { return std::atan2(y, x); }
R r_hypot(R x, R y) { return std::hypot(x, y); }
#endif

// Principal logarithm with the cut itself mapped to +π, as plane_log.
PlaneF log_f(const PlaneF& z) {
    if (is_zero(z)) throw Error(ErrorCode::ZeroBase, "logarithm of zero");
    return {r_log(r_hypot(z.u, z.v)), r_atan2(z.v == R(0) ? R(0) : z.v, z.u)};
}

PlaneF exp_f(const PlaneF& z) {
    const R m = r_exp(z.u);
    return {m * r_cos(z.v), m * r_sin(z.v)};
}

R ipow_f(R x, int k) {
    R r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

JetF central(const FdField& f, R x, R y, R h) {
    const PlaneF c = f.eval(x, y);
    const PlaneF xp = f.eval(x + h, y), xm = f.eval(x - h, y);
    const PlaneF yp = f.eval(x, y + h), ym = f.eval(x, y - h);
    const PlaneF pp = f.eval(x + h, y + h), pm = f.eval(x + h, y - h);
    const PlaneF mp = f.eval(x - h, y + h), mm = f.eval(x - h, y - h);
    const R h2 = h * h;
    return {
        c,
        (xp - xm) / (2 * h),
        (yp - ym) / (2 * h),
        (xp - R(2) * c + xm) / h2,
        (pp - pm - mp + mm) / (4 * h2),
        (yp - R(2) * c + ym) / h2,
    };
}

Jet2L to_jet(const JetF& j) {
    return {PlaneL(j[0]), PlaneL(j[1]), PlaneL(j[2]), PlaneL(j[3]), PlaneL(j[4]), PlaneL(j[5])};
}

R jet_dist(const JetF& a, const JetF& b) {
    R m = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        const PlaneF d = a[i] - b[i];
        m = std::max(m, r_hypot(d.u, d.v));
    }
    return m;
}

bool box_ok(const FdField& f, const Point& lo, const Point& hi) {
    if (f.admissible) return f.admissible(lo, hi);
    const bool inside = lo.y1 <= f.origin.y1 && f.origin.y1 <= hi.y1 && lo.y2 <= f.origin.y2 && f.origin.y2 <= hi.y2;
    return !inside;
}

}  // namespace

void FDConfig::validate() const {
    if (!(h0 > 0.0 && h0 <= 1e-2)) throw Error(ErrorCode::InvalidArgument, "h0 must satisfy 0 < h0 <= 1e-2");
    if (levels < 2 || levels > 4) throw Error(ErrorCode::InvalidArgument, "Richardson levels must be in [2, 4]");
}

Jet2L fd_central(const FdField& field, const Point& p, double h) {
    const Point lo{p.y1 - h, p.y2 - h}, hi{p.y1 + h, p.y2 + h};
    if (!box_ok(field, lo, hi)) throw Error(ErrorCode::StencilInvalid, "stencil box meets an excluded set");
    return to_jet(central(field, p.y1, p.y2, h));
}

FdResult fd_eval(const FdField& field, const Point& p, const FDConfig& cfg) {
    cfg.validate();
    const double scale = std::max({1.0, std::abs(p.y1 - field.origin.y1), std::abs(p.y2 - field.origin.y2)});
    const double h = cfg.h0 * scale;
    const Point lo{p.y1 - h, p.y2 - h}, hi{p.y1 + h, p.y2 + h};
    if (!box_ok(field, lo, hi)) throw Error(ErrorCode::StencilInvalid, "stencil box meets an excluded set");

    const int L = cfg.levels;
    std::vector<JetF> raw;
    raw.reserve(static_cast<std::size_t>(L) + 1);
    for (int k = 0; k <= L; ++k) raw.push_back(central(field, p.y1, p.y2, R(std::ldexp(h, -k))));

    // Richardson table: the error of the central stencil is even in h.
    std::vector<JetF> row = raw;
    for (int m = 1; m <= L; ++m) {
        const R w = R(std::ldexp(1.0, 2 * m));
        for (int k = L; k >= m; --k) {
            for (std::size_t i = 0; i < 6; ++i) row[k][i] = (w * row[k][i] - row[k - 1][i]) / (w - 1);
        }
    }

    FdResult out{to_jet(row[static_cast<std::size_t>(L)]), h, std::nullopt};
    const R d01 = jet_dist(raw[L - 2], raw[L - 1]);
    const R d12 = jet_dist(raw[L - 1], raw[L]);
    if (d12 > 0 && d01 > 0) {
        R mag = 0;
        for (std::size_t i = 1; i < 6; ++i) mag = std::max(mag, r_hypot(raw[L][i].u, raw[L][i].v));
        if (d12 > R(1e-15) * std::max(mag, R(1))) out.order = std::log2(static_cast<double>(d01 / d12));
    }
    return out;
}

FdField solution_fd_field(const SolutionSpec& spec) {
    FdField f;
    f.origin = {spec.grushin.a, spec.grushin.b};
    // solution_field over FdReal, with the transcendental steps done here
    // because std::complex has no quad-precision functions.
    const int n = spec.grushin.n;
    const R a = spec.grushin.a, b = spec.grushin.b, c = spec.grushin.c;
    const R alpha = spec.alpha, beta = spec.beta, scale = spec.drift.scale;
    const bool psi = spec.family == FamilyTag::BaselinePsi && spec.alpha == spec.beta;
    const bool is_log = spec.is_log();
    f.eval = [=](R y1, R y2) -> PlaneF {
        const R t = y1 - a, s = y2 - b;
        const R base = c * ipow_f(t, n + 1);
        const R axial = R(n + 1) * s;
        if (psi) {
            const R F = base * base + axial * axial;
            if (F == 0) throw Error(ErrorCode::ZeroBase, "power of zero");
            return is_log ? PlaneF(alpha * r_log(F)) : PlaneF(r_exp(alpha * r_log(F)));
        }
        const PlaneF g{scale * base, scale * axial};
        const PlaneF lg = log_f(g), lh = log_f(conj(g));
        const PlaneF e = alpha * lg + beta * lh;
        return is_log ? e : exp_f(e);
    };
    f.admissible = [spec](const Point& lo, const Point& hi) { return stencil_admissible(spec, lo, hi); };
    return f;
}

}  // namespace qgrushin
