#include "qgrushin/operators.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qgrushin/error.hpp"

namespace qgrushin {

namespace {

constexpr double kFloor = 1e-280;

// First and second horizontal derivatives assembled from partials.
template <typename T>
struct Horizontal {
    using V = PlaneValue<T>;
    T k, kp;             // c tⁿ and c n t^{n−1}
    V y1f, y2f;
    V d1_y1f, d2_y1f;    // ∂₁, ∂₂ of Y₁f
    V d1_y2f, d2_y2f;    // ∂₁, ∂₂ of Y₂f
};

template <typename T>
Horizontal<T> horizontal(const Jet2T<T>& j, const Point& pt, const GrushinParams& g) {
    const T t = static_cast<T>(pt.y1) - static_cast<T>(g.a);
    const T c = static_cast<T>(g.c);
    const T k = c * ipow(t, g.n);
    const T kp = c * static_cast<T>(g.n) * ipow(t, g.n - 1);
    return {k, kp, j.d1, k * j.d2, j.d11, j.d12, kp * j.d2 + k * j.d12, k * j.d22};
}

// ∂(v·conj v) = 2 Re(conj(v)·∂v); the result is real.
template <typename T>
T d_norm(const PlaneValue<T>& v, const PlaneValue<T>& dv) {
    return 2 * (conj(v) * dv).u;
}

// Horizontal derivatives of a squared norm v₁·conj v₁ + v₂·conj v₂, kept as the
// two per-component products. They cancel against each other near y₂ = b, so
// the operators expose them as separate additive terms.
template <typename T>
struct NormData {
    T value;
    std::array<T, 2> y1, y2, d2;  // Y₁, Y₂ and ∂₂ of the norm, per component
    std::array<T, 2> y1_mag, y2_mag, d2_mag;  // 2|v||Y_s v| bounding each component

    T Y1() const { return y1[0] + y1[1]; }
    T Y2() const { return y2[0] + y2[1]; }
    T D2() const { return d2[0] + d2[1]; }
};

template <typename T, typename V = PlaneValue<T>>
NormData<T> norm_data(T k, const V& v1, const V& v2, const V& d1v1, const V& d2v1, const V& d1v2, const V& d2v2) {
    NormData<T> n;
    n.value = (v1 * conj(v1) + v2 * conj(v2)).u;
    n.y1 = {d_norm(v1, d1v1), d_norm(v2, d1v2)};
    n.d2 = {d_norm(v1, d2v1), d_norm(v2, d2v2)};
    n.y2 = {k * n.d2[0], k * n.d2[1]};
    n.y1_mag = {2 * abs(v1) * abs(d1v1), 2 * abs(v2) * abs(d1v2)};
    n.d2_mag = {2 * abs(v1) * abs(d2v1), 2 * abs(v2) * abs(d2v2)};
    n.y2_mag = {std::abs(k) * n.d2_mag[0], std::abs(k) * n.d2_mag[1]};
    return n;
}

// The same data with every component replaced by its bound, so that term
// builders applied to it give the magnitudes of the underlying products.
template <typename T>
NormData<T> magnitudes(NormData<T> n) {
    n.y1 = n.y1_mag;
    n.y2 = n.y2_mag;
    n.d2 = n.d2_mag;
    return n;
}

template <typename T>
NormData<T> grad_norm(const Horizontal<T>& h) {
    return norm_data<T>(h.k, h.y1f, h.y2f, h.d1_y1f, h.d2_y1f, h.d1_y2f, h.d2_y2f);
}

template <typename T>
struct UpsilonData {
    PlaneValue<T> u1, u2, y1u1, y2u2;
    NormData<T> M;
};

template <typename T>
UpsilonData<T> upsilon(const Horizontal<T>& h, T xi) {
    const PlaneValue<T> q{T(0), xi};
    const auto u1 = h.y1f + q * h.y2f;
    const auto u2 = h.y2f - q * h.y1f;
    const auto d1u1 = h.d1_y1f + q * h.d1_y2f, d2u1 = h.d2_y1f + q * h.d2_y2f;
    const auto d1u2 = h.d1_y2f - q * h.d1_y1f, d2u2 = h.d2_y2f - q * h.d2_y1f;
    return {u1, u2, d1u1, h.k * d2u2, norm_data<T>(h.k, u1, u2, d1u1, d2u1, d1u2, d2u2)};
}

template <typename T>
using Terms = std::vector<PlaneValue<T>>;

// Σ_s Y_s‖v‖² v_s expanded into four products, each scaled by w.
template <typename T>
Terms<T> norm_flux_terms(const NormData<T>& n, const PlaneValue<T>& v1, const PlaneValue<T>& v2, T w) {
    return {w * n.y1[0] * v1, w * n.y1[1] * v1, w * n.y2[0] * v2, w * n.y2[1] * v2};
}

template <typename T>
OperatorResult assemble(const Terms<T>& terms, std::size_t split) {
    PlaneValue<T> first, second;
    OperatorResult r;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        (i < split ? first : second) += terms[i];
        r.terms.emplace_back(terms[i]);
    }
    r.first = Plane(first);
    r.second = Plane(second);
    r.value = Plane(first + second);
    return r;
}

template <typename T>
void require_positive(T v, ErrorCode code, const char* what) {
    if (!(v > 0) || !std::isfinite(v)) throw Error(code, what);
}

template <typename T>
Terms<T> p_laplacian_terms(const Horizontal<T>& h, const NormData<T>& n, T p) {
    require_positive(n.value, ErrorCode::DegenerateGradient, "horizontal gradient vanishes");
    const T w4 = std::pow(n.value, (p - 4) / 2);
    const T w2 = w4 * n.value;
    Terms<T> terms = norm_flux_terms(n, h.y1f, h.y2f, (p - 2) / 2 * w4);
    terms.push_back(w2 * h.d1_y1f);
    terms.push_back(w2 * h.k * h.d2_y2f);
    return terms;
}

template <typename T>
Terms<T> divform_reduced_terms(const UpsilonData<T>& u, T p) {
    require_positive(u.M.value, ErrorCode::DegenerateUpsilon, "Upsilon vanishes");
    Terms<T> terms = norm_flux_terms(u.M, u.u1, u.u2, (p - 2) / 2);
    terms.push_back(u.M.value * u.y1u1);
    terms.push_back(u.M.value * u.y2u2);
    return terms;
}

// Δ_p f followed by Q·c n t^{n−1}·((p−2)/2 N^{(p−4)/2} ∂₂N f + N^{(p−2)/2} ∂₂f).
template <typename T>
Terms<T> driftform_terms(const Jet2T<T>& jet, const Horizontal<T>& h, const NormData<T>& n, T p, T xi) {
    Terms<T> terms = p_laplacian_terms(h, n, p);
    const PlaneValue<T> qk = PlaneValue<T>{T(0), xi} * h.kp;
    const T w4 = std::pow(n.value, (p - 4) / 2);
    for (T part : n.d2) terms.push_back(qk * ((p - 2) / 2 * w4 * part) * jet.value);
    terms.push_back(qk * (w4 * n.value) * jet.d2);
    return terms;
}

template <typename T>
Terms<T> driftform_infinity_terms(const Jet2T<T>& jet, const Horizontal<T>& h, const NormData<T>& n, T xi) {
    Terms<T> terms = norm_flux_terms(n, h.y1f, h.y2f, T(1));
    const PlaneValue<T> qk = PlaneValue<T>{T(0), xi} * h.kp;
    for (T part : n.d2) terms.push_back(qk * part * jet.value);
    return terms;
}

}  // namespace

double OperatorResult::scale() const {
    double s = 0.0;
    for (const auto& t : terms) s += abs(t);
    return s;
}

double OperatorResult::relative() const { return abs(value) / std::max(scale(), kFloor); }

std::string_view to_string(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::PLaplace: return "PLaplace";
        case OperatorTag::MGDrift: return "MGDrift";
        case OperatorTag::DivFormFull: return "DivFormFull";
        case OperatorTag::DivFormReduced: return "DivFormReduced";
        case OperatorTag::DriftFormFull: return "DriftFormFull";
        case OperatorTag::DivFormInfinity: return "DivFormInfinity";
        case OperatorTag::DriftFormInfinity: return "DriftFormInfinity";
        case OperatorTag::InfinityLaplace: return "InfinityLaplace";
    }
    return "?";
}

OperatorTag operator_from_string(std::string_view name) {
    for (auto t : {OperatorTag::PLaplace, OperatorTag::MGDrift, OperatorTag::DivFormFull, OperatorTag::DivFormReduced,
                   OperatorTag::DriftFormFull, OperatorTag::DivFormInfinity, OperatorTag::DriftFormInfinity,
                   OperatorTag::InfinityLaplace}) {
        if (to_string(t) == name) return t;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operator " + std::string(name));
}

template <typename T>
OperatorResult p_laplacian(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g, double p) {
    const auto h = horizontal(jet, pt, g);
    return assemble(p_laplacian_terms(h, grad_norm(h), static_cast<T>(p)), 4);
}

template <typename T>
OperatorResult mg_drift(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g, double L) {
    const auto h = horizontal(jet, pt, g);
    const PlaneValue<T> q{T(0), static_cast<T>(L)};
    return assemble(Terms<T>{h.d1_y1f, h.k * h.d2_y2f, q * (h.kp * jet.d2)}, 2);
}

template <typename T>
OperatorResult divform_reduced(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    const auto h = horizontal(jet, pt, params.grushin);
    return assemble(divform_reduced_terms(upsilon(h, static_cast<T>(params.xi)), static_cast<T>(params.p)), 4);
}

template <typename T>
OperatorResult divform_full(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    const auto h = horizontal(jet, pt, params.grushin);
    const auto u = upsilon(h, static_cast<T>(params.xi));
    Terms<T> terms = divform_reduced_terms(u, static_cast<T>(params.p));
    const T w = std::pow(u.M.value, (static_cast<T>(params.p) - 4) / 2);
    for (auto& t : terms) t = w * t;
    return assemble(terms, 4);
}

template <typename T>
OperatorResult driftform_operator(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    const auto h = horizontal(jet, pt, params.grushin);
    // first = Δ_p f (six terms), second = the drift term
    return assemble(driftform_terms(jet, h, grad_norm(h), static_cast<T>(params.p), static_cast<T>(params.xi)), 6);
}

template <typename T>
OperatorResult divform_infinity(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    const auto h = horizontal(jet, pt, params.grushin);
    const auto u = upsilon(h, static_cast<T>(params.xi));
    // first = Y₁‖Υ‖²Υ₁, second = Y₂‖Υ‖²Υ₂
    return assemble(norm_flux_terms(u.M, u.u1, u.u2, T(1)), 2);
}

template <typename T>
OperatorResult infinity_laplacian(const Jet2T<T>& jet, const Point& pt, const GrushinParams& g) {
    const auto h = horizontal(jet, pt, g);
    return assemble(norm_flux_terms(grad_norm(h), h.y1f, h.y2f, T(1)), 4);
}

template <typename T>
OperatorResult driftform_infinity(const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    const auto h = horizontal(jet, pt, params.grushin);
    return assemble(driftform_infinity_terms(jet, h, grad_norm(h), static_cast<T>(params.xi)), 4);
}

template <typename T>
OperatorResult apply_operator(OperatorTag op, const Jet2T<T>& jet, const Point& pt, const OperatorParams& params) {
    switch (op) {
        case OperatorTag::PLaplace: return p_laplacian(jet, pt, params.grushin, params.p);
        case OperatorTag::MGDrift: return mg_drift(jet, pt, params.grushin, params.xi);
        case OperatorTag::DivFormFull: return divform_full(jet, pt, params);
        case OperatorTag::DivFormReduced: return divform_reduced(jet, pt, params);
        case OperatorTag::DriftFormFull: return driftform_operator(jet, pt, params);
        case OperatorTag::DivFormInfinity: return divform_infinity(jet, pt, params);
        case OperatorTag::DriftFormInfinity: return driftform_infinity(jet, pt, params);
        case OperatorTag::InfinityLaplace: return infinity_laplacian(jet, pt, params.grushin);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operator");
}

OperatorTag default_operator(FamilyTag family) {
    switch (family) {
        case FamilyTag::DivFormPower:
        case FamilyTag::DivFormLog:
        case FamilyTag::BaselineChildersDiv:
            return OperatorTag::DivFormReduced;
        case FamilyTag::DriftForm:
        case FamilyTag::BaselineBBDrift:
            return OperatorTag::DriftFormFull;
        case FamilyTag::DivFormInfinity: return OperatorTag::DivFormInfinity;
        case FamilyTag::DriftFormInfinity: return OperatorTag::DriftFormInfinity;
        case FamilyTag::BaselinePsi: return OperatorTag::PLaplace;
        case FamilyTag::BaselineMG: return OperatorTag::MGDrift;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

bool compatible(FamilyTag family, OperatorTag op) {
    const OperatorTag d = default_operator(family);
    if (op == d) return true;
    if (d == OperatorTag::DivFormReduced) return op == OperatorTag::DivFormFull;
    return false;
}

OperatorParams operator_params(const SolutionSpec& spec) { return {spec.grushin, spec.p, spec.drift.xi}; }

namespace {

template <typename T>
Plane abs_sum(const Terms<T>& terms, std::size_t from, std::size_t to) {
    T s = 0;
    for (std::size_t i = from; i < to; ++i) s += abs(terms[i]);
    return Plane(static_cast<double>(s));
}

template <typename T>
Plane abs_parts(const std::array<T, 2>& parts) {
    return Plane(static_cast<double>(std::abs(parts[0]) + std::abs(parts[1])));
}

template <typename T>
Plane mag(const PlaneValue<T>& z) { return Plane(static_cast<double>(abs(z))); }

template <typename T>
Plane real(T x) { return Plane(static_cast<double>(x)); }

template <typename T>
Plane sum(const Terms<T>& terms, std::size_t from, std::size_t to) {
    PlaneValue<T> s;
    for (std::size_t i = from; i < to; ++i) s += terms[i];
    return Plane(s);
}

}  // namespace

template <typename T>
JetRecord jet_record(const SolutionSpec& spec, const Jet2T<T>& jet, const Point& pt) {
    const auto h = horizontal(jet, pt, spec.grushin);
    const auto n = grad_norm(h);
    const T p = static_cast<T>(spec.p);
    const T xi = static_cast<T>(spec.drift.xi);
    JetRecord r;
    OracleRecord& v = r.value;
    OracleRecord& sc = r.scale;
    v.y1f = Plane(h.y1f);
    v.y2f = Plane(h.y2f);
    v.y1f_conj = conj(v.y1f);
    v.y2f_conj = conj(v.y2f);
    v.grad_norm_sq = real(n.value);
    sc.y1f = sc.y1f_conj = mag(h.y1f);
    sc.y2f = sc.y2f_conj = mag(h.y2f);
    sc.grad_norm_sq = real(n.value);

    const bool div = spec.family == FamilyTag::DivFormPower || spec.family == FamilyTag::BaselineChildersDiv ||
                     spec.family == FamilyTag::DivFormLog || spec.family == FamilyTag::DivFormInfinity;
    if (div) {
        const auto u = upsilon(h, xi);
        v.upsilon1 = Plane(u.u1);
        v.upsilon2 = Plane(u.u2);
        v.upsilon_norm_sq = real(u.M.value);
        v.y1_upsilon_norm_sq = real(u.M.Y1());
        v.y2_upsilon_norm_sq = real(u.M.Y2());
        v.div_upsilon = Plane(u.y1u1 + u.y2u2);
        sc.upsilon1 = mag(u.u1);
        sc.upsilon2 = mag(u.u2);
        sc.upsilon_norm_sq = real(u.M.value);
        sc.y1_upsilon_norm_sq = abs_parts(u.M.y1_mag);
        sc.y2_upsilon_norm_sq = abs_parts(u.M.y2_mag);
        sc.div_upsilon = real(abs(u.y1u1) + abs(u.y2u2));
        const Terms<T> terms =
            spec.is_infinity() ? norm_flux_terms(u.M, u.u1, u.u2, T(1)) : divform_reduced_terms(u, p);
        const std::size_t split = spec.is_infinity() ? 2 : 4;
        v.lambda_half_1 = sum(terms, 0, split);
        v.lambda_half_2 = sum(terms, split, terms.size());
        auto um = u;
        um.M = magnitudes(u.M);
        const Terms<T> bounds =
            spec.is_infinity() ? norm_flux_terms(um.M, u.u1, u.u2, T(1)) : divform_reduced_terms(um, p);
        sc.lambda_half_1 = abs_sum(bounds, 0, split);
        sc.lambda_half_2 = abs_sum(bounds, split, bounds.size());
        return r;
    }

    const PlaneValue<T> y1y1 = h.d1_y1f, y2y2 = h.k * h.d2_y2f;
    v.y1y1f = Plane(y1y1);
    v.y2y2f = Plane(y2y2);
    v.y1_grad_norm_sq = real(n.Y1());
    v.y2_grad_norm_sq = real(n.Y2());
    sc.y1y1f = mag(y1y1);
    sc.y2y2f = mag(y2y2);
    sc.y1_grad_norm_sq = abs_parts(n.y1_mag);
    sc.y2_grad_norm_sq = abs_parts(n.y2_mag);
    const Terms<T> flux = norm_flux_terms(n, h.y1f, h.y2f, T(1));
    v.sum_grad_terms = sum(flux, 0, flux.size());
    const NormData<T> nm = magnitudes(n);
    sc.sum_grad_terms = abs_sum(norm_flux_terms(nm, h.y1f, h.y2f, T(1)), 0, flux.size());
    v.norm_laplacian = Plane(n.value * (y1y1 + y2y2));
    sc.norm_laplacian = real(n.value * (abs(y1y1) + abs(y2y2)));
    const Terms<T> terms = spec.is_infinity() ? driftform_infinity_terms(jet, h, n, xi) : driftform_terms(jet, h, n, p, xi);
    const std::size_t split = spec.is_infinity() ? 4 : 6;
    v.laplace_part = sum(terms, 0, split);
    v.drift_part = sum(terms, split, terms.size());
    const Terms<T> bounds =
        spec.is_infinity() ? driftform_infinity_terms(jet, h, nm, xi) : driftform_terms(jet, h, nm, p, xi);
    sc.laplace_part = abs_sum(bounds, 0, split);
    sc.drift_part = abs_sum(bounds, split, bounds.size());
    return r;
}

#define QGRUSHIN_INSTANTIATE(T)                                                                                  \
    template OperatorResult apply_operator<T>(OperatorTag, const Jet2T<T>&, const Point&, const OperatorParams&); \
    template OperatorResult p_laplacian<T>(const Jet2T<T>&, const Point&, const GrushinParams&, double);         \
    template OperatorResult mg_drift<T>(const Jet2T<T>&, const Point&, const GrushinParams&, double);            \
    template OperatorResult divform_reduced<T>(const Jet2T<T>&, const Point&, const OperatorParams&);            \
    template OperatorResult divform_full<T>(const Jet2T<T>&, const Point&, const OperatorParams&);               \
    template OperatorResult driftform_operator<T>(const Jet2T<T>&, const Point&, const OperatorParams&);         \
    template OperatorResult divform_infinity<T>(const Jet2T<T>&, const Point&, const OperatorParams&);           \
    template OperatorResult driftform_infinity<T>(const Jet2T<T>&, const Point&, const OperatorParams&);         \
    template OperatorResult infinity_laplacian<T>(const Jet2T<T>&, const Point&, const GrushinParams&);          \
    template JetRecord jet_record<T>(const SolutionSpec&, const Jet2T<T>&, const Point&);

QGRUSHIN_INSTANTIATE(double)
QGRUSHIN_INSTANTIATE(long double)

#undef QGRUSHIN_INSTANTIATE

}  // namespace qgrushin
