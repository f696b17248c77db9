#include "qgrushin/grushin.hpp"

#include <string>

namespace qgrushin {

void GrushinParams::validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be a positive integer, got " + std::to_string(n));
    if (c == 0.0) throw Error(ErrorCode::InvalidArgument, "c must be nonzero");
}

double y2_coefficient(const Point& p, const GrushinParams& g) {
    return g.c * ipow(p.y1 - g.a, g.n);
}

double bracket_coefficient(const Point& p, const GrushinParams& g) {
    return g.c * g.n * ipow(p.y1 - g.a, g.n - 1);
}

Plane apply_Y1(const Jet2& jet, const Point&, const GrushinParams&) { return jet.d1; }

Plane apply_Y2(const Jet2& jet, const Point& p, const GrushinParams& g) {
    return y2_coefficient(p, g) * jet.d2;
}

Plane apply_bracket(const Jet2& jet, const Point& p, const GrushinParams& g) {
    return bracket_coefficient(p, g) * jet.d2;
}

Plane horizontal_norm_sq(const Plane& v1, const Plane& v2) {
    return v1 * conj(v1) + v2 * conj(v2);
}

}  // namespace qgrushin
