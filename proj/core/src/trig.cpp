#include "teich/trig.hpp"

#include <cmath>
#include <string>

#include "teich/errors.hpp"
#include "teich/numeric.hpp"

namespace teich {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) raise(ErrorKind::Domain, std::string(name) + " must be positive");
}

} // namespace

double collar_width(double ell) {
    require_positive(ell, "ell");
    return std::asinh(1.0 / std::sinh(ell / 2.0));
}

double pants_arc_two_cuffs(double lgamma, double lbeta1, double lbeta2) {
    require_positive(lgamma, "lgamma");
    require_positive(lbeta1, "lbeta1");
    require_positive(lbeta2, "lbeta2");
    double num = std::cosh(lgamma / 2.0) + std::cosh(lbeta1 / 2.0) * std::cosh(lbeta2 / 2.0);
    double den = std::sinh(lbeta1 / 2.0) * std::sinh(lbeta2 / 2.0);
    return acosh_stable(num / den);
}

double pants_arc_one_cuff(double lbeta, double lgamma1, double lgamma2) {
    require_positive(lbeta, "lbeta");
    require_positive(lgamma1, "lgamma1");
    require_positive(lgamma2, "lgamma2");
    double cb = std::cosh(lbeta / 2.0);
    double c1 = std::cosh(lgamma1 / 2.0);
    double c2 = std::cosh(lgamma2 / 2.0);
    double sb = std::sinh(lbeta / 2.0);
    double num = -1.0 + cb * cb + c1 * c1 + c2 * c2 + 2.0 * cb * c1 * c2;
    return 2.0 * acosh_stable(std::sqrt(num) / sb);
}

double quad_side(double a, double b, double ell) {
    if (a < 0.0 || b < 0.0) raise(ErrorKind::Domain, "quad sides a, b must be >= 0");
    require_positive(ell, "ell");
    double v = -std::sinh(a) * std::sinh(b) + std::cosh(a) * std::cosh(b) * std::cosh(ell);
    if (v < 1.0 - 1e-12)
        raise(ErrorKind::Degenerate, "quadrilateral argument " + std::to_string(v) + " below 1");
    return acosh_stable(v);
}

} // namespace teich
