#include "teich/pinch.hpp"

#include <cmath>

#include "teich/errors.hpp"
#include "teich/trig.hpp"

namespace teich {

FNTorus psi(const FNTorus& x) { return {x.ell, x.twist, 0.0}; }

FNTorus psi_inv(const FNTorus& x0, double boundary) {
    if (!x0.cusped()) raise(ErrorKind::Domain, "psi_inv expects a cusped point");
    if (!(boundary > 0.0)) raise(ErrorKind::Domain, "boundary length must be positive");
    return {x0.ell, x0.twist, boundary};
}

std::vector<SweepRow> pinch_sweep(const FNTorus& x0, const FNTorus& y0,
                                  const std::vector<double>& levels, int farey_level) {
    if (!x0.cusped() || !y0.cusped())
        raise(ErrorKind::Domain, "pinch sweep starts from cusped points");
    Family curves = farey_family(farey_level);
    Family curves_and_arcs = with_dual_arcs(curves);
    MetricEstimate th = dhat(x0, y0, curves);
    std::vector<SweepRow> rows;
    rows.reserve(levels.size());
    for (double level : levels) {
        MetricEstimate arc = dhat(psi_inv(x0, level), psi_inv(y0, level), curves_and_arcs);
        SweepRow row;
        row.boundary = level;
        row.d_arc = arc.value;
        row.d_th = th.value;
        row.gap = std::fabs(arc.value - th.value);
        row.signed_diff = arc.value - th.value;
        row.witness_arc = arc.witness;
        row.witness_th = th.witness;
        rows.push_back(row);
    }
    return rows;
}

double arc_residual(double lgamma, double boundary) {
    if (!(lgamma > 0.0) || !(boundary > 0.0))
        raise(ErrorKind::Domain, "arc_residual needs positive arguments");
    double sh = std::sinh(boundary / 2.0);
    double arc = pants_arc_two_cuffs(lgamma, boundary, boundary);
    return (arc - std::fabs(std::log(sh * sh))) - (std::log(2.0) + std::log(std::cosh(lgamma / 2.0) + 1.0));
}

double arc_residual_linear_const(double lgamma, double boundary) {
    if (!(lgamma > 0.0) || !(boundary > 0.0))
        raise(ErrorKind::Domain, "arc_residual needs positive arguments");
    double sh = std::sinh(boundary / 2.0);
    double arc = pants_arc_two_cuffs(lgamma, boundary, boundary);
    return (arc - std::fabs(std::log(sh * sh))) - (lgamma - std::log(2.0));
}

QuadRatioCheck quad_ratio_check(double a, double b, double ell, double a2, double b2, double ell2) {
    double num = quad_side(a2, b2, ell2);
    double den = quad_side(a, b, ell);
    QuadRatioCheck r;
    r.ratio = num / den;
    r.bound = 1.05 * std::max(1.0, ell2 / ell);
    r.pass = r.ratio <= r.bound;
    return r;
}

} // namespace teich
