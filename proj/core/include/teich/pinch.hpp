#pragma once

#include <string>
#include <vector>

#include "teich/estimate.hpp"
#include "teich/torus.hpp"

namespace teich {

// Forget the boundary coordinate (land in the cusped stratum), and its
// one-sided inverse fixing a boundary length.
FNTorus psi(const FNTorus& x);
FNTorus psi_inv(const FNTorus& x0, double boundary);

// One pinch level: arc-metric estimate at boundary L vs the Thurston
// estimate at the cusp, and their gap.
struct SweepRow {
    double boundary;
    double d_arc;
    double d_th;
    double gap; // |d_arc - d_th|
    double signed_diff; // d_arc - d_th
    std::string witness_arc;
    std::string witness_th;
};

// For each level L: d_arc = dhat over farey(n) plus its dual arcs on the
// boundary-L lifts of (x0, y0); d_th = dhat over farey(n) at the cusp.
std::vector<SweepRow> pinch_sweep(const FNTorus& x0, const FNTorus& y0,
                                  const std::vector<double>& levels, int farey_level);

inline const std::vector<double>& default_pinch_levels() {
    static const std::vector<double> levels{1.0, 0.5, 0.25, 0.1, 0.05, 0.01};
    return levels;
}
inline constexpr int default_farey_level = 8;

// Defect of the two-cuff arc formula against its small-boundary limit:
//   (arc(lgamma, L, L) - |log sinh^2(L/2)|) - (log 2 + log(cosh(lgamma/2) + 1))
// Tends to 0 as L -> 0 at fixed lgamma.
double arc_residual(double lgamma, double boundary);

// Same residual against the constant term lgamma - log 2 instead of the
// exact limit constant; reported side by side by the CLI since the two
// normalizations disagree except for short lgamma.
double arc_residual_linear_const(double lgamma, double boundary);

struct QuadRatioCheck {
    double ratio;
    double bound;
    bool pass;
};

// L'/L <= 1.05 max(1, ell'/ell) regime check for the quadrilateral
// formula, meaningful for ell, ell' >= 10.
QuadRatioCheck quad_ratio_check(double a, double b, double ell, double a2, double b2, double ell2);

} // namespace teich
