#pragma once

namespace teich {

// Half-width w of the embedded collar around a geodesic of length ell:
// sinh(ell/2) sinh(w) = 1.  Strictly decreasing, diverges as ell -> 0.
double collar_width(double ell);

// Orthogeodesic arc between two distinct cuffs of a pair of pants with
// cuff lengths (lbeta1, lbeta2) and third cuff lgamma:
//
//   cosh(l_arc) = (cosh(lg/2) + cosh(lb1/2) cosh(lb2/2))
//                 / (sinh(lb1/2) sinh(lb2/2))
double pants_arc_two_cuffs(double lgamma, double lbeta1, double lbeta2);

// Orthogeodesic arc from the cuff lbeta back to itself, separating the
// other two cuffs (lgamma1, lgamma2):
//
//   cosh^2(l_arc/2) = (-1 + ch^2(lb/2) + ch^2(lg1/2) + ch^2(lg2/2)
//                      + 2 ch(lb/2) ch(lg1/2) ch(lg2/2)) / sh^2(lb/2)
double pants_arc_one_cuff(double lbeta, double lgamma1, double lgamma2);

// Side L of the geodesic quadrilateral with opposite side ell and two
// sides a, b meeting both at right angles:
//
//        a |         | b
//          +---ell---+
//
//   cosh(L) = -sinh(a) sinh(b) + cosh(a) cosh(b) cosh(ell)
double quad_side(double a, double b, double ell);

struct QuadConfig {
    double a = 0, b = 0, ell = 1;
};

} // namespace teich
