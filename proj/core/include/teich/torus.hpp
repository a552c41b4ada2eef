#pragma once

#include <string>

#include "teich/mat2.hpp"
#include "teich/numeric.hpp"
#include "teich/slope.hpp"

namespace teich {

// Marked hyperbolic structure on the one-holed torus (boundary > 0) or
// once-punctured torus (boundary = 0), in Fenchel-Nielsen coordinates
// along the slope-1/0 curve.
struct FNTorus {
    double ell = 1.0;      // length of the 1/0 pants curve, > 0
    double twist = 0.0;    // twist along it, any real
    double boundary = 0.0; // boundary length, 0 means cusp

    FNTorus() = default;
    FNTorus(double ell_, double twist_, double boundary_);

    bool cusped() const { return boundary == 0.0; }
    std::string str() const;
    static FNTorus parse(const std::string& s); // "ell,twist,boundary"
};

// Essential boundary-to-boundary arc disjoint from its slope curve.
struct DualArc {
    Slope slope;
    std::string str() const { return "arc:" + slope.str(); }
};

// Holonomy representation: images of the standard pi_1 generators.
// With a = e^{ell/2}, x = 2 cosh(ell/2):
//   genA = diag(a, 1/a)
//   genB = diag(e^{tw/2}, e^{-tw/2}) [[p, w], [w, p]],
//   p = sqrt((x^2 - 2 + 2 cosh(L/2)) / (x^2 - 4)),  w = sqrt(p^2 - 1).
// The symmetric B block pins twist = 0 at the trace-minimal marking and
// makes genB(tw + ell) = genA genB(tw) an exact matrix identity.
struct TorusRep {
    Mat2 gen_a, gen_b;
    FNTorus point;
};

TorusRep build_rep(const FNTorus& x);

// Scaled left-to-right word product over two generators; survives words
// whose entries overflow doubles.  Letters: A, a = A^-1, B, b = B^-1.
struct ScaledMat2 {
    Mat2 m;
    double log_scale = 0.0;
    int letters = 0;

    void mul_right(const Mat2& g);
    double log_abs_trace() const;
};

ScaledMat2 evaluate_word(const Mat2& gen_a, const Mat2& gen_b, const std::string& word);
ScaledMat2 evaluate_word(const TorusRep& rep, const std::string& word);

// Traces of (A, B, AB) as exact-log quantities, twist included:
//   x = 2 cosh(ell/2),  y = 2 p cosh(tw/2),  z = 2 p cosh((ell + tw)/2).
struct TraceTriple {
    LogNum x, y, z;
};
TraceTriple trace_triple(const FNTorus& x);

// Trace of the slope curve by the Farey mediant recursion
//   t(r (+) s) = t(r) t(s) - t(r (-) s)
// walked along the Stern-Brocot path to the slope.
LogNum slope_trace(const TraceTriple& t, const Slope& s);

// Geodesic length of the slope curve.  Computed from the trace
// recursion; agrees with the evaluated cutting-sequence word (the
// reference route below) wherever that word is small enough to multiply
// out.
double curve_length(const FNTorus& x, const Slope& s);

// Reference route: translation_length(evaluate(build_rep(x), slope_word(s))).
double curve_length_via_word(const FNTorus& x, const Slope& s);

// Length of the dual arc: the pants neighborhood has the boundary as
// its one cuff and two copies of the slope curve, so this is
// pants_arc_one_cuff(boundary, c, c) with c the slope-curve length.
// CuspArc error when boundary = 0.
double dual_arc_length(const FNTorus& x, const DualArc& arc);

// Residuals of the defining trace conditions, for validation reports:
// |tr A| - 2cosh(ell/2), |tr [A,B]| - 2cosh(L/2), and the Markov-type
// relation x^2 + y^2 + z^2 - xyz - (2 - 2cosh(L/2)).
struct RepResiduals {
    double gen_a_trace;
    double commutator_trace;
    double markov;
    double max_abs() const;
};
RepResiduals rep_residuals(const TorusRep& rep);

} // namespace teich
