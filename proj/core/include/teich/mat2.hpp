#pragma once

#include <array>
#include <string>

namespace teich {

// Unit-determinant 2x2 real matrix, the carrier for holonomy elements.
// M and -M represent the same isometry of the upper half-plane; every
// consumer goes through |trace|, so the lift sign is never load-bearing.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1; // [[a, b], [c, d]]

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    // Validating constructor: rejects |det - 1| > 1e-9, rescales the rest
    // of the drift away.
    static Mat2 sl2(double a, double b, double c, double d);

    static Mat2 identity() { return {}; }
    // diag(e^{t/2}, e^{-t/2}): translation by t along the imaginary axis.
    static Mat2 translation(double t);
    // z -> -1/z, the axis-reversing flip fixing i.
    static Mat2 flip() { return {0, -1, 1, 0}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    double max_abs() const;
    // divide entries by sqrt(|det|), restoring det = +-1
    Mat2 det_normalized() const;

    bool approx_equal(const Mat2& o, double tol) const;
    // equality in PSL(2,R): min over the sign ambiguity
    bool approx_equal_projective(const Mat2& o, double tol) const;

    std::string str() const;
};

// 2 arccosh(|tr M|/2).  Zero exactly on the parabolic band
// ||tr| - 2| <= 1e-12; Elliptic error below it.
double translation_length(const Mat2& m);

// translation length from log|trace|, for traces far beyond double range
double translation_length_from_log_trace(double log_abs_trace);

} // namespace teich
