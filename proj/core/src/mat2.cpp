#include "teich/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "teich/errors.hpp"
#include "teich/numeric.hpp"

namespace teich {

Mat2 Mat2::sl2(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(std::fabs(det - 1.0) <= 1e-9))
        raise(ErrorKind::BadInput, "matrix determinant " + std::to_string(det) + " is not 1");
    double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
}

Mat2 Mat2::translation(double t) {
    double e = std::exp(t / 2.0);
    return {e, 0, 0, 1.0 / e};
}

double Mat2::max_abs() const {
    return std::max(std::max(std::fabs(a), std::fabs(b)), std::max(std::fabs(c), std::fabs(d)));
}

Mat2 Mat2::det_normalized() const {
    double s = 1.0 / std::sqrt(std::fabs(det()));
    return {a * s, b * s, c * s, d * s};
}

bool Mat2::approx_equal(const Mat2& o, double tol) const {
    return std::fabs(a - o.a) <= tol && std::fabs(b - o.b) <= tol && std::fabs(c - o.c) <= tol &&
           std::fabs(d - o.d) <= tol;
}

bool Mat2::approx_equal_projective(const Mat2& o, double tol) const {
    return approx_equal(o, tol) || approx_equal({-o.a, -o.b, -o.c, -o.d}, tol);
}

std::string Mat2::str() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "[[%.6g, %.6g], [%.6g, %.6g]]", a, b, c, d);
    return buf;
}

double translation_length(const Mat2& m) {
    double t = std::fabs(m.trace());
    if (t < 2.0 - 1e-12)
        raise(ErrorKind::Elliptic, "|trace| = " + std::to_string(t) + " < 2, class is elliptic");
    if (t <= 2.0) return 0.0;
    return 2.0 * acosh_stable(t / 2.0);
}

double translation_length_from_log_trace(double log_abs_trace) {
    double l2 = std::log(2.0);
    if (log_abs_trace < std::log(2.0 - 1e-12))
        raise(ErrorKind::Elliptic, "|trace| < 2, class is elliptic");
    if (log_abs_trace <= l2) return 0.0;
    return 2.0 * acosh_of_log(log_abs_trace - l2);
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Elliptic: return "elliptic";
    case ErrorKind::Parabolic: return "parabolic";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::CuspArc: return "cusp-arc";
    case ErrorKind::EmptyFamily: return "empty-family";
    case ErrorKind::Assembly: return "assembly";
    case ErrorKind::PeriodicOrReducible: return "periodic-or-reducible";
    case ErrorKind::SearchDomain: return "search-domain";
    case ErrorKind::BadInput: return "bad-input";
    }
    return "error";
}

} // namespace teich
