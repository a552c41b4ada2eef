#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace teich {

// arccosh(1+t) = log(1 + t + sqrt(t(t+2))), stable down to t = 0.
// Arguments slightly below 1 (rounding noise) are clamped to 1.
double acosh_stable(double x);

// arccosh(e^lx) for lx = log(x), x >= 1.  Valid far beyond the range
// where e^lx itself is representable.
double acosh_of_log(double lx);

// log(2 cosh(t)) and log(2 sinh(t)) (t > 0), overflow-free.
double log_2cosh(double t);
double log_2sinh(double t);

// log(e^a + e^b) and log|e^a - e^b|, the usual log-sum-exp forms.
double log_add_exp(double a, double b);
double log_sub_exp(double a, double b);

// Signed number stored as sign * e^lg.  Traces of high-power curve
// classes overflow doubles long before their lengths stop being
// interesting, so the trace recursion runs on these.
struct LogNum {
    double lg = -std::numeric_limits<double>::infinity();
    int sign = 0; // -1, 0, +1

    static LogNum zero() { return {}; }
    static LogNum from_double(double v);
    static LogNum from_log(double lg, int sign) { return {lg, sign}; }

    double to_double() const; // may overflow to +-inf for large lg
    bool is_zero() const { return sign == 0; }

    LogNum operator*(const LogNum& o) const;
    LogNum operator+(const LogNum& o) const;
    LogNum operator-(const LogNum& o) const;
    LogNum operator-() const { return {lg, -sign}; }
};

} // namespace teich
