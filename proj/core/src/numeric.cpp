#include "teich/numeric.hpp"

#include <algorithm>
#include <limits>

namespace teich {

double acosh_stable(double x) {
    double t = x - 1.0;
    if (t <= 0.0) return 0.0;
    if (x > 1e150) return std::log(2.0) + std::log(x); // correction < 1e-300
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double acosh_of_log(double lx) {
    if (lx <= 0.0) return 0.0;
    // beyond e^30 the defect log(2x) - acosh(x) is < 1e-26
    if (lx > 30.0) return lx + std::log(2.0);
    return acosh_stable(std::exp(lx));
}

double log_2cosh(double t) {
    t = std::fabs(t);
    return t + std::log1p(std::exp(-2.0 * t));
}

double log_2sinh(double t) {
    // t > 0; for small t use log(2t) + log(sinh t / t)
    if (t < 1e-4) return std::log(2.0 * t) + std::log1p(t * t / 6.0);
    return t + std::log1p(-std::exp(-2.0 * t));
}

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_sub_exp(double a, double b) {
    // log|e^a - e^b|; -inf when equal
    double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == lo) return -std::numeric_limits<double>::infinity();
    return hi + std::log1p(-std::exp(lo - hi));
}

LogNum LogNum::from_double(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
}

double LogNum::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(lg);
}

LogNum LogNum::operator*(const LogNum& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {lg + o.lg, sign * o.sign};
}

LogNum LogNum::operator+(const LogNum& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    if (sign == o.sign) return {log_add_exp(lg, o.lg), sign};
    if (lg == o.lg) return zero();
    double l = log_sub_exp(lg, o.lg);
    return {l, lg > o.lg ? sign : o.sign};
}

LogNum LogNum::operator-(const LogNum& o) const { return *this + (-o); }

} // namespace teich
