#include "teich/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "teich/errors.hpp"
#include "teich/numeric.hpp"

namespace teich {

std::string BoundaryPoint::str() const {
    if (infinite) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

BoundaryPoint mobius_apply(const Mat2& m, const BoundaryPoint& p) {
    if (p.infinite) {
        if (m.c == 0.0) return BoundaryPoint::inf();
        return BoundaryPoint::at(m.a / m.c);
    }
    double den = m.c * p.x + m.d;
    if (den == 0.0) return BoundaryPoint::inf();
    return BoundaryPoint::at((m.a * p.x + m.b) / den);
}

Geodesic::Geodesic(BoundaryPoint p_, BoundaryPoint q_) : p(p_), q(q_) {
    if (p == q) raise(ErrorKind::Degenerate, "geodesic endpoints coincide at " + p.str());
}

bool Geodesic::shares_endpoint(const Geodesic& o) const {
    return p == o.p || p == o.q || q == o.p || q == o.q;
}

bool Geodesic::same_as(const Geodesic& o) const {
    return (p == o.p && q == o.q) || (p == o.q && q == o.p);
}

std::string Geodesic::str() const { return "(" + p.str() + ", " + q.str() + ")"; }

namespace {

void require_hyperbolic(const Mat2& m) {
    double t = std::fabs(m.trace());
    if (t < 2.0 - 1e-12) raise(ErrorKind::Elliptic, "no axis, |trace| < 2 for " + m.str());
    if (t <= 2.0 + 1e-12) raise(ErrorKind::Parabolic, "no axis, |trace| = 2 for " + m.str());
}

} // namespace

OrientedAxis oriented_axis(const Mat2& m_in) {
    require_hyperbolic(m_in);
    // normalize the lift so the trace is positive; the attracting fixed
    // point is then the eigenvector of the larger eigenvalue
    Mat2 m = m_in;
    if (m.trace() < 0) m = {-m.a, -m.b, -m.c, -m.d};
    double tr = m.trace();
    double s = std::sqrt(tr * tr - 4.0);
    if (m.c == 0.0) {
        BoundaryPoint finite = BoundaryPoint::at(m.b / (m.d - m.a));
        if (std::fabs(m.a) > std::fabs(m.d)) return {finite, BoundaryPoint::inf()};
        return {BoundaryPoint::inf(), finite};
    }
    BoundaryPoint att = BoundaryPoint::at((m.a - m.d + s) / (2.0 * m.c));
    BoundaryPoint rep = BoundaryPoint::at((m.a - m.d - s) / (2.0 * m.c));
    return {rep, att};
}

Geodesic axis_endpoints(const Mat2& m) {
    OrientedAxis ax = oriented_axis(m);
    return {ax.repelling, ax.attracting};
}

BoundaryPoint parabolic_fixed_point(const Mat2& m) {
    if (std::fabs(std::fabs(m.trace()) - 2.0) > 1e-9)
        raise(ErrorKind::BadInput, "matrix is not parabolic: " + m.str());
    if (m.c == 0.0) return BoundaryPoint::inf();
    return BoundaryPoint::at((m.a - m.d) / (2.0 * m.c));
}

namespace {

// Move all endpoints into finite position with z -> -1/(z - c), c past
// every finite endpoint.
struct FourPoints {
    double p1, q1, p2, q2;
};

double shifted(const BoundaryPoint& p, double c) {
    return p.infinite ? 0.0 : -1.0 / (p.x - c);
}

FourPoints normalize_endpoints(const Geodesic& g1, const Geodesic& g2) {
    const BoundaryPoint* pts[4] = {&g1.p, &g1.q, &g2.p, &g2.q};
    bool any_inf = false;
    double hi = 0.0;
    for (auto* p : pts) {
        if (p->infinite)
            any_inf = true;
        else
            hi = std::max(hi, std::fabs(p->x));
    }
    if (!any_inf) return {g1.p.x, g1.q.x, g2.p.x, g2.q.x};
    double c = hi + 1.0;
    return {shifted(g1.p, c), shifted(g1.q, c), shifted(g2.p, c), shifted(g2.q, c)};
}

bool strictly_between(double a, double lo, double hi) { return a > lo && a < hi; }

} // namespace

double geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
    if (g1.same_as(g2)) raise(ErrorKind::Degenerate, "distance from a geodesic to itself");
    if (g1.shares_endpoint(g2)) return 0.0; // asymptotic
    FourPoints f = normalize_endpoints(g1, g2);
    double lo = std::min(f.p1, f.q1), hi = std::max(f.p1, f.q1);
    bool in1 = strictly_between(f.p2, lo, hi), in2 = strictly_between(f.q2, lo, hi);
    if (in1 != in2) return 0.0; // crossing
    double r = ((f.p1 - f.p2) * (f.q1 - f.q2)) / ((f.p1 - f.q2) * (f.q1 - f.p2));
    if (r == 1.0) raise(ErrorKind::Degenerate, "cross-ratio degenerates for " + g1.str() + " vs " + g2.str());
    return acosh_stable(std::fabs((1.0 + r) / (1.0 - r)));
}

Mat2 frame_to_axis(const OrientedAxis& axis) {
    const BoundaryPoint& u = axis.repelling;
    const BoundaryPoint& v = axis.attracting;
    if (u.infinite && v.infinite) raise(ErrorKind::Degenerate, "axis endpoints both infinite");
    if (u.infinite) return {v.x, -1.0, 1.0, 0.0};
    if (v.infinite) return {1.0, u.x, 0.0, 1.0};
    if (v.x > u.x) {
        double s = 1.0 / std::sqrt(v.x - u.x);
        return {v.x * s, u.x * s, s, s};
    }
    double s = 1.0 / std::sqrt(u.x - v.x);
    return {v.x * s, -u.x * s, s, -s};
}

double axis_position_of_perpendicular(const OrientedAxis& axis, const BoundaryPoint& mark) {
    Mat2 w = frame_to_axis(axis).inverse();
    BoundaryPoint m = mobius_apply(w, mark);
    if (m.infinite || m.x == 0.0)
        raise(ErrorKind::Degenerate, "mark coincides with an axis endpoint");
    return std::log(std::fabs(m.x));
}

double axis_position_of_perpendicular(const OrientedAxis& axis, const Geodesic& other) {
    Mat2 w = frame_to_axis(axis).inverse();
    BoundaryPoint r = mobius_apply(w, other.p);
    BoundaryPoint t = mobius_apply(w, other.q);
    if (r.infinite || t.infinite)
        raise(ErrorKind::Degenerate, "geodesics share an endpoint, no perpendicular");
    double prod = r.x * t.x;
    if (prod <= 0.0)
        raise(ErrorKind::Degenerate, "geodesics cross, no common perpendicular");
    return 0.5 * std::log(prod);
}

} // namespace teich
