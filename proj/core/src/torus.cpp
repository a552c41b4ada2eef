#include "teich/torus.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "teich/errors.hpp"
#include "teich/trig.hpp"

namespace teich {

FNTorus::FNTorus(double ell_, double twist_, double boundary_)
    : ell(ell_), twist(twist_), boundary(boundary_) {
    if (!(ell > 0.0) || !std::isfinite(ell))
        raise(ErrorKind::Domain, "interior curve length must be positive");
    if (!std::isfinite(twist)) raise(ErrorKind::Domain, "twist must be finite");
    if (!(boundary >= 0.0) || !std::isfinite(boundary))
        raise(ErrorKind::Domain, "boundary length must be >= 0");
}

std::string FNTorus::str() const {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.9g, %.9g, %.9g)", ell, twist, boundary);
    return buf;
}

FNTorus FNTorus::parse(const std::string& s) {
    std::istringstream is(s);
    double v[3];
    char sep;
    for (int i = 0; i < 3; ++i) {
        if (!(is >> v[i])) raise(ErrorKind::BadInput, "point must be ell,twist,boundary: '" + s + "'");
        if (i < 2 && !(is >> sep)) raise(ErrorKind::BadInput, "point must be ell,twist,boundary: '" + s + "'");
    }
    std::string rest;
    if (is >> rest) raise(ErrorKind::BadInput, "trailing characters in point '" + s + "'");
    return {v[0], v[1], v[2]};
}

TorusRep build_rep(const FNTorus& x) {
    if (x.ell > 1200.0)
        raise(ErrorKind::Domain, "holonomy entries overflow for ell > 1200; use trace routes");
    // p, w in cancellation-free form (x^2 - 4 = 4 sinh^2(ell/2))
    double sh2 = std::sinh(x.ell / 2.0);
    sh2 = 4.0 * sh2 * sh2;
    double cl2 = 2.0 * std::cosh(x.boundary / 2.0);
    double p = std::sqrt((2.0 * std::cosh(x.ell) + cl2) / sh2);
    double w = std::sqrt((2.0 + cl2) / sh2);
    Mat2 b0{p, w, w, p};
    TorusRep rep;
    rep.gen_a = Mat2::translation(x.ell);
    rep.gen_b = Mat2::translation(x.twist) * b0;
    rep.point = x;
    return rep;
}

void ScaledMat2::mul_right(const Mat2& g) {
    m = m * g;
    ++letters;
    double big = m.max_abs();
    if (big > 1e30) {
        m = {m.a / big, m.b / big, m.c / big, m.d / big};
        log_scale += std::log(big);
    } else if (letters % 32 == 0 && log_scale == 0.0) {
        // determinant drift renormalization.  The computed det carries
        // cancellation noise of order eps * big^2, so only correct drift
        // that actually rises above that floor.
        double d = m.det();
        double floor = 1e3 * 2.22e-16 * (big * big + 1.0);
        if (std::fabs(d - 1.0) > floor && d > 0.0) m = m.det_normalized();
    }
}

double ScaledMat2::log_abs_trace() const {
    double t = std::fabs(m.trace());
    return log_scale + std::log(t);
}

ScaledMat2 evaluate_word(const Mat2& gen_a, const Mat2& gen_b, const std::string& word) {
    if (word.empty()) raise(ErrorKind::BadInput, "empty word");
    Mat2 inv_a = gen_a.inverse(), inv_b = gen_b.inverse();
    ScaledMat2 acc;
    for (char ch : word) {
        switch (ch) {
        case 'A': acc.mul_right(gen_a); break;
        case 'a': acc.mul_right(inv_a); break;
        case 'B': acc.mul_right(gen_b); break;
        case 'b': acc.mul_right(inv_b); break;
        default: raise(ErrorKind::BadInput, std::string("bad word letter '") + ch + "'");
        }
    }
    return acc;
}

ScaledMat2 evaluate_word(const TorusRep& rep, const std::string& word) {
    return evaluate_word(rep.gen_a, rep.gen_b, word);
}

TraceTriple trace_triple(const FNTorus& x) {
    double log_p = 0.5 * (log_add_exp(log_2cosh(x.ell), log_2cosh(x.boundary / 2.0)) -
                          2.0 * log_2sinh(x.ell / 2.0));
    TraceTriple t;
    t.x = LogNum::from_log(log_2cosh(x.ell / 2.0), 1);
    t.y = LogNum::from_log(log_p + log_2cosh(x.twist / 2.0), 1);
    t.z = LogNum::from_log(log_p + log_2cosh((x.ell + x.twist) / 2.0), 1);
    return t;
}

namespace {

struct WalkSlope {
    long long p, q;
    bool operator==(const WalkSlope& o) const { return p == o.p && q == o.q; }
};

// sign of q1/p1 - q2/p2 for nonnegative entries, via cross product
int cmp_frac(const WalkSlope& s1, const WalkSlope& s2) {
    __int128 lhs = static_cast<__int128>(s1.q) * s2.p;
    __int128 rhs = static_cast<__int128>(s1.p) * s2.q;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

LogNum slope_trace_nonneg(LogNum x, LogNum y, LogNum z, long long p, long long q) {
    if (q == 0) return x;
    if (p == 0) return y;
    WalkSlope target{p, q};
    WalkSlope left{1, 0}, right{0, 1}, mid{1, 1};
    LogNum tl = x, tr = y, tm = z;
    long long guard = 4 * (p + q) + 64;
    while (!(mid == target)) {
        if (--guard < 0) raise(ErrorKind::BadInput, "slope walk did not terminate");
        if (cmp_frac(target, mid) < 0) {
            LogNum t_new = tl * tm - tr;
            right = mid;
            tr = tm;
            mid = {left.p + mid.p, left.q + mid.q};
            tm = t_new;
        } else {
            LogNum t_new = tm * tr - tl;
            left = mid;
            tl = tm;
            mid = {mid.p + right.p, mid.q + right.q};
            tm = t_new;
        }
    }
    return tm;
}

} // namespace

LogNum slope_trace(const TraceTriple& t, const Slope& s) {
    if (s.p >= 0) return slope_trace_nonneg(t.x, t.y, t.z, s.p, s.q);
    // mirror A -> A^-1: the triple becomes (x, y, xy - z)
    return slope_trace_nonneg(t.x, t.y, t.x * t.y - t.z, -s.p, s.q);
}

double curve_length(const FNTorus& x, const Slope& s) {
    LogNum t = slope_trace(trace_triple(x), s);
    if (t.is_zero()) raise(ErrorKind::Elliptic, "slope trace vanished for " + s.str());
    return translation_length_from_log_trace(t.lg);
}

double curve_length_via_word(const FNTorus& x, const Slope& s) {
    ScaledMat2 acc = evaluate_word(build_rep(x), slope_word(s));
    return translation_length_from_log_trace(acc.log_abs_trace());
}

double dual_arc_length(const FNTorus& x, const DualArc& arc) {
    if (x.cusped())
        raise(ErrorKind::CuspArc, "arcs degenerate on a cusped surface");
    double c = curve_length(x, arc.slope);
    if (c > 650.0) raise(ErrorKind::Domain, "arc formula overflows for curve length " + std::to_string(c));
    return pants_arc_one_cuff(x.boundary, c, c);
}

double RepResiduals::max_abs() const {
    return std::max(std::fabs(gen_a_trace), std::max(std::fabs(commutator_trace), std::fabs(markov)));
}

RepResiduals rep_residuals(const TorusRep& rep) {
    const Mat2& A = rep.gen_a;
    const Mat2& B = rep.gen_b;
    Mat2 comm = A * B * A.inverse() * B.inverse();
    double x = A.trace(), y = B.trace(), z = (A * B).trace();
    double chl = 2.0 * std::cosh(rep.point.boundary / 2.0);
    RepResiduals r;
    r.gen_a_trace = std::fabs(x) - 2.0 * std::cosh(rep.point.ell / 2.0);
    r.commutator_trace = std::fabs(comm.trace()) - chl;
    r.markov = x * x + y * y + z * z - x * y * z - (2.0 - chl);
    return r;
}

} // namespace teich
