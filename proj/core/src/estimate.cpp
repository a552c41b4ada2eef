#include "teich/estimate.hpp"

#include <cmath>

#include "teich/errors.hpp"

namespace teich {

double ratio(const Slope& c, const FNTorus& x, const FNTorus& y) {
    return std::log(curve_length(y, c)) - std::log(curve_length(x, c));
}

double ratio(const DualArc& c, const FNTorus& x, const FNTorus& y) {
    if (x.cusped() || y.cusped())
        raise(ErrorKind::CuspArc, "arc ratio needs positive boundary on both surfaces");
    return std::log(dual_arc_length(y, c)) - std::log(dual_arc_length(x, c));
}

MetricEstimate dhat(const FNTorus& x, const FNTorus& y, const Family& f) {
    if (f.empty()) raise(ErrorKind::EmptyFamily, "estimator needs a non-empty family");
    if (!f.arcs.empty()) {
        if (x.cusped() || y.cusped())
            raise(ErrorKind::CuspArc, "family contains arcs but a surface is cusped");
        if (x.boundary != y.boundary)
            raise(ErrorKind::CuspArc, "arc comparison needs matching boundary lengths");
    }
    MetricEstimate best;
    best.family_label = f.label;
    bool first = true;
    for (const Slope& s : f.curves) {
        double r = ratio(s, x, y);
        if (first || r > best.value) {
            best.value = r;
            best.witness = s.str();
            first = false;
        }
    }
    for (const DualArc& arc : f.arcs) {
        double r = ratio(arc, x, y);
        if (first || r > best.value) {
            best.value = r;
            best.witness = arc.str();
            first = false;
        }
    }
    best.non_filling = best.value < 0.0;
    return best;
}

} // namespace teich
