#pragma once

#include <string>

#include "teich/family.hpp"
#include "teich/torus.hpp"

namespace teich {

// Finite-family lower-bound estimate of the arc/Thurston metric: the
// max over the family of log length-ratios, with the witness attaining
// it.  Negative values (non-filling family) are returned as-is with the
// warning flag set, never clamped.
struct MetricEstimate {
    double value = 0.0;
    std::string witness;
    std::string family_label;
    bool non_filling = false;
};

// log(l_c(Y)) - log(l_c(X)) for a single curve or arc class.
double ratio(const Slope& c, const FNTorus& x, const FNTorus& y);
double ratio(const DualArc& c, const FNTorus& x, const FNTorus& y);

// Estimate of d(X, Y) restricted to the family.  Arcs in the family
// require both points to carry the same positive boundary length.
MetricEstimate dhat(const FNTorus& x, const FNTorus& y, const Family& f);

} // namespace teich
