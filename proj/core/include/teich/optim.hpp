#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace teich {

// Derivative-free 2-d minimization: Nelder-Mead with the standard
// reflection/expansion/contraction/shrink coefficients.  The objective
// here is a max of smooth functions, so anything gradient-based would
// sit on a kink.
struct SimplexResult {
    double x = 0, y = 0, value = 0;
    int evals = 0;
    std::vector<std::pair<std::pair<double, double>, double>> trace; // accepted best points
};

SimplexResult nelder_mead(const std::function<double(double, double)>& f, double x0, double y0,
                          double step_x, double step_y, int max_iters);

} // namespace teich
