#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teich/estimate.hpp"
#include "teich/mapclass.hpp"

namespace teich {

// max over the family of log(l_{f(c)}(X) / l_c(X)): the marking-action
// form of the Thurston displacement d(X, f X).  Curves only.
MetricEstimate displacement(const FNTorus& x, const MappingClass& f, const Family& fam);

// Consecutive length ratios l_{f^{k+1}(base)}(X) / l_{f^k(base)}(X) for
// k = 0..k_max; converges to the dilatation for pseudo-Anosov f.
std::vector<double> dilatation_by_iteration(const MappingClass& f, const Slope& base,
                                            const FNTorus& x, int k_max);

struct SearchConfig {
    double ell_min = 0.2, ell_max = 6.0;   // log-spaced grid in ell
    double twist_min = -3.0, twist_max = 3.0;
    int grid_ell = 16, grid_twist = 13;
    int multistart = 5;
    int simplex_iters = 120;
    int farey_level = 8;
    int iterate_k = 10;
    std::uint64_t seed = 20240810;
};

struct TranslationEstimate {
    int power = 1;
    double min_value = 0.0;
    FNTorus argmin;
    double log_dilatation = 0.0; // power * log(lambda(f))
    bool boundary_hit = false;
    std::vector<std::pair<FNTorus, double>> optimizer_trace;
    long n_evals = 0;
};

// Minimize displacement(X, f^n, farey(N) + iterates of f) over cusped
// FN points, multistart simplex refinement over a coarse grid.
// Deterministic for a fixed config.
TranslationEstimate translation_estimate(const MappingClass& f, int n, const SearchConfig& cfg = {});

// (1/n) dhat(X0, f^n X0) evaluated through the pulled-back family; the
// weak translation length along the orbit of X0.
double tau_estimate(const MappingClass& f, const FNTorus& x0, int n, const SearchConfig& cfg = {});
std::vector<double> tau_sequence(const MappingClass& f, const FNTorus& x0, int n_max,
                                 const SearchConfig& cfg = {});

// Dehn-twist pinching: displacement of the twist along `slope` at the
// points where the slope curve has length `level`, over farey(n).
// Decreases toward 0 as the level pinches.
std::vector<std::pair<double, double>> twist_pinch_experiment(const Slope& slope,
                                                              const std::vector<double>& levels,
                                                              int farey_level);

} // namespace teich
