#pragma once

#include <string>
#include <vector>

#include "teich/mapclass.hpp"
#include "teich/slope.hpp"
#include "teich/torus.hpp"

namespace teich {

// Finite stand-in for the full set of curves and arcs the metrics take
// a sup over.
struct Family {
    std::vector<Slope> curves;
    std::vector<DualArc> arcs;
    std::string label;

    bool empty() const { return curves.empty() && arcs.empty(); }
    size_t size() const { return curves.size() + arcs.size(); }
};

// All normalized coprime slopes with max(|p|, q) <= n, deterministic
// order.  farey_family(1) = {1/0, 0/1, 1/1, -1/1}.
Family farey_family(int n);

// {f^k(base) : -k_max <= k <= k_max}, deduplicated, order preserved
// from k = -k_max upward.
Family iterate_family(const MappingClass& f, const Slope& base, int k_max);

// Union, first operand's order first, duplicates dropped.
Family family_union(const Family& a, const Family& b);

// Dual arcs of every curve in the family (arcs of the same slopes).
Family with_dual_arcs(const Family& f);

} // namespace teich
