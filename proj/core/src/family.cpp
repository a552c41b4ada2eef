#include "teich/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "teich/errors.hpp"

namespace teich {

Family farey_family(int n) {
    if (n < 1) raise(ErrorKind::Domain, "farey level must be >= 1");
    Family f;
    f.label = "farey:" + std::to_string(n);
    f.curves.push_back({1, 0});
    f.curves.push_back({0, 1});
    for (long long q = 1; q <= n; ++q)
        for (long long p = 1; p <= n; ++p) {
            if (std::gcd(p, q) != 1) continue;
            f.curves.push_back({p, q});
            f.curves.push_back({-p, q});
        }
    return f;
}

Family iterate_family(const MappingClass& f, const Slope& base, int k_max) {
    if (k_max < 1) raise(ErrorKind::Domain, "iteration count must be >= 1");
    Family fam;
    fam.label = "iter:" + base.str() + ":" + std::to_string(k_max);
    std::set<Slope> seen;
    MappingClass inv = f.inverse();
    Slope s = base;
    for (int k = 0; k < k_max; ++k) s = inv(s);
    for (int k = -k_max; k <= k_max; ++k) {
        if (seen.insert(s).second) fam.curves.push_back(s);
        if (k < k_max) s = f(s);
    }
    return fam;
}

Family family_union(const Family& a, const Family& b) {
    Family out;
    out.label = a.label.empty() ? b.label : (b.label.empty() ? a.label : a.label + "+" + b.label);
    std::set<Slope> seen_curves;
    for (const auto& lst : {a.curves, b.curves})
        for (const Slope& s : lst)
            if (seen_curves.insert(s).second) out.curves.push_back(s);
    std::set<Slope> seen_arcs;
    for (const auto& lst : {a.arcs, b.arcs})
        for (const DualArc& arc : lst)
            if (seen_arcs.insert(arc.slope).second) out.arcs.push_back(arc);
    return out;
}

Family with_dual_arcs(const Family& f) {
    Family out = f;
    out.label = f.label.empty() ? "arcs" : f.label + "+arcs";
    std::set<Slope> seen;
    for (const DualArc& arc : out.arcs) seen.insert(arc.slope);
    for (const Slope& s : f.curves)
        if (seen.insert(s).second) out.arcs.push_back({s});
    return out;
}

} // namespace teich
