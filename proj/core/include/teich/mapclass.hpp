#pragma once

#include <string>

#include "teich/slope.hpp"

namespace teich {

enum class MapType { Periodic, Reducible, PseudoAnosov };

const char* map_type_name(MapType t);

// A mapping class of the torus: an integer matrix of determinant 1
// acting on slopes.
struct MappingClass {
    long long a = 1, b = 0, c = 0, d = 1;

    MappingClass() = default;
    MappingClass(long long a_, long long b_, long long c_, long long d_);

    long long trace() const { return a + d; }
    bool is_identity_class() const { return b == 0 && c == 0 && a == d && (a == 1 || a == -1); }

    MappingClass inverse() const { return {d, -b, -c, a}; }
    MappingClass operator*(const MappingClass& o) const;
    MappingClass power(int n) const; // n may be negative

    Slope operator()(const Slope& s) const;

    bool operator==(const MappingClass& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    std::string str() const; // "a,b,c,d"
    static MappingClass parse(const std::string& s);

    // Dehn twist along the given slope; along 1/0 it is [[1,1],[0,1]],
    // sending (p, q) to (p + q, q).
    static MappingClass twist_along(const Slope& s);
    // An integer matrix sending the slope to 1/0 (extended gcd).
    static MappingClass slope_to_base(const Slope& s);
};

struct Classification {
    MapType type;
    double dilatation; // 1 unless pseudo-Anosov
};

// |tr| < 2 or +-identity: periodic; |tr| = 2: reducible;
// |tr| > 2: pseudo-Anosov with dilatation (|tr| + sqrt(tr^2 - 4)) / 2.
Classification classify(const MappingClass& f);

} // namespace teich
