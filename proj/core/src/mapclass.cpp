#include "teich/mapclass.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "teich/errors.hpp"

namespace teich {

const char* map_type_name(MapType t) {
    switch (t) {
    case MapType::Periodic: return "periodic";
    case MapType::Reducible: return "reducible";
    case MapType::PseudoAnosov: return "pseudo-anosov";
    }
    return "?";
}

namespace {

long long checked_mul_add(long long x, long long y, long long z, long long w) {
    __int128 r = static_cast<__int128>(x) * y + static_cast<__int128>(z) * w;
    if (r > INT64_MAX || r < INT64_MIN)
        raise(ErrorKind::BadInput, "integer overflow in mapping-class arithmetic");
    return static_cast<long long>(r);
}

} // namespace

MappingClass::MappingClass(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1) raise(ErrorKind::BadInput, "mapping class must have determinant 1");
}

MappingClass MappingClass::operator*(const MappingClass& o) const {
    MappingClass r;
    r.a = checked_mul_add(a, o.a, b, o.c);
    r.b = checked_mul_add(a, o.b, b, o.d);
    r.c = checked_mul_add(c, o.a, d, o.c);
    r.d = checked_mul_add(c, o.b, d, o.d);
    return r;
}

MappingClass MappingClass::power(int n) const {
    MappingClass base = n >= 0 ? *this : inverse();
    int k = std::abs(n);
    MappingClass r;
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

Slope MappingClass::operator()(const Slope& s) const {
    return {checked_mul_add(a, s.p, b, s.q), checked_mul_add(c, s.p, d, s.q)};
}

std::string MappingClass::str() const {
    std::ostringstream os;
    os << a << "," << b << "," << c << "," << d;
    return os.str();
}

MappingClass MappingClass::parse(const std::string& s) {
    std::istringstream is(s);
    long long v[4];
    char sep;
    for (int i = 0; i < 4; ++i) {
        if (!(is >> v[i])) raise(ErrorKind::BadInput, "mapping class must be a,b,c,d: '" + s + "'");
        if (i < 3 && !(is >> sep)) raise(ErrorKind::BadInput, "mapping class must be a,b,c,d: '" + s + "'");
    }
    return {v[0], v[1], v[2], v[3]};
}

MappingClass MappingClass::twist_along(const Slope& s) {
    return {1 - s.p * s.q, s.p * s.p, -s.q * s.q, 1 + s.p * s.q};
}

MappingClass MappingClass::slope_to_base(const Slope& s) {
    // extended gcd: u p + v q = 1
    long long old_r = s.p, r = s.q;
    long long old_u = 1, u = 0, old_v = 0, v = 1;
    while (r != 0) {
        long long qt = old_r / r;
        long long t;
        t = old_r - qt * r; old_r = r; r = t;
        t = old_u - qt * u; old_u = u; u = t;
        t = old_v - qt * v; old_v = v; v = t;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    if (old_r != 1) raise(ErrorKind::BadInput, "slope entries are not coprime");
    return {old_u, old_v, -s.q, s.p};
}

Classification classify(const MappingClass& f) {
    if (f.is_identity_class()) return {MapType::Periodic, 1.0};
    long long t = std::llabs(f.trace());
    if (t < 2) return {MapType::Periodic, 1.0};
    if (t == 2) return {MapType::Reducible, 1.0};
    double td = static_cast<double>(t);
    return {MapType::PseudoAnosov, (td + std::sqrt(td * td - 4.0)) / 2.0};
}

} // namespace teich
