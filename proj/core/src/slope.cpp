#include "teich/slope.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "teich/errors.hpp"

namespace teich {

Slope::Slope(long long p_, long long q_) : p(p_), q(q_) {
    if (p == 0 && q == 0) raise(ErrorKind::BadInput, "slope (0, 0)");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

Slope Slope::parse(const std::string& s) {
    auto sep = s.find('/');
    if (sep == std::string::npos) sep = s.find(',');
    if (sep == std::string::npos || sep == 0 || sep + 1 >= s.size())
        raise(ErrorKind::BadInput, "slope must look like p/q, got '" + s + "'");
    try {
        size_t used1 = 0, used2 = 0;
        long long p = std::stoll(s.substr(0, sep), &used1);
        long long q = std::stoll(s.substr(sep + 1), &used2);
        if (used1 != sep || used2 != s.size() - sep - 1)
            raise(ErrorKind::BadInput, "trailing characters in slope '" + s + "'");
        return {p, q};
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::BadInput, "unparsable slope '" + s + "'");
    } catch (const std::out_of_range&) {
        raise(ErrorKind::BadInput, "slope out of range '" + s + "'");
    }
}

std::string slope_word(const Slope& s) {
    long long p = std::llabs(s.p), q = s.q;
    char A = s.p >= 0 ? 'A' : 'a';
    if (q == 0) return std::string(1, A);
    if (p == 0) return "B";
    // lower Christoffel word of the line toward (p, q)
    std::string w;
    w.reserve(static_cast<size_t>(p + q));
    long long n = p + q;
    for (long long i = 1; i <= n; ++i)
        w.push_back((i * q) % n > ((i - 1) * q) % n ? A : 'B');
    return w;
}

std::string word_inverse(const std::string& w) {
    std::string out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
        case 'A': out.push_back('a'); break;
        case 'a': out.push_back('A'); break;
        case 'B': out.push_back('b'); break;
        case 'b': out.push_back('B'); break;
        default: raise(ErrorKind::BadInput, std::string("bad word letter '") + *it + "'");
        }
    }
    return out;
}

} // namespace teich
