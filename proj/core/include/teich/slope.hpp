#pragma once

#include <string>
#include <vector>

namespace teich {

// Isotopy class of a simple closed curve on the (punctured/one-holed)
// torus, as a coprime pair.  (p, q) and (-p, -q) are the same unoriented
// curve; the normal form has q > 0, or q = 0 and p = 1.
struct Slope {
    long long p = 1, q = 0;

    Slope() = default;
    Slope(long long p_, long long q_); // normalizes, rejects (0, 0)

    bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
    bool operator<(const Slope& o) const { return p != o.p ? p < o.p : q < o.q; }

    std::string str() const; // "p/q"
    static Slope parse(const std::string& s);
};

// Cutting-sequence (Christoffel) word of the slope curve over the
// letters A, a = A^-1, B, b = B^-1.  Exponent sums are (p, q);
// (1,0) -> "A", (0,1) -> "B", (1,1) -> "AB", (2,1) -> "AAB".
std::string slope_word(const Slope& s);

// Free inverse of a word in the A/a/B/b alphabet.
std::string word_inverse(const std::string& w);

} // namespace teich
