#pragma once

#include <random>

#include "teich/mat2.hpp"

namespace teich_test {

// deterministic rng for property tests
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x7e1c4u + salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

// random unit-determinant matrix, moderately conditioned
inline teich::Mat2 random_sl2(std::mt19937_64& g) {
    double t = uniform(g, -1.2, 1.2);
    double s = uniform(g, -1.2, 1.2);
    double r = uniform(g, -1.2, 1.2);
    teich::Mat2 sh{1, s, 0, 1}, lw{1, 0, r, 1};
    return teich::Mat2::translation(t) * sh * lw;
}

} // namespace teich_test
