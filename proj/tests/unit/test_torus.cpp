#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "teich/errors.hpp"
#include "teich/family.hpp"
#include "teich/mapclass.hpp"
#include "teich/slope.hpp"
#include "teich/torus.hpp"
#include "teich/trig.hpp"
#include "test_util.hpp"

using namespace teich;
using teich_test::rng;
using teich_test::uniform;

namespace {

const double kSquareEll = 1.7627471740390861; // 2 arccosh(sqrt 2)

// staircase oracle for the cutting-sequence word: an 'A' per lattice
// column, followed by the rows the line passes in that column
std::string staircase_word(long long p, long long q) {
    std::string w;
    for (long long i = 1; i <= p; ++i) {
        w.push_back('A');
        long long rise = (i * q) / p - ((i - 1) * q) / p;
        w.append(static_cast<size_t>(rise), 'B');
    }
    return w;
}

} // namespace

TEST_CASE("slope normalization") {
    CHECK(Slope(2, 4) == Slope(1, 2));
    CHECK(Slope(-1, -1) == Slope(1, 1));
    CHECK(Slope(-3, 0) == Slope(1, 0));
    CHECK(Slope(0, -5) == Slope(0, 1));
    CHECK(Slope(6, -4) == Slope(-3, 2));
    CHECK_THROWS_AS(Slope(0, 0), Error);
    CHECK(Slope::parse("-3/2") == Slope(-3, 2));
    CHECK(Slope::parse(Slope(5, 8).str()) == Slope(5, 8));
}

TEST_CASE("slope words") {
    CHECK(slope_word({1, 0}) == "A");
    CHECK(slope_word({0, 1}) == "B");
    CHECK(slope_word({1, 1}) == "AB");
    CHECK(slope_word({2, 1}) == "AAB");
    CHECK(slope_word({-2, 1}) == "aaB");
    for (long long q = 1; q <= 5; ++q)
        for (long long p = 1; p <= 5; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(slope_word({p, q}) == staircase_word(p, q));
        }
}

TEST_CASE("holonomy recipe at the square point") {
    TorusRep rep = build_rep({kSquareEll, 0.0, 0.0});
    double s2 = 2.8284271247461901; // 2 sqrt 2
    CHECK(rep.gen_a.trace() == doctest::Approx(s2).epsilon(1e-12));
    CHECK(rep.gen_b.trace() == doctest::Approx(s2).epsilon(1e-12));
    CHECK((rep.gen_a * rep.gen_b).trace() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::fabs(rep_residuals(rep).markov) < 1e-12);
}

TEST_CASE("holonomy recipe at trace 3") {
    TorusRep rep = build_rep({2.0 * std::acosh(1.5), 0.0, 0.0});
    CHECK(rep.gen_a.trace() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rep.gen_b.trace() == doctest::Approx(2.6832815729997476).epsilon(1e-12));
    CHECK((rep.gen_a * rep.gen_b).trace() == doctest::Approx(4.0249223594996215).epsilon(1e-12));
}

TEST_CASE("trace conditions and Markov relation on random points") {
    auto g = rng(10);
    for (int i = 0; i < 60; ++i) {
        double boundary = (i % 3 == 0) ? 0.0 : uniform(g, 0.05, 2.0);
        FNTorus x{uniform(g, 0.3, 4.0), uniform(g, -3.0, 3.0), boundary};
        TorusRep rep = build_rep(x);
        CHECK(rep_residuals(rep).max_abs() < 1e-9);
        if (x.cusped())
            CHECK(std::fabs((rep.gen_a * rep.gen_b * rep.gen_a.inverse() * rep.gen_b.inverse()).trace()) ==
                  doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("trace identity tr(AB) + tr(AB^-1) = trA trB") {
    auto g = rng(11);
    for (int i = 0; i < 30; ++i) {
        TorusRep rep = build_rep({uniform(g, 0.3, 3.0), uniform(g, -3.0, 3.0), uniform(g, 0.0, 1.5)});
        double lhs = (rep.gen_a * rep.gen_b).trace() + (rep.gen_a * rep.gen_b.inverse()).trace();
        double rhs = rep.gen_a.trace() * rep.gen_b.trace();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("twist flow is the exact matrix identity genB(t + ell) = genA genB(t)") {
    auto g = rng(12);
    for (int i = 0; i < 20; ++i) {
        FNTorus x{uniform(g, 0.4, 3.0), uniform(g, -2.0, 2.0), uniform(g, 0.0, 1.0)};
        TorusRep r0 = build_rep(x);
        TorusRep r1 = build_rep({x.ell, x.twist + x.ell, x.boundary});
        Mat2 rhs = r0.gen_a * r0.gen_b;
        CHECK(r1.gen_b.approx_equal(rhs, 1e-12 * rhs.max_abs()));
    }
}

TEST_CASE("twist naturality: FN shift equals the twist action on slopes") {
    MappingClass twist = MappingClass::twist_along({1, 0});
    Family fam = farey_family(6);
    auto g = rng(13);
    for (int i = 0; i < 20; ++i) {
        FNTorus x{uniform(g, 0.4, 3.0), uniform(g, -2.0, 2.0), (i % 2) ? 0.0 : uniform(g, 0.1, 1.0)};
        FNTorus shifted{x.ell, x.twist + x.ell, x.boundary};
        for (const Slope& s : fam.curves) {
            double lhs = curve_length(shifted, s);
            double rhs = curve_length(x, twist(s));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("curve lengths at the square point") {
    FNTorus x{kSquareEll, 0.0, 0.0};
    CHECK(curve_length(x, {1, 0}) == doctest::Approx(kSquareEll).epsilon(1e-12));
    CHECK(curve_length(x, {0, 1}) == doctest::Approx(kSquareEll).epsilon(1e-12));
    CHECK(curve_length(x, {1, 1}) == doctest::Approx(2.6339157938496334).epsilon(1e-12));
}

TEST_CASE("trace recursion agrees with the evaluated word") {
    auto g = rng(14);
    Family fam = farey_family(12);
    for (int i = 0; i < 6; ++i) {
        FNTorus x{uniform(g, 0.3, 2.5), uniform(g, -2.5, 2.5), (i % 2) ? 0.0 : uniform(g, 0.1, 1.5)};
        for (const Slope& s : fam.curves)
            CHECK(curve_length(x, s) == doctest::Approx(curve_length_via_word(x, s)).epsilon(1e-9));
    }
}

TEST_CASE("word evaluation is conjugation invariant") {
    auto g = rng(15);
    Family fam = farey_family(6);
    for (int i = 0; i < 10; ++i) {
        TorusRep rep = build_rep({uniform(g, 0.4, 2.5), uniform(g, -2.0, 2.0), 0.0});
        Mat2 n = teich_test::random_sl2(g);
        Mat2 ca = n * rep.gen_a * n.inverse();
        Mat2 cb = n * rep.gen_b * n.inverse();
        for (const Slope& s : fam.curves) {
            std::string w = slope_word(s);
            double l1 = translation_length_from_log_trace(evaluate_word(rep, w).log_abs_trace());
            double l2 = translation_length_from_log_trace(evaluate_word(ca, cb, w).log_abs_trace());
            CHECK(l2 == doctest::Approx(l1).epsilon(1e-9));
        }
    }
}

TEST_CASE("twist convexity of the crossing curve") {
    for (double ell : {0.7, 1.5}) {
        for (double boundary : {0.0, 0.8}) {
            FNTorus base{ell, 0.0, boundary};
            auto len = [&](double t) { return curve_length({ell, t, boundary}, {0, 1}); };
            CHECK(len(0.0) < len(0.3));
            CHECK(len(0.0) < len(-0.3));
            for (double t = -2.0; t <= 2.0; t += 0.25) {
                double second = len(t + 0.25) - 2.0 * len(t) + len(t - 0.25);
                CHECK(second > 0.0);
            }
            (void)base;
        }
    }
}

TEST_CASE("curve lengths converge as the boundary pinches") {
    auto g = rng(16);
    const std::vector<double> levels{1.0, 0.5, 0.1, 0.01};
    for (int i = 0; i < 8; ++i) {
        FNTorus x0{uniform(g, 0.5, 2.0), uniform(g, -1.5, 1.5), 0.0};
        Slope s{static_cast<long long>(i % 4) - 1, 1 + (i % 3)};
        double base = curve_length(x0, s);
        double prev = 1e9;
        for (double level : levels) {
            double dev = std::fabs(curve_length({x0.ell, x0.twist, level}, s) / base - 1.0);
            CHECK(dev < prev + 1e-15);
            prev = dev;
        }
        CHECK(prev < 1e-3);
    }
}

TEST_CASE("dual arc lengths") {
    // tau-independence and the one-cuff formula
    for (double tau : {0.0, 0.7, -2.3}) {
        FNTorus x{1.0, tau, 0.2};
        CHECK(dual_arc_length(x, {{1, 0}}) == doctest::Approx(7.6181378121792439).epsilon(1e-12));
    }
    CHECK_THROWS_AS(dual_arc_length({1.0, 0.0, 0.0}, {{1, 0}}), Error);
    try {
        dual_arc_length({1.0, 0.0, 0.0}, {{1, 0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CuspArc);
    }
    // the formula depends only on (boundary, c, c)
    FNTorus x{1.3, 0.0, 0.4};
    double c = curve_length(x, {0, 1});
    CHECK(dual_arc_length(x, {{0, 1}}) == doctest::Approx(pants_arc_one_cuff(0.4, c, c)).epsilon(1e-12));
}

TEST_CASE("FN point validation") {
    CHECK_THROWS_AS(FNTorus(0.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(FNTorus(-1.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(FNTorus(1.0, 0.0, -0.5), Error);
    CHECK(FNTorus::parse("1.5,-0.25,0").str() == FNTorus(1.5, -0.25, 0.0).str());
    CHECK_THROWS_AS(FNTorus::parse("1.5"), Error);
    CHECK_THROWS_AS(FNTorus::parse("a,b,c"), Error);
}
