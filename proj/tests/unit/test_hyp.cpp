#include <doctest.h>

#include <cmath>
#include <complex>

#include "teich/errors.hpp"
#include "teich/geodesic.hpp"
#include "teich/mat2.hpp"
#include "teich/trig.hpp"
#include "test_util.hpp"

using namespace teich;
using teich_test::rng;
using teich_test::uniform;

namespace {

double point_distance(std::complex<double> z1, std::complex<double> z2) {
    double d2 = std::norm(z1 - z2);
    return std::acosh(1.0 + d2 / (2.0 * z1.imag() * z2.imag()));
}

// coarse-to-fine search for the distance between two half-circle
// geodesics (p1,q1), (p2,q2); an oracle independent of cross-ratios
double shoot_distance(double p1, double q1, double p2, double q2) {
    auto pt = [](double p, double q, double th) {
        double c = (p + q) / 2.0, r = std::fabs(q - p) / 2.0;
        return std::complex<double>(c + r * std::cos(th), r * std::sin(th));
    };
    double lo1 = 0.02, hi1 = M_PI - 0.02, lo2 = lo1, hi2 = hi1;
    double best = 1e300, b1 = 0, b2 = 0;
    for (int round = 0; round < 8; ++round) {
        const int n = 60;
        best = 1e300;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                double t1 = lo1 + (hi1 - lo1) * i / n;
                double t2 = lo2 + (hi2 - lo2) * j / n;
                double d = point_distance(pt(p1, q1, t1), pt(p2, q2, t2));
                if (d < best) {
                    best = d;
                    b1 = t1;
                    b2 = t2;
                }
            }
        double w1 = (hi1 - lo1) / n * 2, w2 = (hi2 - lo2) / n * 2;
        lo1 = b1 - w1; hi1 = b1 + w1;
        lo2 = b2 - w2; hi2 = b2 + w2;
    }
    return best;
}

} // namespace

TEST_CASE("sl2 constructor normalizes and rejects") {
    Mat2 m = Mat2::sl2(2.0 * (1.0 + 2e-10), 1.0, 1.0, 1.0);
    CHECK(std::fabs(m.det() - 1.0) < 1e-12);
    CHECK_THROWS_AS(Mat2::sl2(2.0, 1.0, 1.0, 1.01), Error);
}

TEST_CASE("translation_length basics") {
    CHECK(translation_length(Mat2::translation(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(translation_length(Mat2{2, 1, 1, 1}) == doctest::Approx(1.92484730023841379).epsilon(1e-12));
    CHECK(translation_length(Mat2{1, 1, 0, 1}) == 0.0);
    CHECK_THROWS_AS(translation_length(Mat2{0, -1, 1, 0}), Error);
    try {
        translation_length(Mat2{0, -1, 1, 0});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Elliptic);
    }
}

TEST_CASE("translation_length is a conjugation invariant") {
    auto g = rng(1);
    for (int i = 0; i < 50; ++i) {
        Mat2 m = Mat2::translation(uniform(g, 0.2, 4.0));
        Mat2 n = teich_test::random_sl2(g);
        Mat2 conj = n * m * n.inverse();
        CHECK(translation_length(conj) == doctest::Approx(translation_length(m)).epsilon(1e-9));
    }
}

TEST_CASE("axis endpoints") {
    Geodesic ax = axis_endpoints(Mat2::translation(2.0));
    CHECK(ax.same_as(Geodesic::imaginary_axis()));

    Geodesic g = axis_endpoints(Mat2{2, 1, 1, 1});
    double golden = 1.6180339887498948;
    double other = -0.6180339887498949;
    double e1 = g.p.x, e2 = g.q.x;
    if (e1 > e2) std::swap(e1, e2);
    CHECK(e1 == doctest::Approx(other).epsilon(1e-12));
    CHECK(e2 == doctest::Approx(golden).epsilon(1e-12));

    CHECK_THROWS_AS(axis_endpoints(Mat2{0, -1, 1, 0}), Error);
    CHECK_THROWS_AS(axis_endpoints(Mat2{1, 1, 0, 1}), Error);
}

TEST_CASE("axis endpoints are equivariant under conjugation") {
    auto g = rng(2);
    for (int i = 0; i < 20; ++i) {
        Mat2 m = teich_test::random_sl2(g) * Mat2::translation(uniform(g, 0.5, 3.0)) *
                 teich_test::random_sl2(g);
        if (std::fabs(m.trace()) <= 2.001) continue;
        Mat2 n = teich_test::random_sl2(g);
        Geodesic ax = axis_endpoints(m);
        Geodesic conj_ax = axis_endpoints(n * m * n.inverse());
        BoundaryPoint ip = mobius_apply(n, ax.p), iq = mobius_apply(n, ax.q);
        double tol = 1e-8 * (1.0 + std::fabs(conj_ax.p.x) + std::fabs(conj_ax.q.x));
        bool direct = std::fabs(conj_ax.p.x - ip.x) < tol && std::fabs(conj_ax.q.x - iq.x) < tol;
        bool swapped = std::fabs(conj_ax.p.x - iq.x) < tol && std::fabs(conj_ax.q.x - ip.x) < tol;
        CHECK((direct || swapped));
    }
}

TEST_CASE("geodesic distance: vertical axis vs half circle") {
    double d = geodesic_distance(Geodesic::imaginary_axis(),
                                 {BoundaryPoint::at(1), BoundaryPoint::at(3)});
    CHECK(d == doctest::Approx(1.3169578969248167).epsilon(1e-12));
    // independent oracle: cosh d = (s + r)/(s - r) for the axis vs (r, s)
    CHECK(d == doctest::Approx(std::acosh((3.0 + 1.0) / (3.0 - 1.0))).epsilon(1e-12));
    // numeric shooting between two explicit half circles
    double d2 = geodesic_distance({BoundaryPoint::at(-2), BoundaryPoint::at(-1)},
                                  {BoundaryPoint::at(1), BoundaryPoint::at(3)});
    CHECK(d2 == doctest::Approx(shoot_distance(-2, -1, 1, 3)).epsilon(1e-6));
}

TEST_CASE("geodesic distance: crossing, asymptotic, degenerate") {
    CHECK(geodesic_distance(Geodesic::imaginary_axis(),
                            {BoundaryPoint::at(-1), BoundaryPoint::at(1)}) == 0.0);
    CHECK(geodesic_distance(Geodesic::imaginary_axis(),
                            {BoundaryPoint::at(0), BoundaryPoint::at(1)}) == 0.0);
    CHECK_THROWS_AS(geodesic_distance(Geodesic::imaginary_axis(), Geodesic::imaginary_axis()), Error);
}

TEST_CASE("geodesic distance is a simultaneous-conjugation invariant") {
    auto g = rng(3);
    for (int i = 0; i < 30; ++i) {
        double r = uniform(g, 0.5, 2.0), s = r + uniform(g, 0.5, 3.0);
        Geodesic g1 = Geodesic::imaginary_axis();
        Geodesic g2{BoundaryPoint::at(r), BoundaryPoint::at(s)};
        double d = geodesic_distance(g1, g2);
        Mat2 n = teich_test::random_sl2(g);
        Geodesic h1{mobius_apply(n, g1.p), mobius_apply(n, g1.q)};
        Geodesic h2{mobius_apply(n, g2.p), mobius_apply(n, g2.q)};
        CHECK(geodesic_distance(h1, h2) == doctest::Approx(d).epsilon(1e-9));
    }
}

TEST_CASE("collar width") {
    CHECK(collar_width(0.1) == doctest::Approx(3.6890877570706634).epsilon(1e-12));
    CHECK(collar_width(2.0) == doctest::Approx(0.7719368329053047).epsilon(1e-12));
    CHECK(collar_width(0.1) > collar_width(2.0));
    CHECK_THROWS_AS(collar_width(0.0), Error);
    CHECK_THROWS_AS(collar_width(-1.0), Error);
}

TEST_CASE("two-cuff pants arc") {
    CHECK(pants_arc_two_cuffs(1, 1, 1) == doctest::Approx(2.8686951416198219).epsilon(1e-12));
    auto g = rng(4);
    for (int i = 0; i < 10; ++i) {
        double lg = uniform(g, 0.3, 3.0), b1 = uniform(g, 0.3, 3.0), b2 = uniform(g, 0.3, 3.0);
        CHECK(pants_arc_two_cuffs(lg, b1, b2) == doctest::Approx(pants_arc_two_cuffs(lg, b2, b1)));
    }
    // pinch limit of the formula at fixed lgamma
    double limit = std::fabs(std::log(std::pow(std::sinh(0.005), 2))) + std::log(2.0) +
                   std::log(std::cosh(0.5) + 1.0);
    CHECK(std::fabs(pants_arc_two_cuffs(1, 0.01, 0.01) - limit) < 1e-3);
    CHECK_THROWS_AS(pants_arc_two_cuffs(-1, 1, 1), Error);
}

TEST_CASE("one-cuff pants arc") {
    CHECK(pants_arc_one_cuff(0.2, 1, 1) == doctest::Approx(7.6181378121792439).epsilon(1e-12));
    auto g = rng(5);
    for (int i = 0; i < 10; ++i) {
        double lb = uniform(g, 0.1, 2.0), g1 = uniform(g, 0.3, 3.0), g2 = uniform(g, 0.3, 3.0);
        CHECK(pants_arc_one_cuff(lb, g1, g2) == doctest::Approx(pants_arc_one_cuff(lb, g2, g1)));
    }
    // small-cuff expansion: 2|log sinh(lb/2)| + 2 log(ch(g1/2) + ch(g2/2)) + 2 log 2
    auto prediction = [](double lb, double g1, double g2) {
        return 2.0 * std::fabs(std::log(std::sinh(lb / 2.0))) +
               2.0 * std::log(std::cosh(g1 / 2.0) + std::cosh(g2 / 2.0)) + 2.0 * std::log(2.0);
    };
    CHECK(prediction(0.2, 1, 1) == doctest::Approx(7.6146556992172667).epsilon(1e-12));
    double err_02 = std::fabs(pants_arc_one_cuff(0.2, 1, 1) - prediction(0.2, 1, 1));
    double err_001 = std::fabs(pants_arc_one_cuff(0.01, 1, 1) - prediction(0.01, 1, 1));
    CHECK(err_001 < err_02);
    CHECK(err_001 < 1e-4);
    CHECK_THROWS_AS(pants_arc_one_cuff(0.0, 1, 1), Error);
}

TEST_CASE("quadrilateral side") {
    CHECK(quad_side(0, 0, 2.5) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(quad_side(1, 1, 3) == doctest::Approx(3.810208136859369).epsilon(1e-12));
    CHECK(std::fabs(quad_side(3, 3, 10) - (16.0 - std::log(4.0))) < 0.01);
    CHECK_THROWS_AS(quad_side(1, 1, 0.0), Error);
    CHECK_THROWS_AS(quad_side(-0.5, 1, 1), Error);
}

TEST_CASE("mediant inequality guard") {
    auto g = rng(6);
    for (int i = 0; i < 200; ++i) {
        double a1 = uniform(g, 0.01, 10), a2 = uniform(g, 0.01, 10);
        double b1 = uniform(g, 0.01, 10), b2 = uniform(g, 0.01, 10);
        CHECK((a1 + a2) / (b1 + b2) <= std::max(a1 / b1, a2 / b2) + 1e-14);
    }
}

TEST_CASE("quadrilateral ratio bound in the long regime") {
    auto g = rng(7);
    for (int i = 0; i < 100; ++i) {
        double a = uniform(g, 0, 4), b = uniform(g, 0, 4);
        double a2 = a + uniform(g, -1, 1), b2 = b + uniform(g, -1, 1);
        a2 = std::max(0.0, a2);
        b2 = std::max(0.0, b2);
        double ell = uniform(g, 10, 30), ell2 = uniform(g, 10, 30);
        double ratio = quad_side(a2, b2, ell2) / quad_side(a, b, ell);
        CHECK(ratio <= 1.05 * std::max(1.0, ell2 / ell));
    }
}
