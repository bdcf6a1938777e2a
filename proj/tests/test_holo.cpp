#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qfhm/holo.hpp"

using namespace qfhm;

namespace {

HoloExpr z(int i) { return HoloExpr::variable(i); }

}  // namespace

TEST_SUITE("holo") {

TEST_CASE("evaluation of a two variable product") {
    HoloExpr e = (HoloExpr::constant(2.0) + z(0)) * z(1);
    ComplexPoint p{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    Complex v = e.eval(p);
    CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("derivative of a geometric quotient") {
    // d/dz [1/(1-z)] = 1/(1-z)^2, so the value at 0 is exactly 1.
    HoloExpr e = HoloExpr::quotient(HoloExpr::constant(1.0), HoloExpr::constant(1.0) - z(0));
    Complex d0 = wirtinger_derivative(e, ComplexPoint(Complex(0.0, 0.0)), 0);
    CHECK(std::abs(d0 - Complex(1.0, 0.0)) < 1e-14);

    Complex dh = wirtinger_derivative(e, ComplexPoint(Complex(0.5, 0.0)), 0);
    CHECK(std::abs(dh - Complex(4.0, 0.0)) < 1e-12);
}

TEST_CASE("derivative matches centered differences on random rational terms") {
    HoloExpr e = z(0).pow(3) + HoloExpr::constant(Complex(0.0, 2.0)) * z(0) +
                 HoloExpr::quotient(z(0), HoloExpr::constant(2.0) - z(0));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(-0.6, 0.6);
    for (int k = 0; k < 20; ++k) {
        ComplexPoint p(Complex(uni(rng), uni(rng)));
        Complex sym = wirtinger_derivative(e, p, 0);
        const double h = 1e-5;
        Complex fd = (e.eval(p.shifted(0, Complex(h, 0.0))) - e.eval(p.shifted(0, Complex(-h, 0.0)))) /
                     (2.0 * h);
        CHECK(std::abs(sym - fd) < 1e-8);
    }
}

TEST_CASE("dilation composes with evaluation") {
    HoloExpr e = z(0).pow(2) + HoloExpr::constant(2.0) * z(0);
    HoloExpr half = e.dilate(Complex(0.5, 0.0));
    Complex a = half.eval(ComplexPoint(Complex(2.0, 0.0)));
    Complex b = e.eval(ComplexPoint(Complex(1.0, 0.0)));
    CHECK(std::abs(a - b) < 1e-15);
    CHECK(std::abs(a - Complex(3.0, 0.0)) < 1e-15);
}

TEST_CASE("rational collapse of products and quotients") {
    HoloExpr e = (HoloExpr::constant(1.0) + z(0)) * (HoloExpr::constant(1.0) - z(0));
    RationalForm r = e.to_rational(1);
    REQUIRE(r.num.size() == 2);
    CHECK(r.num.at({0}) == Complex(1.0, 0.0));
    CHECK(r.num.at({2}) == Complex(-1.0, 0.0));
    REQUIRE(r.den.size() == 1);
    CHECK(r.den.at({0}) == Complex(1.0, 0.0));

    HoloExpr q = HoloExpr::quotient(z(0), HoloExpr::constant(1.0) - z(0));
    RationalForm rq = q.to_rational(1);
    CHECK(rq.num.at({1}) == Complex(1.0, 0.0));
    CHECK(rq.den.at({0}) == Complex(1.0, 0.0));
    CHECK(rq.den.at({1}) == Complex(-1.0, 0.0));
}

TEST_CASE("antiholomorphy residual separates holomorphic from conjugate fields") {
    auto holo = [](const ComplexPoint& p) { return p[0] * p[0] * p[0]; };
    auto conj = [](const ComplexPoint& p) { return std::conj(p[0]); };
    ComplexPoint at(Complex(0.3, -0.2));
    CHECK(antiholomorphy_residual(holo, at, 1e-4) < 2e-8);
    CHECK(antiholomorphy_residual(conj, at, 1e-4) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(z(0).pow(-1), ValidationError);
    CHECK_THROWS_AS(HoloExpr::variable(-2), ValidationError);
    CHECK_THROWS_AS(HoloExpr::quotient(z(0), HoloExpr::constant(0.0)), ValidationError);
    // 1/(1-z) blows up at the boundary point 1 of the closed disk.
    CHECK_THROWS_AS(HoloExpr::quotient(HoloExpr::constant(1.0), HoloExpr::constant(1.0) - z(0),
                                       Domain::disk()),
                    ValidationError);
    // 1/(2-z) stays bounded away from zero there.
    CHECK_NOTHROW(HoloExpr::quotient(HoloExpr::constant(1.0), HoloExpr::constant(2.0) - z(0),
                                     Domain::disk()));
}

TEST_CASE("evaluation guards") {
    HoloExpr e = z(1);
    CHECK_THROWS_AS(e.eval(ComplexPoint(Complex(0.0, 0.0))), DimensionMismatch);
    HoloExpr q = HoloExpr::quotient(HoloExpr::constant(1.0), z(0));
    CHECK_THROWS_AS(q.eval(ComplexPoint(Complex(0.0, 0.0))), PoleAtPoint);
}

TEST_CASE("matrix evaluation, determinant and derivative") {
    HoloMatrix m(2, 2, {HoloExpr::constant(1.0), z(0), HoloExpr::constant(0.0), HoloExpr::constant(1.0)});
    ComplexPoint p(Complex(0.25, 0.5));
    CMat v = m.eval(p);
    CHECK(std::abs(v(0, 1) - Complex(0.25, 0.5)) < 1e-15);
    CHECK(std::abs(m.det().eval(p) - Complex(1.0, 0.0)) < 1e-15);

    HoloMatrix d(2, 2, {z(0), HoloExpr::constant(0.0), HoloExpr::constant(0.0), HoloExpr::constant(1.0)});
    CHECK(std::abs(d.det().eval(p) - Complex(0.25, 0.5)) < 1e-15);
    CHECK(std::abs(d.derivative(0).at(0, 0).eval(p) - Complex(1.0, 0.0)) < 1e-15);

    CHECK_THROWS_AS(HoloMatrix(2, 2, {z(0)}), DimensionMismatch);
    CHECK_THROWS_AS(HoloMatrix(2, 3, {z(0), z(0), z(0), z(0), z(0), z(0)}).det(), DimensionMismatch);
}

TEST_CASE("point validation") {
    CHECK_THROWS_AS(ComplexPoint(std::vector<Complex>{}), ValidationError);
    CHECK_THROWS_AS(ComplexPoint(Complex(std::numeric_limits<double>::infinity(), 0.0)),
                    ValidationError);
    ComplexPoint p{Complex(3.0, 4.0)};
    CHECK(p.norm2() == doctest::Approx(5.0));
    CHECK(p.sup_norm() == doctest::Approx(5.0));
}

}  // TEST_SUITE
