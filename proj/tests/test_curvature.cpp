#include <doctest.h>

#include <cmath>

#include "qfhm/curvature.hpp"
#include "qfhm/grid.hpp"

using namespace qfhm;

namespace {

HoloMatrix shift_psi() {
    return HoloMatrix::scalar(HoloExpr::constant(1.0) +
                              HoloExpr::constant(0.5) * HoloExpr::variable(0));
}

}  // namespace

TEST_SUITE("curvature") {

TEST_CASE("closed disk values at the origin") {
    FDScheme scheme;
    CMat cs = curvature_form(KernelSpec::weighted_disk(1.0), ComplexPoint(Complex(0, 0)), scheme);
    CHECK(std::abs(cs(0, 0).real() - 0.25) < 1e-9);
    CHECK(std::abs(cs(0, 0).imag()) == 0.0);
    CMat cb = curvature_form(KernelSpec::weighted_disk(2.0), ComplexPoint(Complex(0, 0)), scheme);
    CHECK(std::abs(cb(0, 0).real() - 0.5) < 1e-9);
}

TEST_CASE("closed disk values away from the origin") {
    // log K = -lambda log(1 - |z|^2) has mixed derivative lambda / (1-|z|^2)^2.
    FDScheme scheme;
    for (double lambda : {1.0, 2.0, 3.5}) {
        KernelSpec k = KernelSpec::weighted_disk(lambda);
        for (double x : {0.3, -0.55}) {
            ComplexPoint z(Complex(x, 0.2));
            double r2 = x * x + 0.04;
            double expect = 0.25 * lambda / ((1.0 - r2) * (1.0 - r2));
            CMat c = curvature_form(k, z, scheme);
            CHECK(std::abs(c(0, 0).real() - expect) < 1e-7 * expect);
        }
    }
}

TEST_CASE("polydisk curvature is diagonal with per factor weights") {
    FDScheme scheme;
    KernelSpec k = KernelSpec::polydisk({1.0, 2.0});
    CMat c = curvature_form(k, ComplexPoint::zero(2), scheme);
    CHECK(std::abs(c(0, 0).real() - 0.25) < 1e-8);
    CHECK(std::abs(c(1, 1).real() - 0.5) < 1e-8);
    CHECK(std::abs(c(0, 1)) < 1e-8);
    CHECK(std::abs(c(1, 0)) < 1e-8);
}

TEST_CASE("ball curvature matches the rational closed form") {
    FDScheme scheme;
    KernelSpec k = KernelSpec::ball(2, 1.0);
    ComplexPoint z{Complex(0.3, 0.0), Complex(0.0, 0.0)};
    // c_ij = (lambda/4) [(1-|z|^2) delta_ij + zbar_i z_j] / (1-|z|^2)^2
    double s = 1.0 - 0.09;
    CMat c = curvature_form(k, z, scheme);
    CHECK(std::abs(c(0, 0).real() - 0.25 * (s + 0.09) / (s * s)) < 1e-7);
    CHECK(std::abs(c(1, 1).real() - 0.25 * s / (s * s)) < 1e-7);
    CHECK(std::abs(c(0, 1)) < 1e-7);
}

TEST_CASE("conjugating the kernel leaves curvature unchanged") {
    // The multiplier contributes log |psi|^2, which the mixed derivative kills.
    FDScheme scheme;
    KernelSpec szego = KernelSpec::weighted_disk(1.0);
    KernelSpec conj = KernelSpec::conjugate(szego, shift_psi());
    for (double x : {0.0, 0.4, -0.6}) {
        ComplexPoint z(Complex(x, 0.1));
        CMat a = curvature_form(szego, z, scheme);
        CMat b = curvature_form(conj, z, scheme);
        CHECK(std::abs(a(0, 0).real() - b(0, 0).real()) < 1e-7);
    }
}

TEST_CASE("curvature matrix is exactly hermitian") {
    FDScheme scheme;
    KernelSpec k = KernelSpec::ball(2, 1.5);
    ComplexPoint z{Complex(0.25, 0.1), Complex(-0.2, 0.3)};
    CMat c = curvature_form(k, z, scheme);
    CHECK(c(0, 1).real() == c(1, 0).real());
    CHECK(c(0, 1).imag() == -c(1, 0).imag());
    CHECK(c(0, 0).imag() == 0.0);
    CHECK(c(1, 1).imag() == 0.0);
}

TEST_CASE("mixed partial of a quadratic log field is exact") {
    // field = exp(|z|^2) gives log field = x^2 + y^2 whose mixed derivative is 1.
    Domain dom = Domain(DomainKind::Disk, 1);
    RealField f = [](const ComplexPoint& p) { return std::exp(std::norm(p[0])); };
    FDScheme scheme;
    Complex d = mixed_partial_log(f, ComplexPoint(Complex(0.2, -0.1)), 0, 0, scheme, dom);
    // Differences of a quadratic are exact; what remains is rounding noise
    // amplified by the 1/h^2 scale of the stencil.
    CHECK(std::abs(d - Complex(1.0, 0.0)) < 5e-9);
}

TEST_CASE("richardson improves the plain stencil") {
    KernelSpec bergman = KernelSpec::weighted_disk(2.0);
    ComplexPoint z(Complex(0.5, 0.0));
    double expect = 0.5 / (0.75 * 0.75);
    FDScheme plain{1e-2, false};
    FDScheme extrapolated{1e-2, true};
    double err_plain = std::abs(curvature_form(bergman, z, plain)(0, 0).real() - expect);
    double err_rich = std::abs(curvature_form(bergman, z, extrapolated)(0, 0).real() - expect);
    CHECK(err_rich < 0.1 * err_plain);
}

TEST_CASE("scheme validation") {
    CHECK_THROWS_AS(validate_scheme(FDScheme{0.5, true}), StepTooLarge);
    CHECK_THROWS_AS(validate_scheme(FDScheme{1e-7, true}), StepTooLarge);
    CHECK_THROWS_AS(validate_scheme(FDScheme{0.0, true}), ValidationError);
    CHECK_THROWS_AS(validate_scheme(FDScheme{-1e-3, true}), ValidationError);
    CHECK_NOTHROW(validate_scheme(FDScheme{1e-2, true}));
    CHECK_NOTHROW(validate_scheme(FDScheme{1e-6, false}));
}

TEST_CASE("stencil shrinks near the boundary then gives up") {
    KernelSpec szego = KernelSpec::weighted_disk(1.0);
    FDScheme scheme{1e-3, true};
    // 0.94 leaves room for the full stencil; 0.9499 does not even after the
    // three permitted halvings.
    CHECK_NOTHROW(curvature_form(szego, ComplexPoint(Complex(0.94, 0.0)), scheme));
    CHECK_THROWS_AS(curvature_form(szego, ComplexPoint(Complex(0.9499, 0.0)), scheme),
                    StencilExitsDomain);
}

TEST_CASE("log of a nonpositive field is rejected") {
    Domain dom = Domain(DomainKind::Disk, 1);
    RealField f = [](const ComplexPoint& p) { return p[0].real(); };
    FDScheme scheme;
    CHECK_THROWS_AS(mixed_partial_log(f, ComplexPoint(Complex(0.0, 0.0)), 0, 0, scheme, dom),
                    NonPositiveField);
}

TEST_CASE("curvature gap equals the modulus route") {
    FDScheme scheme;
    KernelSpec szego = KernelSpec::weighted_disk(1.0);
    KernelSpec bergman = KernelSpec::weighted_disk(2.0);
    for (const auto& z : disk_grid(5, 0.6)) {
        CHECK(modulus_curvature_residual(szego, bergman, z, scheme) < 1e-6);
    }
    // A conjugation gap: both routes must agree that it vanishes.
    KernelSpec conj = KernelSpec::conjugate(szego, shift_psi());
    CHECK(modulus_curvature_residual(szego, conj, ComplexPoint(Complex(0.3, 0.2)), scheme) < 1e-6);

    // Rank two pair through the same identity.
    KernelSpec rank2 = KernelSpec::direct_sum(szego, bergman);
    HoloMatrix psi(2, 2,
                   {HoloExpr::constant(1.0), HoloExpr::constant(0.5) * HoloExpr::variable(0),
                    HoloExpr::constant(0.0), HoloExpr::constant(1.0)},
                   1);
    KernelSpec other = KernelSpec::conjugate(rank2, psi);
    CHECK(modulus_curvature_residual(rank2, other, ComplexPoint(Complex(0.25, -0.3)), scheme) < 1e-6);
}

}  // TEST_SUITE
