#include <doctest.h>

#include <cmath>

#include "qfhm/grid.hpp"
#include "qfhm/linalg.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/oracle.hpp"

using namespace qfhm;

namespace {

std::vector<ComplexPoint> two_points() {
    return {ComplexPoint(Complex(0.0, 0.0)), ComplexPoint(Complex(0.5, 0.0))};
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("frozen grammians on a two point sample") {
    SampledModel szego(KernelSpec::weighted_disk(1.0), two_points());
    CMat gs(2, 2);
    gs << Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(4.0 / 3.0, 0);
    CHECK((szego.gram() - gs).norm() < 1e-14);
    CHECK_FALSE(szego.jittered());

    SampledModel bergman(KernelSpec::weighted_disk(2.0), two_points());
    CMat gb(2, 2);
    gb << Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(16.0 / 9.0, 0);
    CHECK((bergman.gram() - gb).norm() < 1e-14);
}

TEST_CASE("inner products go through the inverse grammian") {
    SampledModel szego(KernelSpec::weighted_disk(1.0), two_points());
    // gram = [[1,1],[1,4/3]], det = 1/3, so gram^{-1} = [[4,-3],[-3,3]].
    CVec e1 = CVec::Zero(2), e2 = CVec::Zero(2);
    e1(0) = 1.0;
    e2(1) = 1.0;
    CHECK(std::abs(szego.inner(e1, e1) - Complex(4.0, 0.0)) < 1e-12);
    CHECK(std::abs(szego.inner(e2, e2) - Complex(3.0, 0.0)) < 1e-12);
    CHECK(std::abs(szego.inner(e1, e2) - Complex(-3.0, 0.0)) < 1e-12);
    CHECK(std::abs(szego.inner(e1, e2) - std::conj(szego.inner(e2, e1))) < 1e-12);
}

TEST_CASE("dual sections have reproducing inner products") {
    SampledModel m(KernelSpec::weighted_disk(2.0), two_points());
    // <k_w, k_z> must equal K(z, w) when both points are samples.
    CMat v0 = m.dual_section_values(m.samples()[0]);
    CMat v1 = m.dual_section_values(m.samples()[1]);
    Complex k01 = m.spec().eval(m.samples()[1], m.samples()[0])(0, 0);
    CHECK(std::abs(m.inner(v0.col(0), v1.col(0)) - k01) < 1e-12);
    Complex k00 = m.spec().eval_diag(m.samples()[0])(0, 0);
    CHECK(std::abs(m.inner(v0.col(0), v0.col(0)) - k00) < 1e-12);
}

TEST_CASE("adjoint restriction identity holds on a lattice") {
    auto samples = square_lattice(5, 0.49);
    SampledModel a(KernelSpec::weighted_disk(1.0), samples);
    SampledModel b(KernelSpec::weighted_disk(2.0), samples);
    CHECK(adjoint_restriction_residual(a, b) < 1e-8);
    CHECK(adjoint_restriction_residual(b, a) < 1e-8);
    CHECK(adjoint_restriction_residual(a, a) < 1e-10);
}

TEST_CASE("projection grammian is exact at sample points") {
    SampledModel m(KernelSpec::weighted_disk(1.0), two_points());
    CMat g = model_projection_grammian(m, ComplexPoint(Complex(0.5, 0.0)));
    CHECK(std::abs(g(0, 0) - Complex(0.75, 0.0)) < 1e-10);

    SampledModel rank2(
        KernelSpec::direct_sum(KernelSpec::weighted_disk(1.0), KernelSpec::weighted_disk(2.0)),
        two_points());
    CMat g2 = model_projection_grammian(rank2, ComplexPoint(Complex(0.5, 0.0)));
    CMat direct = grammian(rank2.spec(), ComplexPoint(Complex(0.5, 0.0)));
    CHECK((g2 - direct).norm() < 1e-10);
}

TEST_CASE("construction guards") {
    KernelSpec szego = KernelSpec::weighted_disk(1.0);
    std::vector<ComplexPoint> dup = {ComplexPoint(Complex(0.1, 0.0)),
                                     ComplexPoint(Complex(0.1, 0.0))};
    CHECK_THROWS_AS(SampledModel(szego, dup), DuplicatePoints);

    std::vector<ComplexPoint> near_dup = {ComplexPoint(Complex(0.1, 0.0)),
                                          ComplexPoint(Complex(0.1 + 5e-13, 0.0))};
    CHECK_THROWS_AS(SampledModel(szego, near_dup), DuplicatePoints);

    CHECK_THROWS_AS(SampledModel(szego, {}), ValidationError);

    std::vector<ComplexPoint> big;
    for (int i = 0; i < 2001; ++i)
        big.push_back(ComplexPoint(Complex(-0.45 + 0.9 * i / 2000.0, 0.0)));
    CHECK_THROWS_AS(SampledModel(szego, big), ValidationError);

    std::vector<ComplexPoint> outside = {ComplexPoint(Complex(0.97, 0.0))};
    CHECK_THROWS_AS(SampledModel(szego, outside), PointOutsideDomain);
}

TEST_CASE("model pairing guards") {
    auto samples = two_points();
    SampledModel a(KernelSpec::weighted_disk(1.0), samples);
    SampledModel rank2(
        KernelSpec::direct_sum(KernelSpec::weighted_disk(1.0), KernelSpec::weighted_disk(2.0)),
        samples);
    CHECK_THROWS_AS(adjoint_restriction_residual(a, rank2), RankMismatch);

    std::vector<ComplexPoint> shifted = {ComplexPoint(Complex(0.0, 0.0)),
                                         ComplexPoint(Complex(0.4, 0.0))};
    SampledModel b(KernelSpec::weighted_disk(1.0), shifted);
    CHECK_THROWS_AS(adjoint_restriction_residual(a, b), SampleMismatch);
}

TEST_CASE("solve inverts the grammian") {
    auto samples = square_lattice(3, 0.4);
    SampledModel m(KernelSpec::weighted_disk(2.0), samples);
    CMat rhs = CMat::Identity(m.size(), m.size());
    CMat x = m.solve(rhs);
    CHECK((m.gram() * x - rhs).norm() < 1e-9);
}

}  // TEST_SUITE
