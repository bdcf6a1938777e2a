#include <doctest.h>

#include <cmath>

#include "qfhm/grid.hpp"
#include "qfhm/mapanalysis.hpp"

using namespace qfhm;

namespace {

HoloMatrix diag_z_one() {
    return HoloMatrix(2, 2,
                      {HoloExpr::variable(0), HoloExpr::constant(0.0), HoloExpr::constant(0.0),
                       HoloExpr::constant(1.0)},
                      1);
}

}  // namespace

TEST_SUITE("mapanalysis") {

TEST_CASE("a single rank drop is isolated to the center point") {
    auto grid = disk_grid(21, 0.8);
    RankProfile p = rank_profile(diag_z_one(), grid);
    CHECK(p.generic_rank == 2);
    REQUIRE(p.singular_sets.size() == 1);
    const SingularSet& s = p.singular_sets[0];
    CHECK(s.rank == 1);
    REQUIRE(s.point_indices.size() == 1);
    const RankPoint& rp = p.points[s.point_indices[0]];
    CHECK(rp.z[0].real() == 0.0);
    CHECK(rp.z[0].imag() == 0.0);
    CHECK(rp.rank == 1);
    CHECK(rp.smin == 0.0);
    CHECK_FALSE(s.interior_at_grid_resolution);
    CHECK(s.bbox_re_min[0] == 0.0);
    CHECK(s.bbox_re_max[0] == 0.0);
}

TEST_CASE("the locus stays a single point as the grid refines") {
    std::size_t sizes[3];
    int i = 0;
    for (int n : {21, 41, 81}) {
        auto grid = disk_grid(n, 0.8);
        RankProfile p = rank_profile(diag_z_one(), grid);
        REQUIRE(p.singular_sets.size() == 1);
        sizes[i++] = p.singular_sets[0].point_indices.size();
        CHECK(p.singular_sets[0].point_indices.size() == 1);
    }
    CHECK(sizes[0] == sizes[1]);
    CHECK(sizes[1] == sizes[2]);
}

TEST_CASE("an identically zero map has no strata below its generic rank") {
    HoloMatrix zero(2, 2,
                    {HoloExpr::constant(0.0), HoloExpr::constant(0.0), HoloExpr::constant(0.0),
                     HoloExpr::constant(0.0)},
                    1);
    RankProfile p = rank_profile(zero, disk_grid(9, 0.5));
    CHECK(p.generic_rank == 0);
    CHECK(p.singular_sets.empty());
    for (const auto& rp : p.points) CHECK(rp.rank == 0);
}

TEST_CASE("a fat cutoff produces an area stratum flagged as interior") {
    // With tol = 0.5 the rank counts singular values above 0.5, so the map
    // diag(z, 1) drops rank on the whole subdisk |z| <= 0.5.
    auto grid = disk_grid(21, 0.8);
    RankProfile p = rank_profile(diag_z_one(), grid, 0.5);
    CHECK(p.generic_rank == 2);
    REQUIRE(p.singular_sets.size() == 1);
    const SingularSet& s = p.singular_sets[0];
    CHECK(s.rank == 1);
    CHECK(s.point_indices.size() > 20);
    CHECK(s.interior_at_grid_resolution);
    CHECK(s.bbox_re_min[0] < -0.4);
    CHECK(s.bbox_re_max[0] > 0.4);
    CHECK(s.bbox_im_max[0] > 0.4);
}

TEST_CASE("rank counts respect the relative cutoff floor") {
    // A uniformly tiny map still has full rank because the cutoff floor is
    // driven by max(sigma_max, 1).
    HoloMatrix tiny(1, 1, {HoloExpr::constant(Complex(1e-12, 0.0))}, 1);
    RankProfile p = rank_profile(tiny, disk_grid(5, 0.4), 1e-9);
    CHECK(p.generic_rank == 0);
    for (const auto& rp : p.points) {
        CHECK(rp.rank == 0);
        CHECK(rp.smin == doctest::Approx(1e-12));
    }
}

TEST_CASE("two variable maps stratify along a coordinate hyperplane") {
    // diag(z1, 1) over a polydisk grid drops rank exactly on the slice z1 = 0.
    HoloMatrix psi(2, 2,
                   {HoloExpr::variable(0), HoloExpr::constant(0.0), HoloExpr::constant(0.0),
                    HoloExpr::constant(1.0)},
                   2);
    Domain dom(DomainKind::Polydisk, 2);
    auto grid = domain_grid(dom, {5, 5});
    RankProfile p = rank_profile(psi, grid);
    CHECK(p.generic_rank == 2);
    REQUIRE(p.singular_sets.size() == 1);
    // Odd cell counts place one sample per variable exactly at that
    // variable's origin, so the slice z1 = 0 is populated.
    std::size_t expect = 0;
    for (const auto& q : grid)
        if (q[0] == Complex(0.0, 0.0)) ++expect;
    CHECK(expect > 0);
    CHECK(p.singular_sets[0].point_indices.size() == expect);
    CHECK_FALSE(p.singular_sets[0].interior_at_grid_resolution);
}

TEST_CASE("input guards") {
    HoloMatrix rect(1, 2, {HoloExpr::variable(0), HoloExpr::constant(1.0)}, 1);
    CHECK_THROWS_AS(rank_profile(rect, disk_grid(5, 0.4)), DimensionMismatch);
    CHECK_THROWS_AS(rank_profile(diag_z_one(), {}), ValidationError);
    CHECK_THROWS_AS(rank_profile(diag_z_one(), disk_grid(5, 0.4), 0.0), ValidationError);

    std::vector<ComplexPoint> mixed = {ComplexPoint(Complex(0.1, 0.0)),
                                       ComplexPoint{Complex(0.1, 0.0), Complex(0.0, 0.0)}};
    CHECK_THROWS_AS(rank_profile(diag_z_one(), mixed), DimensionMismatch);
}

}  // TEST_SUITE
