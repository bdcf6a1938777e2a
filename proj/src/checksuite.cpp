#include "qfhm/checksuite.hpp"

#include <cmath>
#include <random>

#include "qfhm/curvature.hpp"
#include "qfhm/equivalence.hpp"
#include "qfhm/grid.hpp"
#include "qfhm/kernels.hpp"
#include "qfhm/linalg.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/mapanalysis.hpp"
#include "qfhm/oracle.hpp"

namespace qfhm {

namespace {

std::vector<ComplexPoint> random_points(const Domain& dom, int count, double radius,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double pi = 3.14159265358979323846;
    std::vector<ComplexPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        std::vector<Complex> c(static_cast<std::size_t>(dom.dim()));
        for (auto& x : c) x = std::polar(radius * std::sqrt(uni(rng)), 2.0 * pi * uni(rng));
        ComplexPoint p(std::move(c));
        if (dom.kind() != DomainKind::Polydisk && p.norm2() > radius) continue;
        out.push_back(std::move(p));
    }
    return out;
}

HoloMatrix shift_multiplier() {
    // 1 + z/2: invertible on the closed disk.
    return HoloMatrix::scalar(HoloExpr::constant(1.0) + HoloExpr::constant(0.5) * HoloExpr::variable(0));
}

struct Fixtures {
    KernelSpec szego = KernelSpec::weighted_disk(1.0);
    KernelSpec bergman = KernelSpec::weighted_disk(2.0);
    KernelSpec conj_szego = KernelSpec::conjugate(szego, shift_multiplier());
    KernelSpec rank2 = KernelSpec::direct_sum(szego, bergman);
    KernelSpec sum_k = KernelSpec::sum(szego, bergman);
    KernelSpec prod_k = KernelSpec::product(szego, bergman);
    KernelSpec poly2 = KernelSpec::polydisk({1.0, 2.0});
    KernelSpec ball2 = KernelSpec::ball(2, 1.5);
};

CheckResult make(const std::string& section, const std::string& name, double residual,
                 double tolerance) {
    return CheckResult{section, name, residual, tolerance, residual <= tolerance};
}

void kernel_checks(const Fixtures& f, std::vector<CheckResult>& out) {
    double herm = 0.0;
    const KernelSpec* specs[] = {&f.szego, &f.bergman, &f.conj_szego, &f.rank2,
                                 &f.sum_k, &f.prod_k,  &f.poly2,      &f.ball2};
    std::uint64_t seed = 11;
    for (const KernelSpec* s : specs) {
        auto pts = random_points(s->domain(), 16, 0.9, seed++);
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
            herm = std::max(herm, hermitian_symmetry_residual(*s, pts[i], pts[i + 1]));
    }
    out.push_back(make("kernels", "hermitian_symmetry", herm, 1e-12));

    double neg = 0.0;
    seed = 31;
    for (const KernelSpec* s : specs) {
        auto pts = random_points(s->domain(), s->domain().dim() > 1 ? 8 : 12, 0.8, seed++);
        neg = std::max(neg, std::max(0.0, -psd_smallest_eigenvalue(*s, pts)));
    }
    out.push_back(make("kernels", "block_positivity", neg, 1e-10));
}

void localization_checks(const Fixtures& f, std::vector<CheckResult>& out) {
    const ComplexPoint half(Complex(0.5, 0.0));
    double r1 = std::abs(grammian(f.szego, half)(0, 0) - Complex(0.75, 0.0));
    double r2 = std::abs(grammian(f.bergman, half)(0, 0) - Complex(0.5625, 0.0));
    out.push_back(make("localization", "grammian_reference", std::max(r1, r2), 1e-10));

    LocalData d = localized_modulus(f.szego, f.bergman, ComplexPoint(Complex(0.6, 0.0)));
    out.push_back(make("localization", "modulus_reference",
                       std::abs(d.modulus(0, 0) - Complex(0.8, 0.0)), 1e-10));

    double self_gap = 0.0;
    for (const auto& z : random_points(Domain::disk(), 25, 0.85, 47)) {
        LocalData s = localized_modulus(f.rank2, f.rank2, z);
        self_gap = std::max(self_gap,
                            (s.modulus - CMat::Identity(2, 2)).norm());
    }
    out.push_back(make("localization", "modulus_self_identity", self_gap, 1e-12));

    double rec = 0.0;
    for (const auto& z : random_points(Domain::disk(), 20, 0.85, 53)) {
        LocalData ab = localized_modulus(f.szego, f.bergman, z);
        LocalData ba = localized_modulus(f.bergman, f.szego, z);
        rec = std::max(rec, std::abs(ab.modulus(0, 0) * ba.modulus(0, 0) - Complex(1.0, 0.0)));
    }
    out.push_back(make("localization", "modulus_reciprocal", rec, 1e-10));
}

void oracle_checks(const Fixtures& f, std::vector<CheckResult>& out) {
    auto lattice = square_lattice(5, 0.49);
    SampledModel ma(f.szego, lattice);
    SampledModel mb(f.bergman, lattice);
    out.push_back(make("oracle", "adjoint_restriction",
                       std::max(adjoint_restriction_residual(ma, mb),
                                adjoint_restriction_residual(mb, ma)),
                       1e-8));

    double proj = 0.0;
    for (const auto& z : {ComplexPoint(Complex(0.0, 0.0)), ComplexPoint(Complex(0.5, 0.0))}) {
        SampledModel m(f.szego, {ComplexPoint(Complex(0.0, 0.0)), ComplexPoint(Complex(0.5, 0.0))});
        proj = std::max(proj, (model_projection_grammian(m, z) - grammian(f.szego, z)).norm());
    }
    out.push_back(make("oracle", "projection_grammian", proj, 1e-8));
}

void curvature_checks(const Fixtures& f, std::vector<CheckResult>& out) {
    FDScheme scheme;
    const ComplexPoint zero(Complex(0.0, 0.0));
    double c1 = std::abs(curvature_form(f.szego, zero, scheme)(0, 0) - Complex(0.25, 0.0));
    double c2 = std::abs(curvature_form(f.bergman, zero, scheme)(0, 0) - Complex(0.5, 0.0));
    out.push_back(make("curvature", "disk_closed_forms", std::max(c1, c2), 1e-6));

    double ident = 0.0;
    for (const auto& z : disk_grid(5, 0.6))
        ident = std::max(ident, modulus_curvature_residual(f.szego, f.bergman, z, scheme));
    out.push_back(make("curvature", "modulus_curvature_identity", ident, 1e-6));
}

void equivalence_checks(const Fixtures& f, std::vector<CheckResult>& out) {
    FDScheme scheme;
    auto grid = disk_grid(9, 0.6);
    const double tol = 1e-5;

    EquivalenceVerdict same = decide_rank_one(f.szego, f.conj_szego, grid, tol, scheme);
    CheckResult conj = make("equivalence", "conjugation_invariance", same.max_residual, tol);
    conj.pass = conj.pass && same.verdict == Verdict::Equivalent;
    out.push_back(conj);

    EquivalenceVerdict diff = decide_rank_one(f.szego, f.bergman, grid, tol, scheme);
    double witness_gap = diff.witness ? std::abs(diff.witness_residual - 1.0) : 1.0;
    CheckResult det = make("equivalence", "weight_gap_detection", witness_gap, 1e-4);
    det.pass = det.pass && diff.verdict == Verdict::Inequivalent;
    out.push_back(det);

    HoloExpr inv_shift = HoloExpr::quotient(
        HoloExpr::constant(1.0),
        HoloExpr::constant(1.0) + HoloExpr::constant(0.5) * HoloExpr::variable(0),
        Domain::disk());
    double fact = factorization_residual(f.szego, f.conj_szego, HoloMatrix::scalar(inv_shift),
                                         disk_grid(7, 0.7));
    out.push_back(make("equivalence", "factorization_certificate", fact, 1e-10));
}

void mapanalysis_checks(std::vector<CheckResult>& out) {
    HoloMatrix diag_map(2, 2,
                        {HoloExpr::variable(0), HoloExpr::constant(0.0), HoloExpr::constant(0.0),
                         HoloExpr::constant(1.0)});
    RankProfile prof = rank_profile(diag_map, disk_grid(41, 0.8));
    double locus_span = 0.0;
    bool ok = prof.generic_rank == 2 && prof.singular_sets.size() == 1 &&
              prof.singular_sets[0].rank == 1 &&
              !prof.singular_sets[0].interior_at_grid_resolution;
    if (ok)
        for (std::size_t i : prof.singular_sets[0].point_indices)
            locus_span = std::max(locus_span, prof.points[i].z.norm2());
    else
        locus_span = 1.0;
    CheckResult thin = make("mapanalysis", "thin_singular_locus", locus_span, 1e-12);
    thin.pass = thin.pass && ok;
    out.push_back(thin);
}

}  // namespace

std::vector<CheckResult> run_checks(bool oracle_only) {
    Fixtures f;
    std::vector<CheckResult> out;
    if (oracle_only) {
        oracle_checks(f, out);
        return out;
    }
    kernel_checks(f, out);
    localization_checks(f, out);
    oracle_checks(f, out);
    curvature_checks(f, out);
    equivalence_checks(f, out);
    mapanalysis_checks(out);
    return out;
}

}  // namespace qfhm
