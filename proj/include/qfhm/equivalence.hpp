#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfhm/curvature.hpp"
#include "qfhm/holo.hpp"
#include "qfhm/kernels.hpp"

namespace qfhm {

enum class Verdict { Equivalent, Inequivalent, Inconclusive };

std::string verdict_name(Verdict v);

struct EquivalenceVerdict {
    Verdict verdict = Verdict::Inconclusive;
    double max_residual = 0.0;
    std::optional<ComplexPoint> witness;  // empty for equivalent verdicts
    double witness_residual = 0.0;
    int grid_size = 0;
    double tolerance = 0.0;
};

// Rank-one equivalence test via the curvature-style invariant: at each grid
// point the statistic
//     r(z) = | d^2/dz_i dzbar_j log( K_a(z,z) / K_b(z,z) ) |_F
// vanishes identically when the kernels differ by conjugation with a
// nonvanishing holomorphic function.  Grid points are scanned in order of
// increasing distance from the origin; the first point with r above
// 10 * tol becomes the inequivalence witness.  A maximum at or below tol
// means equivalent, anything stuck in between is reported inconclusive with
// the largest offender as witness.
EquivalenceVerdict decide_rank_one(const KernelSpec& a, const KernelSpec& b,
                                   const std::vector<ComplexPoint>& grid, double tol,
                                   const FDScheme& scheme);

// Conservative matrix-level screen: compares the localized Grammians of the
// two kernels pointwise.  Equal Grammians on the whole grid give an
// equivalent verdict; any gap only downgrades to inconclusive, since
// different-looking Grammians may still be related by a basis change.
EquivalenceVerdict grammian_equality(const KernelSpec& a, const KernelSpec& b,
                                     const std::vector<ComplexPoint>& grid, double tol);

// Largest Frobenius gap over the grid between Psi(z)* Psi(z) for a candidate
// intertwining multiplier and the squared local modulus of the pair.  Zero
// (to roundoff) certifies that the candidate accounts for the whole modulus.
double factorization_residual(const KernelSpec& a, const KernelSpec& b, const HoloMatrix& psi,
                              const std::vector<ComplexPoint>& grid);

}  // namespace qfhm
