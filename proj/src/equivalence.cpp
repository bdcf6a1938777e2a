#include "qfhm/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qfhm/linalg.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/parallel.hpp"

namespace qfhm {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equivalent: return "equivalent";
        case Verdict::Inequivalent: return "inequivalent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

void check_pair(const KernelSpec& a, const KernelSpec& b) {
    if (a.domain() != b.domain()) throw DomainMismatch("kernel pair lives on different domains");
    if (a.rank() != b.rank()) throw RankMismatch("kernel pair has different ranks");
}

// Scan order: distance from the origin, ties broken by original index.  This
// keeps witnesses deterministic and biased toward the center of the domain,
// where the statistic is best conditioned.
std::vector<std::size_t> center_first_order(const std::vector<ComplexPoint>& grid) {
    std::vector<std::size_t> idx(grid.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&grid](std::size_t i, std::size_t j) {
        return grid[i].norm2() < grid[j].norm2();
    });
    return idx;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("tolerance must be positive");
}

}  // namespace

EquivalenceVerdict decide_rank_one(const KernelSpec& a, const KernelSpec& b,
                                   const std::vector<ComplexPoint>& grid, double tol,
                                   const FDScheme& scheme) {
    check_pair(a, b);
    if (a.rank() != 1) throw RankMismatch("rank-one equivalence test requires rank-one kernels");
    check_tol(tol);
    validate_scheme(scheme);
    if (grid.empty()) throw ValidationError("equivalence grid must be nonempty");

    RealField ratio = [&a, &b](const ComplexPoint& p) {
        double ka = a.eval_diag(p)(0, 0).real();
        double kb = b.eval_diag(p)(0, 0).real();
        if (!(ka > 0.0) || !(kb > 0.0))
            throw NonPositiveField("kernel diagonal is not positive on the grid");
        return ka / kb;
    };

    const int n = a.domain().dim();
    std::vector<double> res(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t i) {
        CMat d(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c) {
                Complex v = mixed_partial_log(ratio, grid[i], r, c, scheme, a.domain());
                d(r, c) = v;
                if (r != c) d(c, r) = std::conj(v);
            }
        res[i] = d.norm();
    });

    EquivalenceVerdict out;
    out.grid_size = static_cast<int>(grid.size());
    out.tolerance = tol;
    out.max_residual = *std::max_element(res.begin(), res.end());

    const auto order = center_first_order(grid);
    for (std::size_t i : order) {
        if (res[i] > 10.0 * tol) {
            out.verdict = Verdict::Inequivalent;
            out.witness = grid[i];
            out.witness_residual = res[i];
            return out;
        }
    }
    if (out.max_residual <= tol) {
        out.verdict = Verdict::Equivalent;
        out.witness_residual = out.max_residual;
        return out;
    }
    out.verdict = Verdict::Inconclusive;
    for (std::size_t i : order) {
        if (res[i] == out.max_residual) {
            out.witness = grid[i];
            out.witness_residual = res[i];
            break;
        }
    }
    return out;
}

EquivalenceVerdict grammian_equality(const KernelSpec& a, const KernelSpec& b,
                                     const std::vector<ComplexPoint>& grid, double tol) {
    check_pair(a, b);
    check_tol(tol);
    if (grid.empty()) throw ValidationError("equivalence grid must be nonempty");

    std::vector<double> res(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t i) {
        CMat ga = grammian(a, grid[i]);
        CMat gb = grammian(b, grid[i]);
        res[i] = (ga - gb).norm();
    });

    EquivalenceVerdict out;
    out.grid_size = static_cast<int>(grid.size());
    out.tolerance = tol;
    out.max_residual = *std::max_element(res.begin(), res.end());
    if (out.max_residual <= tol) {
        out.verdict = Verdict::Equivalent;
        out.witness_residual = out.max_residual;
        return out;
    }
    out.verdict = Verdict::Inconclusive;
    for (std::size_t i : center_first_order(grid)) {
        if (res[i] == out.max_residual) {
            out.witness = grid[i];
            out.witness_residual = res[i];
            break;
        }
    }
    return out;
}

double factorization_residual(const KernelSpec& a, const KernelSpec& b, const HoloMatrix& psi,
                              const std::vector<ComplexPoint>& grid) {
    check_pair(a, b);
    if (psi.rows() != psi.cols() || psi.rows() != a.rank())
        throw RankMismatch("candidate multiplier must be square of the kernel rank");
    if (grid.empty()) throw ValidationError("factorization grid must be nonempty");
    std::vector<double> res(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t i) {
        LocalData d = localized_modulus(a, b, grid[i]);
        CMat p = psi.eval(grid[i]);
        res[i] = (hermitize(p.adjoint() * p) - d.modulus_sq).norm();
    });
    return *std::max_element(res.begin(), res.end());
}

}  // namespace qfhm
