#include "qfhm/localization.hpp"

#include "qfhm/linalg.hpp"

namespace qfhm {

CMat grammian(const KernelSpec& spec, const ComplexPoint& z) {
    return hermitian_inverse(spec.eval_diag(z));
}

BasisChange change_of_basis(const CMat& fvals, const CMat& gvals) {
    if (fvals.rows() != gvals.rows() || fvals.cols() != gvals.cols())
        throw DimensionMismatch("change_of_basis: value matrices must share shape");
    if (fvals.rows() != fvals.cols())
        throw DimensionMismatch("change_of_basis: a basis needs as many columns as the fiber dimension");
    double cond = condition_2norm(fvals);
    if (!(cond < kConditionLimit))
        throw SingularBasis("change_of_basis: source basis is singular or near singular");
    BasisChange out;
    out.Y = gvals * fvals.inverse();
    out.X = hermitize(out.Y.adjoint() * out.Y);
    return out;
}

LocalData localized_modulus(const KernelSpec& a, const KernelSpec& b, const ComplexPoint& z) {
    if (a.domain() != b.domain())
        throw DomainMismatch("localized_modulus: kernels live on different domains");
    if (a.rank() != b.rank())
        throw RankMismatch("localized_modulus: kernels have different ranks");
    LocalData d{z, CMat(), CMat(), CMat(), CMat(), CMat(), CMat()};
    d.grammian_a = grammian(a, z);
    d.grammian_b = grammian(b, z);
    CMat ga_inv_sqrt = hermitian_inv_sqrt(d.grammian_a);
    CMat gb_sqrt = hermitian_sqrt(d.grammian_b);
    d.basis_change = gb_sqrt * ga_inv_sqrt;
    d.modulus_sq = hermitize(d.basis_change.adjoint() * d.basis_change);
    d.modulus = hermitian_sqrt(d.modulus_sq);
    CMat ga_inv = hermitian_inverse(d.grammian_a);
    d.co_modulus = hermitian_sqrt(hermitize(gb_sqrt * ga_inv * gb_sqrt));
    return d;
}

RVec modulus_spectrum(const LocalData& d) { return hermitian_eigenvalues(d.modulus); }

}  // namespace qfhm
