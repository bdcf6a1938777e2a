#pragma once

#include "qfhm/kernels.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

// Grammian of the canonical generating sections localized at z, which for a
// kernel realization is K(z, z)^{-1}.
CMat grammian(const KernelSpec& spec, const ComplexPoint& z);

struct BasisChange {
    CMat Y;  // g = Y f columnwise
    CMat X;  // Y* Y
};

// Given two bases of the same fiber as value-vector columns (one basis per
// column), return the transition matrix Y with gvals = Y * fvals and the
// Hermitian product X = Y* Y.
BasisChange change_of_basis(const CMat& fvals, const CMat& gvals);

// Local comparison data for a pair of kernels at one point.  All matrices
// are expressed in the orthonormal coordinates of the first factor, which
// makes the stored modulus Hermitian positive definite while keeping its
// spectrum equal to sqrt(eig(G_a^{-1} G_b)).
struct LocalData {
    ComplexPoint z;
    CMat grammian_a;    // G  = K_a(z,z)^{-1}
    CMat grammian_b;    // G' = K_b(z,z)^{-1}
    CMat basis_change;  // Y  = G'^{1/2} G^{-1/2}
    CMat modulus_sq;    // X  = Y* Y = G^{-1/2} G' G^{-1/2}
    CMat modulus;       // X^{1/2}
    CMat co_modulus;    // (G'^{1/2} G^{-1} G'^{1/2})^{1/2}
};

LocalData localized_modulus(const KernelSpec& a, const KernelSpec& b, const ComplexPoint& z);

// Eigenvalues of the modulus, ascending.
RVec modulus_spectrum(const LocalData& d);

}  // namespace qfhm
