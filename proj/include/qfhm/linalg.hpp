#pragma once

#include "qfhm/types.hpp"

namespace qfhm {

// Upper bound on acceptable 2-norm condition numbers before operations
// refuse to invert.
inline constexpr double kConditionLimit = 1e12;

// (A + A*) / 2.  Applied after every inversion / square root so that
// Hermitian quantities stay exactly Hermitian in storage.
CMat hermitize(const CMat& A);

// sigma_max / sigma_min via SVD; +inf when singular.
double condition_2norm(const CMat& A);

// Principal square root of a Hermitian positive semidefinite matrix.
// Throws NotPositive when an eigenvalue is materially negative.
CMat hermitian_sqrt(const CMat& A);

// Inverse square root; additionally guards the eigenvalue spread against
// kConditionLimit (IllConditioned).
CMat hermitian_inv_sqrt(const CMat& A);

// Inverse of a Hermitian positive definite matrix with the same guard.
CMat hermitian_inverse(const CMat& A);

// Sorted (ascending) eigenvalues of a Hermitian matrix.
RVec hermitian_eigenvalues(const CMat& A);

}  // namespace qfhm
