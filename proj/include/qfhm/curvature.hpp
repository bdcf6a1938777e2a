#pragma once

#include <functional>

#include "qfhm/kernels.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

// Centered finite-difference configuration for the mixed Wirtinger
// derivatives.  Steps outside [1e-6, 1e-2] are rejected; richardson applies
// one extrapolation level (h and h/2).
struct FDScheme {
    double h = 1e-3;
    bool richardson = true;
};

void validate_scheme(const FDScheme& s);

using RealField = std::function<double(const ComplexPoint&)>;

// d^2/dz_i dzbar_j of log(field) at z by symmetric second differences in the
// four real coordinate pairs.  The field must be strictly positive on the
// stencil (NonPositiveField otherwise).  When the stencil would leave the
// margin-shrunk domain the step is halved up to three times before
// StencilExitsDomain is thrown.  Stencils are evaluated in a canonical
// direction order, so swapping i and j conjugates the result exactly.
Complex mixed_partial_log(const RealField& field, const ComplexPoint& z, int i, int j,
                          const FDScheme& scheme, const Domain& dom);

// n x n matrix of c_ij = 1/4 d^2/dz_i dzbar_j log det K(z, z): the curvature
// of the metric induced by the kernel, with the determinant collapsing the
// fiber for ranks above one.  Hermitian by construction.
CMat curvature_form(const KernelSpec& spec, const ComplexPoint& z, const FDScheme& scheme);

// Residual of the identity linking the curvature gap of a kernel pair to the
// second derivatives of their local modulus:
//     curvature(b) - curvature(a) = -1/4 d dbar log det( modulus^2 )
// with the right side differentiated through the localized eigenvalue
// machinery.  Returns the Frobenius gap between the two routes.
double modulus_curvature_residual(const KernelSpec& a, const KernelSpec& b,
                                  const ComplexPoint& z, const FDScheme& scheme);

}  // namespace qfhm
