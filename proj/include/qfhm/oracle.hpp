#pragma once

#include <vector>

#include "qfhm/kernels.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

// Finite-sample realization of a kernel's function space: the span of the
// dual sections at a fixed sample set, with the block kernel matrix as its
// Grammian.  Vectors are represented by their value tuples at the samples;
// inner products go through the (factorized) Grammian, so every identity
// checked against this model exercises an independent numeric route.
class SampledModel {
public:
    SampledModel(KernelSpec spec, std::vector<ComplexPoint> samples);

    const KernelSpec& spec() const { return spec_; }
    const std::vector<ComplexPoint>& samples() const { return samples_; }
    const CMat& gram() const { return gram_; }
    int fiber_rank() const { return spec_.rank(); }
    int size() const { return static_cast<int>(samples_.size()); }

    // True when a diagonal jitter had to be added to factor the Grammian.
    bool jittered() const { return jittered_; }
    double jitter() const { return jitter_; }

    // Solve gram * x = rhs through the stored Cholesky factor.
    CMat solve(const CMat& rhs) const;

    // <u, v> = v* gram^{-1} u for value tuples of length size() * fiber_rank().
    Complex inner(const CVec& u, const CVec& v) const;

    // Stacked value columns of the dual sections at z: column i holds
    // K(w_j, z) e_i for all samples w_j.
    CMat dual_section_values(const ComplexPoint& z) const;

private:
    KernelSpec spec_;
    std::vector<ComplexPoint> samples_;
    CMat gram_;
    Eigen::LLT<CMat> llt_;
    bool jittered_ = false;
    double jitter_ = 0.0;
};

// Residual of the adjoint-restriction identity between two models over the
// same samples: pushing each dual section of b through the adjoint of the
// value-wise identification must land exactly on the matching dual section
// of a.  Returns the largest column norm gap.
double adjoint_restriction_residual(const SampledModel& a, const SampledModel& b);

// Grammian of the canonical constant sections at z recovered entirely inside
// the sampled model (projection onto the dual sections at z, then inversion
// of the projected frame).  For z inside the sample set this reproduces
// K(z,z)^{-1} exactly in exact arithmetic.
CMat model_projection_grammian(const SampledModel& m, const ComplexPoint& z);

}  // namespace qfhm
