#pragma once

#include <memory>
#include <vector>

#include "qfhm/domain.hpp"
#include "qfhm/holo.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

// Internal parse tree of a kernel specification.  Exposed for serialization;
// library users normally go through KernelSpec.
struct KernelNode {
    enum class Kind { WeightedDisk, Polydisk, Ball, Conjugate, Sum, Product, DirectSum };
    Kind kind = Kind::WeightedDisk;
    double lambda = 0.0;               // WeightedDisk, Ball
    std::vector<double> lambdas;       // Polydisk
    std::shared_ptr<const HoloMatrix> psi;  // Conjugate
    std::shared_ptr<const KernelNode> a, b;
    int rank = 1;
};

// An m x m matrix-valued positive definite kernel K(z, w) on a reference
// domain, holomorphic in z and antiholomorphic in w.  Built from weighted
// disk / polydisk / ball families and closed under conjugation by a
// holomorphic matrix function, sums, entrywise products and direct sums.
class KernelSpec {
public:
    static KernelSpec weighted_disk(double lambda, double margin = 0.05);
    static KernelSpec polydisk(std::vector<double> lambdas, double margin = 0.05);
    static KernelSpec ball(int dim, double lambda, double margin = 0.05);

    // K'(z, w) = Psi(z) K(z, w) Psi(w)^*.  Psi must be square of size
    // rank(base) with det bounded away from zero on the closed domain.
    static KernelSpec conjugate(const KernelSpec& base, HoloMatrix psi);
    static KernelSpec sum(const KernelSpec& a, const KernelSpec& b);
    static KernelSpec product(const KernelSpec& a, const KernelSpec& b);
    static KernelSpec direct_sum(const KernelSpec& a, const KernelSpec& b);

    const Domain& domain() const { return domain_; }
    int rank() const { return root_->rank; }

    // Kernel value at (z, w); both points must lie in the margin-shrunk domain.
    CMat eval(const ComplexPoint& z, const ComplexPoint& w) const;
    CMat eval_diag(const ComplexPoint& z) const { return eval(z, z); }

    std::shared_ptr<const KernelNode> root() const { return root_; }

private:
    KernelSpec(Domain d, std::shared_ptr<const KernelNode> r)
        : domain_(std::move(d)), root_(std::move(r)) {}
    Domain domain_;
    std::shared_ptr<const KernelNode> root_;
};

// | K(z, w) - K(w, z)^* |_F; should sit at roundoff level for any spec.
double hermitian_symmetry_residual(const KernelSpec& spec, const ComplexPoint& z,
                                   const ComplexPoint& w);

// Nm x Nm block matrix [ K(w_j, w_k) ]_{j,k} over a finite point set.
CMat block_kernel_matrix(const KernelSpec& spec, const std::vector<ComplexPoint>& pts);

// Smallest eigenvalue of the block matrix above (Hermitian part); positive
// definiteness of the kernel makes this >= 0 up to roundoff.
double psd_smallest_eigenvalue(const KernelSpec& spec, const std::vector<ComplexPoint>& pts);

}  // namespace qfhm
