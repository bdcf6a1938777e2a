#include "qfhm/kernels.hpp"

#include <cmath>
#include <limits>

namespace qfhm {

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ValidationError("kernel weight must be positive and finite");
}

CMat eval_node(const KernelNode& n, const ComplexPoint& z, const ComplexPoint& w) {
    switch (n.kind) {
        case KernelNode::Kind::WeightedDisk: {
            Complex base = Complex(1.0, 0.0) - z[0] * std::conj(w[0]);
            CMat out(1, 1);
            out(0, 0) = std::pow(base, -n.lambda);
            return out;
        }
        case KernelNode::Kind::Polydisk: {
            Complex v(1.0, 0.0);
            for (std::size_t i = 0; i < n.lambdas.size(); ++i) {
                Complex base = Complex(1.0, 0.0) - z[static_cast<int>(i)] * std::conj(w[static_cast<int>(i)]);
                v *= std::pow(base, -n.lambdas[i]);
            }
            CMat out(1, 1);
            out(0, 0) = v;
            return out;
        }
        case KernelNode::Kind::Ball: {
            Complex ip(0.0, 0.0);
            for (int i = 0; i < z.dim(); ++i) ip += z[i] * std::conj(w[i]);
            CMat out(1, 1);
            out(0, 0) = std::pow(Complex(1.0, 0.0) - ip, -n.lambda);
            return out;
        }
        case KernelNode::Kind::Conjugate: {
            CMat base = eval_node(*n.a, z, w);
            CMat pz = n.psi->eval(z);
            CMat pw = n.psi->eval(w);
            return pz * base * pw.adjoint();
        }
        case KernelNode::Kind::Sum:
            return eval_node(*n.a, z, w) + eval_node(*n.b, z, w);
        case KernelNode::Kind::Product:
            return eval_node(*n.a, z, w).cwiseProduct(eval_node(*n.b, z, w));
        case KernelNode::Kind::DirectSum: {
            CMat ka = eval_node(*n.a, z, w);
            CMat kb = eval_node(*n.b, z, w);
            CMat out = CMat::Zero(ka.rows() + kb.rows(), ka.cols() + kb.cols());
            out.topLeftCorner(ka.rows(), ka.cols()) = ka;
            out.bottomRightCorner(kb.rows(), kb.cols()) = kb;
            return out;
        }
    }
    throw ValidationError("corrupt kernel node");
}

}  // namespace

KernelSpec KernelSpec::weighted_disk(double lambda, double margin) {
    check_lambda(lambda);
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::WeightedDisk;
    n->lambda = lambda;
    n->rank = 1;
    return KernelSpec(Domain::disk(margin), std::move(n));
}

KernelSpec KernelSpec::polydisk(std::vector<double> lambdas, double margin) {
    if (lambdas.empty()) throw ValidationError("polydisk kernel needs at least one weight");
    for (double l : lambdas) check_lambda(l);
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::Polydisk;
    n->lambdas = std::move(lambdas);
    n->rank = 1;
    int dim = static_cast<int>(n->lambdas.size());
    return KernelSpec(Domain::polydisk(dim, margin), std::move(n));
}

KernelSpec KernelSpec::ball(int dim, double lambda, double margin) {
    check_lambda(lambda);
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::Ball;
    n->lambda = lambda;
    n->rank = 1;
    return KernelSpec(Domain::ball(dim, margin), std::move(n));
}

KernelSpec KernelSpec::conjugate(const KernelSpec& base, HoloMatrix psi) {
    const int m = base.rank();
    if (psi.rows() != psi.cols() || psi.rows() != m)
        throw RankMismatch("conjugating matrix must be square of size equal to the kernel rank");
    if (psi.nvars() > base.domain().dim())
        throw DimensionMismatch("conjugating matrix uses more variables than the domain has");
    psi.validate_nonvanishing(base.domain());
    // Invertibility of Psi on the closure keeps the module structure intact.
    HoloExpr d = psi.det();
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& p : base.domain().closed_sample_net())
        lo = std::min(lo, std::abs(d.eval(p)));
    if (!(lo > 1e-8))
        throw SingularBasis("conjugating matrix determinant gets within 1e-8 of zero "
                            "on the closed domain (min modulus " + std::to_string(lo) + ")");
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::Conjugate;
    n->psi = std::make_shared<HoloMatrix>(std::move(psi));
    n->a = base.root_;
    n->rank = m;
    return KernelSpec(base.domain_, std::move(n));
}

namespace {

void check_same_domain(const KernelSpec& a, const KernelSpec& b) {
    if (a.domain() != b.domain())
        throw DomainMismatch("kernel combinators require identical domains");
}

}  // namespace

KernelSpec KernelSpec::sum(const KernelSpec& a, const KernelSpec& b) {
    check_same_domain(a, b);
    if (a.rank() != b.rank()) throw RankMismatch("kernel sum requires equal ranks");
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::Sum;
    n->a = a.root_;
    n->b = b.root_;
    n->rank = a.rank();
    return KernelSpec(a.domain_, std::move(n));
}

KernelSpec KernelSpec::product(const KernelSpec& a, const KernelSpec& b) {
    check_same_domain(a, b);
    if (a.rank() != b.rank()) throw RankMismatch("kernel product requires equal ranks");
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::Product;
    n->a = a.root_;
    n->b = b.root_;
    n->rank = a.rank();
    return KernelSpec(a.domain_, std::move(n));
}

KernelSpec KernelSpec::direct_sum(const KernelSpec& a, const KernelSpec& b) {
    check_same_domain(a, b);
    auto n = std::make_shared<KernelNode>();
    n->kind = KernelNode::Kind::DirectSum;
    n->a = a.root_;
    n->b = b.root_;
    n->rank = a.rank() + b.rank();
    return KernelSpec(a.domain_, std::move(n));
}

CMat KernelSpec::eval(const ComplexPoint& z, const ComplexPoint& w) const {
    domain_.require(z);
    domain_.require(w);
    return eval_node(*root_, z, w);
}

double hermitian_symmetry_residual(const KernelSpec& spec, const ComplexPoint& z,
                                   const ComplexPoint& w) {
    CMat kzw = spec.eval(z, w);
    CMat kwz = spec.eval(w, z);
    return (kzw - kwz.adjoint()).norm();
}

CMat block_kernel_matrix(const KernelSpec& spec, const std::vector<ComplexPoint>& pts) {
    if (pts.empty()) throw ValidationError("point set must be nonempty");
    const int m = spec.rank();
    const int N = static_cast<int>(pts.size());
    CMat G(N * m, N * m);
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
            G.block(j * m, k * m, m, m) = spec.eval(pts[static_cast<std::size_t>(j)],
                                                    pts[static_cast<std::size_t>(k)]);
        }
    }
    return G;
}

double psd_smallest_eigenvalue(const KernelSpec& spec, const std::vector<ComplexPoint>& pts) {
    CMat G = block_kernel_matrix(spec, pts);
    CMat H = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace qfhm
