#include "qfhm/linalg.hpp"

#include <cmath>
#include <limits>

#include "qfhm/errors.hpp"

namespace qfhm {

namespace {

void require_square(const CMat& A, const char* what) {
    if (A.rows() != A.cols()) throw DimensionMismatch(std::string(what) + ": matrix not square");
    if (A.rows() == 0) throw DimensionMismatch(std::string(what) + ": empty matrix");
}

Eigen::SelfAdjointEigenSolver<CMat> eig(const CMat& A, const char* what) {
    require_square(A, what);
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(A));
    if (es.info() != Eigen::Success)
        throw IllConditioned(std::string(what) + ": eigendecomposition failed");
    return es;
}

}  // namespace

CMat hermitize(const CMat& A) { return 0.5 * (A + A.adjoint()); }

double condition_2norm(const CMat& A) {
    Eigen::JacobiSVD<CMat> svd(A);
    double smax = svd.singularValues().maxCoeff();
    double smin = svd.singularValues().minCoeff();
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

RVec hermitian_eigenvalues(const CMat& A) {
    return eig(A, "hermitian_eigenvalues").eigenvalues();
}

CMat hermitian_sqrt(const CMat& A) {
    auto es = eig(A, "hermitian_sqrt");
    RVec ev = es.eigenvalues();
    double top = std::max(1.0, ev.maxCoeff());
    if (ev.minCoeff() < -1e-10 * top)
        throw NotPositive("hermitian_sqrt: matrix has negative eigenvalue " +
                          std::to_string(ev.minCoeff()));
    RVec s = ev.cwiseMax(0.0).cwiseSqrt();
    return hermitize(es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint());
}

CMat hermitian_inv_sqrt(const CMat& A) {
    auto es = eig(A, "hermitian_inv_sqrt");
    RVec ev = es.eigenvalues();
    double top = std::max(1.0, ev.maxCoeff());
    if (ev.minCoeff() < -1e-10 * top)
        throw NotPositive("hermitian_inv_sqrt: matrix has negative eigenvalue " +
                          std::to_string(ev.minCoeff()));
    double lo = ev.minCoeff(), hi = ev.maxCoeff();
    if (lo <= 0.0 || hi / lo > kConditionLimit)
        throw IllConditioned("hermitian_inv_sqrt: eigenvalue spread exceeds condition limit");
    RVec s = ev.cwiseSqrt().cwiseInverse();
    return hermitize(es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint());
}

CMat hermitian_inverse(const CMat& A) {
    auto es = eig(A, "hermitian_inverse");
    RVec ev = es.eigenvalues();
    double lo = ev.cwiseAbs().minCoeff(), hi = ev.cwiseAbs().maxCoeff();
    if (lo <= 0.0 || hi / lo > kConditionLimit)
        throw IllConditioned("hermitian_inverse: condition number exceeds limit");
    RVec s = ev.cwiseInverse();
    return hermitize(es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint());
}

}  // namespace qfhm
