#include "qfhm/oracle.hpp"

#include <cmath>

#include "qfhm/linalg.hpp"

namespace qfhm {

namespace {

constexpr int kSampleBudget = 2000;

void check_samples(const KernelSpec& spec, const std::vector<ComplexPoint>& samples) {
    if (samples.empty()) throw ValidationError("sampled model needs at least one point");
    const long total = static_cast<long>(samples.size()) * spec.rank();
    if (total > kSampleBudget)
        throw ValidationError("sampled model size " + std::to_string(total) +
                              " exceeds the budget of " + std::to_string(kSampleBudget));
    for (const auto& p : samples) spec.domain().require(p);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            double d = 0.0;
            for (int v = 0; v < samples[i].dim(); ++v) d += std::norm(samples[i][v] - samples[j][v]);
            if (std::sqrt(d) < 1e-12)
                throw DuplicatePoints("sampled model points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
        }
    }
}

}  // namespace

SampledModel::SampledModel(KernelSpec spec, std::vector<ComplexPoint> samples)
    : spec_(std::move(spec)), samples_(std::move(samples)) {
    check_samples(spec_, samples_);
    gram_ = hermitize(block_kernel_matrix(spec_, samples_));

    Eigen::SelfAdjointEigenSolver<CMat> es(gram_, Eigen::EigenvaluesOnly);
    if (es.info() == Eigen::Success && es.eigenvalues().minCoeff() < -1e-6)
        throw NotPositive("sampled Grammian has eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()));

    llt_.compute(gram_);
    if (llt_.info() != Eigen::Success) {
        // One shot of trace-scaled diagonal jitter; the event stays visible on
        // the model so downstream reports can flag it.
        jitter_ = 1e-12 * gram_.trace().real() / static_cast<double>(gram_.rows());
        jittered_ = true;
        CMat bumped = gram_ + jitter_ * CMat::Identity(gram_.rows(), gram_.cols());
        llt_.compute(bumped);
        if (llt_.info() != Eigen::Success)
            throw IllConditioned("sampled Grammian cannot be factored even with jitter");
    }
}

CMat SampledModel::solve(const CMat& rhs) const {
    if (rhs.rows() != gram_.rows())
        throw DimensionMismatch("solve: right-hand side has wrong height");
    return llt_.solve(rhs);
}

Complex SampledModel::inner(const CVec& u, const CVec& v) const {
    if (u.size() != gram_.rows() || v.size() != gram_.rows())
        throw DimensionMismatch("inner: value tuples have wrong length");
    CVec x = llt_.solve(u);
    return (v.adjoint() * x)(0, 0);
}

CMat SampledModel::dual_section_values(const ComplexPoint& z) const {
    const int m = fiber_rank();
    const int N = size();
    CMat V(N * m, m);
    for (int j = 0; j < N; ++j)
        V.block(j * m, 0, m, m) = spec_.eval(samples_[static_cast<std::size_t>(j)], z);
    return V;
}

double adjoint_restriction_residual(const SampledModel& a, const SampledModel& b) {
    if (a.fiber_rank() != b.fiber_rank())
        throw RankMismatch("models have different fiber ranks");
    if (a.size() != b.size())
        throw SampleMismatch("models are built over different sample counts");
    for (int j = 0; j < a.size(); ++j)
        if (!(a.samples()[static_cast<std::size_t>(j)] == b.samples()[static_cast<std::size_t>(j)]))
            throw SampleMismatch("models are built over different sample points");

    // Adjoint of the value-wise identification b -> a: v |-> gram_a * gram_b^{-1} v.
    // Applied to a dual-section column of b it must reproduce the matching
    // column of gram_a.
    const CMat pushed = a.gram() * b.solve(b.gram());
    double worst = 0.0;
    for (int c = 0; c < pushed.cols(); ++c)
        worst = std::max(worst, (pushed.col(c) - a.gram().col(c)).norm());
    return worst;
}

CMat model_projection_grammian(const SampledModel& m, const ComplexPoint& z) {
    m.spec().domain().require(z);
    const int rank = m.fiber_rank();
    const int N = m.size();
    CMat V = m.dual_section_values(z);
    CMat W = m.solve(V);
    CMat S = hermitize(V.adjoint() * W);  // frame Grammian of the dual sections at z

    // Constant sections take the value e_i at every sample point.
    CMat R = CMat::Zero(N * rank, rank);
    for (int j = 0; j < N; ++j) R.block(j * rank, 0, rank, rank) = CMat::Identity(rank, rank);
    CMat T = V.adjoint() * m.solve(R);  // pairings of constants with the frame

    double cond = condition_2norm(S);
    if (!(cond < kConditionLimit))
        throw IllConditioned("projected frame at z is numerically singular");
    CMat M = T.adjoint() * S.llt().solve(T);
    return hermitize(M);
}

}  // namespace qfhm
