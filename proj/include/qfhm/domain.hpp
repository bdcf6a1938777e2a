#pragma once

#include <string>
#include <vector>

#include "qfhm/complexpoint.hpp"

namespace qfhm {

enum class DomainKind { Disk, Polydisk, Ball };

// Reference domain for kernel evaluation: the open unit disk, polydisk or
// Euclidean ball, together with a safety margin.  All pointwise operations are
// restricted to the margin-shrunk region { |z| <= 1 - margin } so that
// kernels with boundary singularities stay well conditioned.
class Domain {
public:
    Domain(DomainKind kind, int dim, double margin = 0.05);

    static Domain disk(double margin = 0.05) { return Domain(DomainKind::Disk, 1, margin); }
    static Domain polydisk(int dim, double margin = 0.05) { return Domain(DomainKind::Polydisk, dim, margin); }
    static Domain ball(int dim, double margin = 0.05) { return Domain(DomainKind::Ball, dim, margin); }

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double margin() const { return margin_; }

    // Gauge of the point for this domain: sup-norm on the polydisk,
    // 2-norm on the disk and ball.
    double gauge(const ComplexPoint& z) const;

    // True if z lies in the margin-shrunk region (gauge <= 1 - margin).
    bool contains(const ComplexPoint& z) const;

    // Throws PointOutsideDomain / DimensionMismatch when z is not usable.
    void require(const ComplexPoint& z) const;

    // Deterministic sample net over the closed unit region (boundary included),
    // roughly 1000 points per variable.  Used to certify that denominators and
    // determinants of multiplier matrices do not vanish on the closure.
    std::vector<ComplexPoint> closed_sample_net() const;

    bool operator==(const Domain& o) const {
        return kind_ == o.kind_ && dim_ == o.dim_ && margin_ == o.margin_;
    }
    bool operator!=(const Domain& o) const { return !(*this == o); }

    std::string kind_name() const;

private:
    DomainKind kind_;
    int dim_;
    double margin_;
};

}  // namespace qfhm
