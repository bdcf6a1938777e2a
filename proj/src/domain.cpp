#include "qfhm/domain.hpp"

#include <cmath>
#include <random>

namespace qfhm {

Domain::Domain(DomainKind kind, int dim, double margin) : kind_(kind), dim_(dim), margin_(margin) {
    if (dim < 1) throw ValidationError("Domain dimension must be >= 1");
    if (kind == DomainKind::Disk && dim != 1)
        throw ValidationError("disk domain is one-dimensional; use polydisk or ball for n > 1");
    if (!(margin > 0.0) || !(margin < 1.0))
        throw ValidationError("Domain margin must lie in (0, 1)");
}

double Domain::gauge(const ComplexPoint& z) const {
    return kind_ == DomainKind::Polydisk ? z.sup_norm() : z.norm2();
}

bool Domain::contains(const ComplexPoint& z) const {
    if (z.dim() != dim_) return false;
    return gauge(z) <= 1.0 - margin_ + 1e-15;
}

void Domain::require(const ComplexPoint& z) const {
    if (z.dim() != dim_)
        throw DimensionMismatch("point dimension " + std::to_string(z.dim()) +
                                " does not match domain dimension " + std::to_string(dim_));
    if (!contains(z))
        throw PointOutsideDomain("point with gauge " + std::to_string(gauge(z)) +
                                 " outside margin-shrunk domain (limit " +
                                 std::to_string(1.0 - margin_) + ")");
}

std::string Domain::kind_name() const {
    switch (kind_) {
        case DomainKind::Disk: return "disk";
        case DomainKind::Polydisk: return "polydisk";
        case DomainKind::Ball: return "ball";
    }
    return "?";
}

std::vector<ComplexPoint> Domain::closed_sample_net() const {
    std::vector<ComplexPoint> net;
    const double pi = 3.14159265358979323846;
    if (dim_ == 1) {
        // 25 radii x 40 angles, outermost ring exactly on the boundary.
        const int nr = 25, na = 40;
        net.reserve(static_cast<std::size_t>(nr * na));
        for (int i = 0; i < nr; ++i) {
            double r = static_cast<double>(i) / (nr - 1);
            for (int j = 0; j < na; ++j) {
                double th = 2.0 * pi * j / na;
                net.push_back(ComplexPoint(std::polar(r, th)));
            }
        }
        return net;
    }
    // Higher dimensions: a fixed pseudo-random cloud of about 1000*dim points,
    // every fourth draw pushed onto the boundary for coverage there.
    std::mt19937_64 rng(0x51D5A3u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int count = 1000 * dim_;
    net.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        std::vector<std::complex<double>> c(static_cast<std::size_t>(dim_));
        for (int v = 0; v < dim_; ++v) {
            double r = std::sqrt(uni(rng));
            double th = 2.0 * pi * uni(rng);
            c[static_cast<std::size_t>(v)] = std::polar(r, th);
        }
        ComplexPoint p(std::move(c));
        if (k % 4 == 0) {
            double g = gauge(p);
            if (g > 1e-12) {
                std::vector<std::complex<double>> b = p.coords();
                for (auto& x : b) x /= g;
                p = ComplexPoint(std::move(b));
            }
        } else if (kind_ != DomainKind::Polydisk) {
            double g = p.norm2();
            if (g > 1.0) {
                std::vector<std::complex<double>> b = p.coords();
                for (auto& x : b) x /= g;
                p = ComplexPoint(std::move(b));
            }
        }
        net.push_back(std::move(p));
    }
    return net;
}

}  // namespace qfhm
