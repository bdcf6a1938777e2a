#include "qfhm/complexpoint.hpp"

#include <cmath>

namespace qfhm {

ComplexPoint::ComplexPoint(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {
    validate();
}

ComplexPoint::ComplexPoint(std::initializer_list<std::complex<double>> coords)
    : coords_(coords) {
    validate();
}

ComplexPoint::ComplexPoint(std::complex<double> z) : coords_{z} { validate(); }

ComplexPoint ComplexPoint::zero(int dim) {
    if (dim < 1) throw ValidationError("ComplexPoint dimension must be >= 1");
    return ComplexPoint(std::vector<std::complex<double>>(static_cast<std::size_t>(dim), {0.0, 0.0}));
}

void ComplexPoint::validate() const {
    if (coords_.empty()) throw ValidationError("ComplexPoint dimension must be >= 1");
    for (const auto& c : coords_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw ValidationError("ComplexPoint coordinates must be finite");
    }
}

double ComplexPoint::sup_norm() const {
    double m = 0.0;
    for (const auto& c : coords_) m = std::max(m, std::abs(c));
    return m;
}

double ComplexPoint::norm2() const {
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    return std::sqrt(s);
}

ComplexPoint ComplexPoint::shifted(int var, std::complex<double> delta) const {
    if (var < 0 || var >= dim()) throw DimensionMismatch("shifted: variable index out of range");
    auto c = coords_;
    c[static_cast<std::size_t>(var)] += delta;
    return ComplexPoint(std::move(c));
}

}  // namespace qfhm
