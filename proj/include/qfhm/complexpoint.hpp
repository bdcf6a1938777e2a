#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qfhm/errors.hpp"

namespace qfhm {

// A point in C^n, n >= 1.  Coordinates are immutable after construction and
// guaranteed finite.
class ComplexPoint {
public:
    explicit ComplexPoint(std::vector<std::complex<double>> coords);
    ComplexPoint(std::initializer_list<std::complex<double>> coords);

    // Single-variable convenience.
    explicit ComplexPoint(std::complex<double> z);

    static ComplexPoint zero(int dim);

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::complex<double>& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<std::complex<double>>& coords() const { return coords_; }

    // Largest coordinate modulus (polydisk norm).
    double sup_norm() const;
    // Euclidean norm (ball norm).
    double norm2() const;

    // Copy with coords[var] += delta.  Used by finite-difference stencils.
    ComplexPoint shifted(int var, std::complex<double> delta) const;

    bool operator==(const ComplexPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const ComplexPoint& o) const { return !(*this == o); }

private:
    std::vector<std::complex<double>> coords_;
    void validate() const;
};

}  // namespace qfhm
