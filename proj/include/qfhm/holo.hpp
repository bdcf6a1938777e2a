#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qfhm/complexpoint.hpp"
#include "qfhm/domain.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

// Sparse multivariate polynomial: exponent vector -> coefficient.  All
// exponent vectors in one map share the same length.
using PolyMap = std::map<std::vector<int>, Complex>;

struct RationalForm {
    PolyMap num;
    PolyMap den;  // {1} for plain polynomials
};

// Immutable holomorphic expression in variables z_1..z_n built from
// constants, variables, sums, products, integer powers and quotients.
// Expression trees share subterms; copies are cheap.
//
// Quotients built through the domain-checked factory are certified to have a
// denominator bounded away from zero on the closed unit region; the unchecked
// factory exists for internally generated terms (derivatives of already
// certified expressions).
class HoloExpr {
public:
    static HoloExpr constant(Complex c);
    static HoloExpr constant(double c) { return constant(Complex(c, 0.0)); }
    // 0-based variable index; the expression then requires points of
    // dimension at least index+1.
    static HoloExpr variable(int index);

    static HoloExpr quotient(HoloExpr num, HoloExpr den);
    static HoloExpr quotient(HoloExpr num, HoloExpr den, const Domain& dom);

    HoloExpr pow(int exponent) const;

    friend HoloExpr operator+(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator-(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator*(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator-(const HoloExpr& a);
    friend HoloExpr operator+(Complex c, const HoloExpr& a) { return HoloExpr::constant(c) + a; }
    friend HoloExpr operator*(Complex c, const HoloExpr& a) { return HoloExpr::constant(c) * a; }

    // Smallest usable point dimension (max variable index + 1; 0 for constants).
    int nvars() const;

    // Evaluate at z.  Requires z.dim() >= nvars(); excess coordinates are
    // ignored so that expressions in few variables compose with wider contexts.
    Complex eval(const ComplexPoint& z) const;

    // Symbolic partial derivative with respect to z_{var}.
    HoloExpr derivative(int var) const;

    // Substitution z_i -> t * z_i for all i.
    HoloExpr dilate(Complex t) const;

    // Collapse to a ratio of polynomials in nvars variables
    // (nvars >= this->nvars()).
    RationalForm to_rational(int nvars) const;

    // Certify every quotient denominator in the tree against the closed unit
    // region of dom; throws ValidationError when some denominator gets within
    // 1e-8 of zero on the sample net.
    void validate_nonvanishing(const Domain& dom) const;

    bool is_constant() const;
    Complex constant_value() const;  // requires is_constant()

    struct Node;  // implementation detail, defined in holo.cpp

private:
    using NodePtr = std::shared_ptr<const Node>;
    explicit HoloExpr(NodePtr n) : node_(std::move(n)) {}
    NodePtr node_;
};

// Numeric Wirtinger derivative d/dz_var of the symbolic expression at z.
Complex wirtinger_derivative(const HoloExpr& e, const ComplexPoint& z, int var);

// Max over variables of a centered-difference estimate of |df/dzbar_j| at z.
// Near zero for holomorphic fields, O(1) otherwise.
double antiholomorphy_residual(const std::function<Complex(const ComplexPoint&)>& f,
                               const ComplexPoint& z, double h);

// Matrix with holomorphic entries, stored row-major.
class HoloMatrix {
public:
    HoloMatrix(int rows, int cols, std::vector<HoloExpr> entries, int declared_nvars = 0);

    static HoloMatrix identity(int m);
    static HoloMatrix scalar(HoloExpr e) { return HoloMatrix(1, 1, {std::move(e)}); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    const HoloExpr& at(int r, int c) const;

    CMat eval(const ComplexPoint& z) const;

    // Symbolic determinant by cofactor expansion; square matrices up to 6x6.
    HoloExpr det() const;

    HoloMatrix dilate(Complex t) const;
    HoloMatrix derivative(int var) const;

    void validate_nonvanishing(const Domain& dom) const;

private:
    int rows_, cols_, nvars_;
    std::vector<HoloExpr> entries_;
};

}  // namespace qfhm
