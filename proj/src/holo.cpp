#include "qfhm/holo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qfhm {

struct HoloExpr::Node {
    enum class Kind { Const, Var, Sum, Prod, Pow, Quot };
    Kind kind = Kind::Const;
    Complex value{0.0, 0.0};  // Const
    int var = -1;             // Var
    int exponent = 0;         // Pow
    NodePtr a, b;
    int nvars = 0;
};

namespace {

using Node = HoloExpr::Node;
using Kind = Node::Kind;

}  // namespace

HoloExpr HoloExpr::constant(Complex c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = c;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::variable(int index) {
    if (index < 0) throw ValidationError("variable index must be >= 0");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    n->nvars = index + 1;
    return HoloExpr(std::move(n));
}

bool HoloExpr::is_constant() const { return node_->kind == Kind::Const; }

Complex HoloExpr::constant_value() const {
    if (!is_constant()) throw ValidationError("constant_value on non-constant expression");
    return node_->value;
}

int HoloExpr::nvars() const { return node_->nvars; }

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b) {
    if (a.is_constant() && b.is_constant())
        return HoloExpr::constant(a.constant_value() + b.constant_value());
    if (a.is_constant() && a.constant_value() == Complex(0.0, 0.0)) return b;
    if (b.is_constant() && b.constant_value() == Complex(0.0, 0.0)) return a;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->a = a.node_;
    n->b = b.node_;
    n->nvars = std::max(a.nvars(), b.nvars());
    return HoloExpr(std::move(n));
}

HoloExpr operator*(const HoloExpr& a, const HoloExpr& b) {
    if (a.is_constant() && b.is_constant())
        return HoloExpr::constant(a.constant_value() * b.constant_value());
    if (a.is_constant()) {
        if (a.constant_value() == Complex(0.0, 0.0)) return HoloExpr::constant(0.0);
        if (a.constant_value() == Complex(1.0, 0.0)) return b;
    }
    if (b.is_constant()) {
        if (b.constant_value() == Complex(0.0, 0.0)) return HoloExpr::constant(0.0);
        if (b.constant_value() == Complex(1.0, 0.0)) return a;
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prod;
    n->a = a.node_;
    n->b = b.node_;
    n->nvars = std::max(a.nvars(), b.nvars());
    return HoloExpr(std::move(n));
}

HoloExpr operator-(const HoloExpr& a) { return HoloExpr::constant(-1.0) * a; }

HoloExpr operator-(const HoloExpr& a, const HoloExpr& b) { return a + (-b); }

HoloExpr HoloExpr::pow(int exponent) const {
    if (exponent < 0)
        throw ValidationError("pow exponent must be >= 0; use quotient for negative powers");
    if (exponent == 0) return constant(1.0);
    if (exponent == 1) return *this;
    if (is_constant()) {
        Complex v(1.0, 0.0);
        for (int i = 0; i < exponent; ++i) v *= constant_value();
        return constant(v);
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = exponent;
    n->a = node_;
    n->nvars = node_->nvars;
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::quotient(HoloExpr num, HoloExpr den) {
    if (den.is_constant()) {
        Complex d = den.constant_value();
        if (d == Complex(0.0, 0.0)) throw ValidationError("quotient: constant denominator is zero");
        return constant(Complex(1.0, 0.0) / d) * num;
    }
    if (num.is_constant() && num.constant_value() == Complex(0.0, 0.0)) return constant(0.0);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Quot;
    n->a = num.node_;
    n->b = den.node_;
    n->nvars = std::max(num.nvars(), den.nvars());
    return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::quotient(HoloExpr num, HoloExpr den, const Domain& dom) {
    HoloExpr q = quotient(std::move(num), std::move(den));
    q.validate_nonvanishing(dom);
    return q;
}

namespace {

Complex eval_node(const Node* n, const ComplexPoint& z) {
    switch (n->kind) {
        case Kind::Const: return n->value;
        case Kind::Var: return z[n->var];
        case Kind::Sum: return eval_node(n->a.get(), z) + eval_node(n->b.get(), z);
        case Kind::Prod: return eval_node(n->a.get(), z) * eval_node(n->b.get(), z);
        case Kind::Pow: {
            Complex base = eval_node(n->a.get(), z);
            if (n->exponent <= 32) {
                Complex v(1.0, 0.0);
                for (int i = 0; i < n->exponent; ++i) v *= base;
                return v;
            }
            return std::pow(base, n->exponent);
        }
        case Kind::Quot: {
            Complex den = eval_node(n->b.get(), z);
            if (std::abs(den) < 1e-14)
                throw PoleAtPoint("quotient denominator vanishes at evaluation point");
            return eval_node(n->a.get(), z) / den;
        }
    }
    throw ValidationError("corrupt expression node");
}

}  // namespace

Complex HoloExpr::eval(const ComplexPoint& z) const {
    if (z.dim() < nvars())
        throw DimensionMismatch("expression needs " + std::to_string(nvars()) +
                                " variables, point has " + std::to_string(z.dim()));
    return eval_node(node_.get(), z);
}

HoloExpr HoloExpr::derivative(int var) const {
    if (var < 0) throw ValidationError("derivative variable index must be >= 0");
    const Node* n = node_.get();
    switch (n->kind) {
        case Kind::Const: return constant(0.0);
        case Kind::Var: return constant(n->var == var ? 1.0 : 0.0);
        case Kind::Sum: return HoloExpr(n->a).derivative(var) + HoloExpr(n->b).derivative(var);
        case Kind::Prod: {
            HoloExpr a(n->a), b(n->b);
            return a.derivative(var) * b + a * b.derivative(var);
        }
        case Kind::Pow: {
            HoloExpr base(n->a);
            return constant(static_cast<double>(n->exponent)) * base.pow(n->exponent - 1) *
                   base.derivative(var);
        }
        case Kind::Quot: {
            HoloExpr a(n->a), b(n->b);
            return quotient(a.derivative(var) * b - a * b.derivative(var), b * b);
        }
    }
    throw ValidationError("corrupt expression node");
}

HoloExpr HoloExpr::dilate(Complex t) const {
    const Node* n = node_.get();
    switch (n->kind) {
        case Kind::Const: return *this;
        case Kind::Var: return constant(t) * (*this);
        case Kind::Sum: return HoloExpr(n->a).dilate(t) + HoloExpr(n->b).dilate(t);
        case Kind::Prod: return HoloExpr(n->a).dilate(t) * HoloExpr(n->b).dilate(t);
        case Kind::Pow: return HoloExpr(n->a).dilate(t).pow(n->exponent);
        case Kind::Quot:
            return quotient(HoloExpr(n->a).dilate(t), HoloExpr(n->b).dilate(t));
    }
    throw ValidationError("corrupt expression node");
}

namespace {

PolyMap poly_const(Complex c, int nvars) {
    PolyMap p;
    if (c != Complex(0.0, 0.0)) p[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

PolyMap poly_var(int var, int nvars) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    PolyMap p;
    p[std::move(e)] = Complex(1.0, 0.0);
    return p;
}

PolyMap poly_add(const PolyMap& a, const PolyMap& b) {
    PolyMap r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end()) {
            r[e] = c;
        } else {
            it->second += c;
            if (it->second == Complex(0.0, 0.0)) r.erase(it);
        }
    }
    return r;
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.find(e);
            if (it == r.end()) {
                Complex v = ca * cb;
                if (v != Complex(0.0, 0.0)) r[std::move(e)] = v;
            } else {
                it->second += ca * cb;
                if (it->second == Complex(0.0, 0.0)) r.erase(it);
            }
        }
    }
    return r;
}

PolyMap poly_pow(PolyMap base, int p, int nvars) {
    PolyMap r = poly_const(Complex(1.0, 0.0), nvars);
    for (int i = 0; i < p; ++i) r = poly_mul(r, base);
    return r;
}

RationalForm rational_node(const Node* n, int nvars) {
    switch (n->kind) {
        case Kind::Const:
            return {poly_const(n->value, nvars), poly_const(Complex(1.0, 0.0), nvars)};
        case Kind::Var:
            return {poly_var(n->var, nvars), poly_const(Complex(1.0, 0.0), nvars)};
        case Kind::Sum: {
            RationalForm a = rational_node(n->a.get(), nvars);
            RationalForm b = rational_node(n->b.get(), nvars);
            if (a.den == b.den) return {poly_add(a.num, b.num), a.den};
            return {poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                    poly_mul(a.den, b.den)};
        }
        case Kind::Prod: {
            RationalForm a = rational_node(n->a.get(), nvars);
            RationalForm b = rational_node(n->b.get(), nvars);
            return {poly_mul(a.num, b.num), poly_mul(a.den, b.den)};
        }
        case Kind::Pow: {
            RationalForm a = rational_node(n->a.get(), nvars);
            return {poly_pow(a.num, n->exponent, nvars), poly_pow(a.den, n->exponent, nvars)};
        }
        case Kind::Quot: {
            RationalForm a = rational_node(n->a.get(), nvars);
            RationalForm b = rational_node(n->b.get(), nvars);
            return {poly_mul(a.num, b.den), poly_mul(a.den, b.num)};
        }
    }
    throw ValidationError("corrupt expression node");
}

void collect_denominators(const Node* n, std::vector<const Node*>& out) {
    if (!n) return;
    if (n->kind == Kind::Quot) out.push_back(n->b.get());
    collect_denominators(n->a.get(), out);
    collect_denominators(n->b.get(), out);
}

}  // namespace

RationalForm HoloExpr::to_rational(int nvars) const {
    if (nvars < this->nvars())
        throw DimensionMismatch("to_rational: nvars smaller than expression arity");
    if (nvars < 1) nvars = 1;
    return rational_node(node_.get(), nvars);
}

void HoloExpr::validate_nonvanishing(const Domain& dom) const {
    if (nvars() > dom.dim())
        throw DimensionMismatch("expression arity exceeds domain dimension");
    std::vector<const Node*> dens;
    collect_denominators(node_.get(), dens);
    if (dens.empty()) return;
    const auto net = dom.closed_sample_net();
    for (const Node* d : dens) {
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& p : net) lo = std::min(lo, std::abs(eval_node(d, p)));
        if (!(lo > 1e-8))
            throw ValidationError(
                "quotient denominator gets within 1e-8 of zero on the closed domain "
                "(min modulus " + std::to_string(lo) + ")");
    }
}

Complex wirtinger_derivative(const HoloExpr& e, const ComplexPoint& z, int var) {
    return e.derivative(var).eval(z);
}

double antiholomorphy_residual(const std::function<Complex(const ComplexPoint&)>& f,
                               const ComplexPoint& z, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("step size must be positive");
    double worst = 0.0;
    for (int j = 0; j < z.dim(); ++j) {
        Complex dx = f(z.shifted(j, Complex(h, 0.0))) - f(z.shifted(j, Complex(-h, 0.0)));
        Complex dy = f(z.shifted(j, Complex(0.0, h))) - f(z.shifted(j, Complex(0.0, -h)));
        Complex dbar = (dx + Complex(0.0, 1.0) * dy) / (4.0 * h);
        worst = std::max(worst, std::abs(dbar));
    }
    return worst;
}

HoloMatrix::HoloMatrix(int rows, int cols, std::vector<HoloExpr> entries, int declared_nvars)
    : rows_(rows), cols_(cols), nvars_(declared_nvars), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw ValidationError("HoloMatrix must have positive shape");
    if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
        throw DimensionMismatch("HoloMatrix entry count does not match shape");
    if (declared_nvars < 0) throw ValidationError("HoloMatrix variable count must be >= 0");
    for (const auto& e : entries_) nvars_ = std::max(nvars_, e.nvars());
}

HoloMatrix HoloMatrix::identity(int m) {
    if (m < 1) throw ValidationError("identity size must be >= 1");
    std::vector<HoloExpr> e;
    e.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) e.push_back(HoloExpr::constant(r == c ? 1.0 : 0.0));
    return HoloMatrix(m, m, std::move(e));
}

const HoloExpr& HoloMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("HoloMatrix index out of range");
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
}

CMat HoloMatrix::eval(const ComplexPoint& z) const {
    if (z.dim() < nvars_)
        throw DimensionMismatch("matrix needs " + std::to_string(nvars_) +
                                " variables, point has " + std::to_string(z.dim()));
    CMat out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(r, c) = at(r, c).eval(z);
    return out;
}

namespace {

HoloExpr det_minor(const HoloMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    HoloExpr acc = HoloExpr::constant(0.0);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        HoloExpr term = m.at(rows[0], cols[j]) * det_minor(m, sub_rows, std::move(sub_cols));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

HoloExpr HoloMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    if (rows_ > 6) throw ValidationError("symbolic determinant limited to 6x6");
    std::vector<int> idx(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) idx[static_cast<std::size_t>(i)] = i;
    return det_minor(*this, idx, idx);
}

HoloMatrix HoloMatrix::dilate(Complex t) const {
    std::vector<HoloExpr> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(x.dilate(t));
    return HoloMatrix(rows_, cols_, std::move(e), nvars_);
}

HoloMatrix HoloMatrix::derivative(int var) const {
    std::vector<HoloExpr> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(x.derivative(var));
    return HoloMatrix(rows_, cols_, std::move(e), nvars_);
}

void HoloMatrix::validate_nonvanishing(const Domain& dom) const {
    for (const auto& e : entries_) e.validate_nonvanishing(dom);
}

}  // namespace qfhm
