#include "qfhm/curvature.hpp"

#include <cmath>
#include <map>

namespace qfhm {

void validate_scheme(const FDScheme& s) {
    if (!std::isfinite(s.h) || s.h <= 0.0) throw ValidationError("finite-difference step must be positive");
    if (s.h > 1e-2) throw StepTooLarge("finite-difference step above 1e-2");
    if (s.h < 1e-6) throw StepTooLarge("finite-difference step below 1e-6");
}

namespace {

// Direction encoding: 2*var for the real axis of z_var, 2*var+1 for the
// imaginary axis.
Complex dir_vec(int dir, double h) {
    return (dir % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
}

ComplexPoint stencil_point(const ComplexPoint& z, int du, int su, int dv, int sv, double h) {
    const int var_u = du / 2, var_v = dv / 2;
    Complex off_u = static_cast<double>(su) * dir_vec(du, h);
    Complex off_v = static_cast<double>(sv) * dir_vec(dv, h);
    if (var_u == var_v) return z.shifted(var_u, off_u + off_v);
    return z.shifted(var_u, off_u).shifted(var_v, off_v);
}

double log_at(const RealField& field, const ComplexPoint& p) {
    double v = field(p);
    if (!(v > 0.0) || !std::isfinite(v))
        throw NonPositiveField("field is not strictly positive on the stencil");
    return std::log(v);
}

// Evaluates the four-point cross difference for directions du <= dv at step h.
double cross_diff(const RealField& field, const ComplexPoint& z, int du, int dv, double h) {
    double f1 = log_at(field, stencil_point(z, du, +1, dv, +1, h));
    double f2 = log_at(field, stencil_point(z, du, +1, dv, -1, h));
    double f3 = log_at(field, stencil_point(z, du, -1, dv, +1, h));
    double f4 = log_at(field, stencil_point(z, du, -1, dv, -1, h));
    return (f1 - f2 - f3 + f4) / (4.0 * h * h);
}

bool stencil_fits(const ComplexPoint& z, int du, int dv, double h, const Domain& dom) {
    for (int su : {-1, 1})
        for (int sv : {-1, 1})
            if (!dom.contains(stencil_point(z, du, su, dv, sv, h))) return false;
    return true;
}

// Shared evaluation cache so that every direction pair is computed exactly
// once per step size; Hermitian symmetry of the output then holds bitwise.
struct CrossCache {
    const RealField* field;
    const ComplexPoint* z;
    double h;
    std::map<std::pair<int, int>, double> vals;

    double get(int a, int b) {
        auto key = std::minmax(a, b);
        auto it = vals.find(key);
        if (it != vals.end()) return it->second;
        double v = cross_diff(*field, *z, key.first, key.second, h);
        vals.emplace(key, v);
        return v;
    }
};

Complex mixed_from_cache(CrossCache& c, int i, int j) {
    const int xi = 2 * i, yi = 2 * i + 1, xj = 2 * j, yj = 2 * j + 1;
    double cxx = c.get(xi, xj);
    double cxy = c.get(xi, yj);
    double cyx = c.get(yi, xj);
    double cyy = c.get(yi, yj);
    return 0.25 * Complex(cxx + cyy, cxy - cyx);
}

double fitted_step(const RealField&, const ComplexPoint& z, int n, const FDScheme& scheme,
                   const Domain& dom) {
    double h = scheme.h;
    for (int attempt = 0; attempt <= 3; ++attempt) {
        bool ok = true;
        for (int du = 0; du < 2 * n && ok; ++du)
            for (int dv = du; dv < 2 * n && ok; ++dv)
                if (!stencil_fits(z, du, dv, h, dom)) ok = false;
        if (ok) return h;
        h *= 0.5;
    }
    throw StencilExitsDomain("finite-difference stencil leaves the domain even after step reduction");
}

}  // namespace

Complex mixed_partial_log(const RealField& field, const ComplexPoint& z, int i, int j,
                          const FDScheme& scheme, const Domain& dom) {
    validate_scheme(scheme);
    dom.require(z);
    const int n = z.dim();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw DimensionMismatch("mixed_partial_log: variable index out of range");
    double h = fitted_step(field, z, n, scheme, dom);
    CrossCache coarse{&field, &z, h, {}};
    Complex d = mixed_from_cache(coarse, i, j);
    if (!scheme.richardson) return d;
    CrossCache fine{&field, &z, 0.5 * h, {}};
    Complex d2 = mixed_from_cache(fine, i, j);
    return (4.0 * d2 - d) / 3.0;
}

namespace {

CMat mixed_matrix_log(const RealField& field, const ComplexPoint& z, const FDScheme& scheme,
                      const Domain& dom) {
    validate_scheme(scheme);
    dom.require(z);
    const int n = z.dim();
    double h = fitted_step(field, z, n, scheme, dom);
    CrossCache coarse{&field, &z, h, {}};
    CrossCache fine{&field, &z, 0.5 * h, {}};
    CMat out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex d = mixed_from_cache(coarse, i, j);
            if (scheme.richardson) {
                Complex d2 = mixed_from_cache(fine, i, j);
                d = (4.0 * d2 - d) / 3.0;
            }
            out(i, j) = d;
            if (i != j) out(j, i) = std::conj(d);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
    return out;
}

double real_det_diag(const KernelSpec& spec, const ComplexPoint& p) {
    return spec.eval_diag(p).determinant().real();
}

}  // namespace

CMat curvature_form(const KernelSpec& spec, const ComplexPoint& z, const FDScheme& scheme) {
    RealField field = [&spec](const ComplexPoint& p) { return real_det_diag(spec, p); };
    return 0.25 * mixed_matrix_log(field, z, scheme, spec.domain());
}

double modulus_curvature_residual(const KernelSpec& a, const KernelSpec& b,
                                  const ComplexPoint& z, const FDScheme& scheme) {
    CMat ca = curvature_form(a, z, scheme);
    CMat cb = curvature_form(b, z, scheme);
    RealField musq_det = [&a, &b](const ComplexPoint& p) {
        return localized_modulus(a, b, p).modulus_sq.determinant().real();
    };
    CMat L = -0.25 * mixed_matrix_log(musq_det, z, scheme, a.domain());
    return ((cb - ca) - L).norm();
}

}  // namespace qfhm
