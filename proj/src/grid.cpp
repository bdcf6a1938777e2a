#include "qfhm/grid.hpp"

#include <cmath>

#include "qfhm/types.hpp"

namespace qfhm {

GridSpec parse_grid(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) throw ParseError("grid must look like ROWSxCOLS, got '" + text + "'");
    GridSpec g;
    try {
        std::size_t used = 0;
        g.rows = std::stoi(text.substr(0, x), &used);
        if (used != x) throw ParseError("bad grid rows in '" + text + "'");
        std::string rest = text.substr(x + 1);
        g.cols = std::stoi(rest, &used);
        if (used != rest.size()) throw ParseError("bad grid cols in '" + text + "'");
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("grid must look like ROWSxCOLS, got '" + text + "'");
    }
    if (g.rows < 1 || g.cols < 1) throw ParseError("grid factors must be positive");
    return g;
}

namespace {

std::vector<double> cell_centers(int count, double half_width) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    const double step = 2.0 * half_width / count;
    const double mid = 0.5 * (count - 1);
    for (int i = 0; i < count; ++i)
        xs[static_cast<std::size_t>(i)] = (static_cast<double>(i) - mid) * step;
    return xs;
}

std::vector<double> endpoint_centers(int count, double half_width) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    if (count == 1) {
        xs[0] = 0.0;
        return xs;
    }
    for (int i = 0; i < count; ++i)
        xs[static_cast<std::size_t>(i)] =
            -half_width + 2.0 * half_width * static_cast<double>(i) / (count - 1);
    return xs;
}

}  // namespace

std::vector<ComplexPoint> domain_grid(const Domain& dom, const GridSpec& g) {
    if (g.rows < 1 || g.cols < 1) throw ValidationError("grid factors must be positive");
    const double R = 1.0 - dom.margin();
    const auto xs = cell_centers(g.cols, R);
    const auto ys = cell_centers(g.rows, R);
    const int per_var = g.rows * g.cols;
    double total = std::pow(static_cast<double>(per_var), dom.dim());
    if (total > 200000.0)
        throw ValidationError("grid of " + std::to_string(static_cast<long>(total)) +
                              " points exceeds the 200000 point cap");

    std::vector<ComplexPoint> out;
    std::vector<int> idx(static_cast<std::size_t>(dom.dim()), 0);
    for (;;) {
        std::vector<std::complex<double>> coords(static_cast<std::size_t>(dom.dim()));
        for (int v = 0; v < dom.dim(); ++v) {
            int flat = idx[static_cast<std::size_t>(v)];
            coords[static_cast<std::size_t>(v)] = {xs[static_cast<std::size_t>(flat % g.cols)],
                                                   ys[static_cast<std::size_t>(flat / g.cols)]};
        }
        ComplexPoint p(std::move(coords));
        if (dom.contains(p)) out.push_back(std::move(p));
        int v = 0;
        for (; v < dom.dim(); ++v) {
            if (++idx[static_cast<std::size_t>(v)] < per_var) break;
            idx[static_cast<std::size_t>(v)] = 0;
        }
        if (v == dom.dim()) break;
    }
    return out;
}

std::vector<ComplexPoint> square_lattice(int per_side, double half_width) {
    if (per_side < 1) throw ValidationError("lattice side must be positive");
    if (!(half_width > 0.0)) throw ValidationError("lattice half width must be positive");
    const auto xs = endpoint_centers(per_side, half_width);
    std::vector<ComplexPoint> out;
    out.reserve(static_cast<std::size_t>(per_side) * static_cast<std::size_t>(per_side));
    for (double y : xs)
        for (double x : xs) out.push_back(ComplexPoint(Complex(x, y)));
    return out;
}

std::vector<ComplexPoint> disk_grid(int per_side, double radius) {
    std::vector<ComplexPoint> out;
    for (auto& p : square_lattice(per_side, radius))
        if (p.norm2() <= radius + 1e-15) out.push_back(std::move(p));
    return out;
}

}  // namespace qfhm
