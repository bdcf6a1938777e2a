#include "qfhm/mapanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qfhm/parallel.hpp"
#include "qfhm/types.hpp"

namespace qfhm {

namespace {

double point_distance(const ComplexPoint& a, const ComplexPoint& b) {
    double s = 0.0;
    for (int v = 0; v < a.dim(); ++v) s += std::norm(a[v] - b[v]);
    return std::sqrt(s);
}

double min_spacing(const std::vector<ComplexPoint>& grid) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            best = std::min(best, point_distance(grid[i], grid[j]));
    return best;
}

}  // namespace

RankProfile rank_profile(const HoloMatrix& psi, const std::vector<ComplexPoint>& grid, double tol) {
    if (psi.rows() != psi.cols()) throw DimensionMismatch("rank_profile expects a square map");
    if (grid.empty()) throw ValidationError("rank_profile grid must be nonempty");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("rank tolerance must be positive");
    const int dim = grid.front().dim();
    for (const auto& p : grid)
        if (p.dim() != dim) throw DimensionMismatch("rank_profile grid mixes dimensions");
    if (dim < psi.nvars()) throw DimensionMismatch("grid dimension below the map's variable count");

    std::vector<int> ranks(grid.size(), 0);
    std::vector<double> smins(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t i) {
        CMat m = psi.eval(grid[i]);
        Eigen::JacobiSVD<CMat> svd(m);
        const auto& sv = svd.singularValues();
        double cutoff = tol * std::max(sv.size() ? sv.maxCoeff() : 0.0, 1.0);
        int r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > cutoff) ++r;
        ranks[i] = r;
        smins[i] = sv.size() ? sv.minCoeff() : 0.0;
    });
    RankProfile out;
    out.points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.points.push_back(RankPoint{grid[i], ranks[i], smins[i]});

    out.generic_rank = 0;
    for (const auto& p : out.points) out.generic_rank = std::max(out.generic_rank, p.rank);

    std::map<int, std::vector<std::size_t>> strata;
    for (std::size_t i = 0; i < out.points.size(); ++i)
        if (out.points[i].rank < out.generic_rank) strata[out.points[i].rank].push_back(i);
    if (strata.empty()) return out;

    const double spacing = min_spacing(grid);
    const double neighbor_radius = 1.5 * spacing;

    for (auto& [rank, members] : strata) {
        SingularSet s;
        s.rank = rank;
        s.point_indices = members;
        s.bbox_re_min.assign(static_cast<std::size_t>(dim), std::numeric_limits<double>::infinity());
        s.bbox_re_max.assign(static_cast<std::size_t>(dim), -std::numeric_limits<double>::infinity());
        s.bbox_im_min = s.bbox_re_min;
        s.bbox_im_max = s.bbox_re_max;
        for (std::size_t i : members) {
            for (int v = 0; v < dim; ++v) {
                const auto c = grid[i][v];
                auto vi = static_cast<std::size_t>(v);
                s.bbox_re_min[vi] = std::min(s.bbox_re_min[vi], c.real());
                s.bbox_re_max[vi] = std::max(s.bbox_re_max[vi], c.real());
                s.bbox_im_min[vi] = std::min(s.bbox_im_min[vi], c.imag());
                s.bbox_im_max[vi] = std::max(s.bbox_im_max[vi], c.imag());
            }
        }
        // A member whose whole grid neighborhood shares the dropped rank means
        // the stratum fills area at this resolution instead of being thin.
        for (std::size_t i : members) {
            int neighbors = 0;
            bool all_in = true;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                if (j == i) continue;
                if (point_distance(grid[i], grid[j]) <= neighbor_radius) {
                    ++neighbors;
                    if (out.points[j].rank != rank) {
                        all_in = false;
                        break;
                    }
                }
            }
            if (neighbors >= 4 && all_in) {
                s.interior_at_grid_resolution = true;
                break;
            }
        }
        out.singular_sets.push_back(std::move(s));
    }
    return out;
}

}  // namespace qfhm
