#pragma once

#include <vector>

#include "qfhm/holo.hpp"

namespace qfhm {

struct RankPoint {
    ComplexPoint z;
    int rank = 0;
    double smin = 0.0;  // smallest singular value of the map at z
};

// One rank stratum below the generic rank: the grid points where the map
// drops to rank `rank`, with a per-variable bounding box (re/im intervals)
// and a flag telling whether the stratum looks two-dimensional at the grid
// resolution (every neighbor of some member also lies in the stratum).
struct SingularSet {
    int rank = 0;
    std::vector<std::size_t> point_indices;
    std::vector<double> bbox_re_min, bbox_re_max, bbox_im_min, bbox_im_max;
    bool interior_at_grid_resolution = false;
};

struct RankProfile {
    std::vector<RankPoint> points;
    int generic_rank = 0;
    std::vector<SingularSet> singular_sets;  // ascending by rank
};

// Pointwise numerical rank of a square holomorphic matrix over a grid, with
// the singular value cutoff tol * max(sigma_max, 1) so that uniformly tiny
// maps do not masquerade as full rank.  Grid points must all have the same
// dimension, at least the map's variable count.
RankProfile rank_profile(const HoloMatrix& psi, const std::vector<ComplexPoint>& grid,
                         double tol = 1e-9);

}  // namespace qfhm
