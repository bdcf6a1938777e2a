#pragma once

#include <string>
#include <vector>

#include "qfhm/domain.hpp"

namespace qfhm {

struct GridSpec {
    int rows = 0;
    int cols = 0;
};

// Parses "RxC" (e.g. "41x41"); both factors must be positive.
GridSpec parse_grid(const std::string& text);

// Cell-centered rows x cols lattice over the margin-shrunk bounding square
// of each complex variable, filtered to the domain.  Odd counts place a
// sample exactly at the origin.  Total size is capped at 200000 points.
std::vector<ComplexPoint> domain_grid(const Domain& dom, const GridSpec& g);

// Endpoint-inclusive per_side x per_side lattice over the square
// [-half_width, half_width]^2 in one complex variable.
std::vector<ComplexPoint> square_lattice(int per_side, double half_width);

// The same lattice restricted to |z| <= radius.
std::vector<ComplexPoint> disk_grid(int per_side, double radius);

}  // namespace qfhm
