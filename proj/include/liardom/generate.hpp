#pragma once

#include <cstdint>
#include <vector>

#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"

namespace liardom {

// Seeded random planar graph with max degree 3: a connected random cell
// region of a grid graph (planar, degree <= 4) with degree-4 vertices trimmed.
// Only the stated generator drives randomness, so outputs are identical
// across platforms for a given seed.
SimpleGraph gen_planar_max3(int n, uint64_t seed);

// Seeded random point set (node-kind records) in a box of the given half-width.
std::vector<PointRecord> gen_points(int n, int64_t half_width, uint64_t seed);

} // namespace liardom
