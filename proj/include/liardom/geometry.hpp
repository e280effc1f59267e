#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liardom/errors.hpp"

namespace liardom {

// All plane coordinates are integer deci-units: 1 disk diameter = 10 deci-units.
// Every offset used by the gadget construction (0.2, 0.5, 1, 1.2, 1.4, 1.5,
// 2.5, 3.5, 4 units) is an exact multiple of 0.1, so adjacency is decided by
// exact integer comparison with no epsilon anywhere.
constexpr int64_t kUnitSq = 100;          // squared adjacency threshold, deci^2
constexpr int64_t kCoordLimit = 1'000'000'000;  // |x|,|y| bound keeping x^2+y^2 in int64

struct Coord {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class PointKind { node, joint, support_x, support_y, support_z };

const char* kind_token(PointKind k);
PointKind kind_from_token(const std::string& tok);
inline bool is_support(PointKind k) {
    return k == PointKind::support_x || k == PointKind::support_y || k == PointKind::support_z;
}

struct PointRecord {
    int32_t id = 0;
    PointKind kind = PointKind::node;
    Coord pos;

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

inline int64_t sq_dist(Coord a, Coord b) {
    const int64_t dx = a.x - b.x;
    const int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline bool are_adjacent(Coord a, Coord b) { return sq_dist(a, b) <= kUnitSq; }

// Point set plus derived unit-disk adjacency. Immutable after construction;
// safe to share across threads.
class UdgInstance {
public:
    UdgInstance() = default;

    static constexpr int64_t unit_threshold_sq = kUnitSq;

    const std::vector<PointRecord>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<int32_t>& neighbors(int32_t id) const;
    bool adjacent(int32_t a, int32_t b) const;
    int64_t edge_count() const { return edge_count_; }

    // id itself plus all adjacent ids, ascending.
    std::vector<int32_t> closed_neighborhood(int32_t id) const;

    friend UdgInstance build_udg(std::vector<PointRecord> pts);

private:
    std::vector<PointRecord> points_;
    std::vector<std::vector<int32_t>> adj_;
    int64_t edge_count_ = 0;
};

// O(n^2) pairwise construction; OpenMP-parallel row scan when the instance is
// large, with output identical to the serial reference (used by tests).
UdgInstance build_udg(std::vector<PointRecord> pts);

// Serial reference kept for kernel cross-checking and benchmarking.
std::vector<std::pair<int32_t, int32_t>> udg_edges_serial(const std::vector<PointRecord>& pts);
std::vector<std::pair<int32_t, int32_t>> udg_edges_parallel(const std::vector<PointRecord>& pts);

int max_closed_degree(const UdgInstance& inst);

// Points file: one record per line, `<id> <kind> <x> <y>`,
// kind in {node, joint, sx, sy, sz}; '#' starts a comment.
std::vector<PointRecord> read_points(std::istream& in);
std::vector<PointRecord> read_points_file(const std::string& path);
void write_points(std::ostream& out, const std::vector<PointRecord>& pts);
void write_points_file(const std::string& path, const std::vector<PointRecord>& pts);

void check_coord_bounds(Coord c);

} // namespace liardom
