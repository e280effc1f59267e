#include "liardom/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace liardom {

namespace {

// bounded draw via modulo: std::uniform_int_distribution is not portable
// across standard libraries, mt19937_64 itself is
uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

} // namespace

SimpleGraph gen_planar_max3(int n, uint64_t seed) {
    if (n < 2) raise(Errc::parse_error, "generator needs n >= 2");
    std::mt19937_64 rng(seed);

    // grow a connected cell region of a W x W grid
    const int w = n + 2;
    auto cell_id = [w](int x, int y) { return y * w + x; };
    std::set<int> region;
    std::vector<std::pair<int, int>> frontier;
    auto push_neighbors = [&](int x, int y) {
        const std::pair<int, int> around[4] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (auto [nx, ny] : around)
            if (nx >= 0 && ny >= 0 && nx < w && ny < w && !region.contains(cell_id(nx, ny)))
                frontier.emplace_back(nx, ny);
    };
    const int sx = static_cast<int>(draw(rng, static_cast<uint64_t>(w)));
    const int sy = static_cast<int>(draw(rng, static_cast<uint64_t>(w)));
    region.insert(cell_id(sx, sy));
    std::vector<std::pair<int, int>> cells{{sx, sy}};
    push_neighbors(sx, sy);
    while (static_cast<int>(cells.size()) < n && !frontier.empty()) {
        const size_t pick = static_cast<size_t>(draw(rng, frontier.size()));
        const auto [x, y] = frontier[pick];
        frontier.erase(frontier.begin() + static_cast<long>(pick));
        if (!region.insert(cell_id(x, y)).second) continue;
        cells.emplace_back(x, y);
        push_neighbors(x, y);
    }

    // vertices in cell insertion order; edges between grid-adjacent cells
    std::vector<int> vertex_of(static_cast<size_t>(w * w), -1);
    for (size_t i = 0; i < cells.size(); ++i)
        vertex_of[static_cast<size_t>(cell_id(cells[i].first, cells[i].second))] = static_cast<int>(i);
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (size_t i = 0; i < cells.size(); ++i) {
        const auto [x, y] = cells[i];
        const std::pair<int, int> around[2] = {{x + 1, y}, {x, y + 1}};
        for (auto [nx, ny] : around) {
            if (nx >= w || ny >= w) continue;
            const int j = vertex_of[static_cast<size_t>(cell_id(nx, ny))];
            if (j >= 0) edges.emplace_back(std::min<int32_t>(static_cast<int32_t>(i), j),
                                           std::max<int32_t>(static_cast<int32_t>(i), j));
        }
    }

    // trim degree-4 vertices down to 3 without isolating anyone
    const int nv = static_cast<int>(cells.size());
    std::vector<int> deg(static_cast<size_t>(nv), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    std::sort(edges.begin(), edges.end());
    for (int v = 0; v < nv; ++v) {
        while (deg[static_cast<size_t>(v)] > 3) {
            bool removed = false;
            for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
                const auto [a, b] = *it;
                if (a != v && b != v) continue;
                const int other = a == v ? b : a;
                if (deg[static_cast<size_t>(other)] <= 1) continue;
                --deg[static_cast<size_t>(a)];
                --deg[static_cast<size_t>(b)];
                edges.erase(std::next(it).base());
                removed = true;
                break;
            }
            if (!removed) break;  // cannot happen on grid regions; defensive
        }
    }
    return SimpleGraph(nv, std::move(edges));
}

std::vector<PointRecord> gen_points(int n, int64_t half_width, uint64_t seed) {
    if (n < 0 || half_width <= 0) raise(Errc::parse_error, "generator needs n >= 0 and a positive box");
    std::mt19937_64 rng(seed);
    std::set<Coord> used;
    std::vector<PointRecord> pts;
    const uint64_t span = static_cast<uint64_t>(2 * half_width + 1);
    while (static_cast<int>(pts.size()) < n) {
        const Coord c{static_cast<int64_t>(draw(rng, span)) - half_width,
                      static_cast<int64_t>(draw(rng, span)) - half_width};
        if (!used.insert(c).second) continue;
        pts.push_back({static_cast<int32_t>(pts.size()), PointKind::node, c});
    }
    return pts;
}

} // namespace liardom
