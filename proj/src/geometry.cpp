#include "liardom/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liardom {

const char* kind_token(PointKind k) {
    switch (k) {
        case PointKind::node: return "node";
        case PointKind::joint: return "joint";
        case PointKind::support_x: return "sx";
        case PointKind::support_y: return "sy";
        case PointKind::support_z: return "sz";
    }
    return "?";
}

PointKind kind_from_token(const std::string& tok) {
    if (tok == "node") return PointKind::node;
    if (tok == "joint") return PointKind::joint;
    if (tok == "sx") return PointKind::support_x;
    if (tok == "sy") return PointKind::support_y;
    if (tok == "sz") return PointKind::support_z;
    raise(Errc::parse_error, "unknown point kind '" + tok + "'");
}

void check_coord_bounds(Coord c) {
    if (c.x < -kCoordLimit || c.x > kCoordLimit || c.y < -kCoordLimit || c.y > kCoordLimit)
        raise(Errc::parse_error, "coordinate out of bounds (|x|,|y| <= 1e9): (" +
                                     std::to_string(c.x) + "," + std::to_string(c.y) + ")");
}

const std::vector<int32_t>& UdgInstance::neighbors(int32_t id) const {
    if (id < 0 || id >= size()) raise(Errc::unknown_id, "point id " + std::to_string(id));
    return adj_[static_cast<size_t>(id)];
}

bool UdgInstance::adjacent(int32_t a, int32_t b) const {
    const auto& na = neighbors(a);
    if (b < 0 || b >= size()) raise(Errc::unknown_id, "point id " + std::to_string(b));
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<int32_t> UdgInstance::closed_neighborhood(int32_t id) const {
    std::vector<int32_t> out = neighbors(id);
    out.insert(std::lower_bound(out.begin(), out.end(), id), id);
    return out;
}

std::vector<std::pair<int32_t, int32_t>> udg_edges_serial(const std::vector<PointRecord>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (are_adjacent(pts[i].pos, pts[j].pos))
                edges.emplace_back(pts[i].id, pts[j].id);
    return edges;
}

std::vector<std::pair<int32_t, int32_t>> udg_edges_parallel(const std::vector<PointRecord>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<std::pair<int32_t, int32_t>>> rows(static_cast<size_t>(std::max(n, 1)));
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        auto& row = rows[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            if (are_adjacent(pts[i].pos, pts[j].pos))
                row.emplace_back(pts[i].id, pts[j].id);
    }
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int i = 0; i < n; ++i)
        edges.insert(edges.end(), rows[static_cast<size_t>(i)].begin(), rows[static_cast<size_t>(i)].end());
    return edges;
}

UdgInstance build_udg(std::vector<PointRecord> pts) {
    const int n = static_cast<int>(pts.size());

    std::vector<char> seen_id(static_cast<size_t>(n), 0);
    for (const auto& p : pts) {
        check_coord_bounds(p.pos);
        if (p.id < 0 || p.id >= n)
            raise(Errc::duplicate_id, "ids must be dense 0..n-1, got " + std::to_string(p.id));
        if (seen_id[static_cast<size_t>(p.id)])
            raise(Errc::duplicate_id, "id " + std::to_string(p.id) + " appears twice");
        seen_id[static_cast<size_t>(p.id)] = 1;
    }
    {
        std::vector<Coord> coords;
        coords.reserve(pts.size());
        for (const auto& p : pts) coords.push_back(p.pos);
        std::sort(coords.begin(), coords.end());
        auto dup = std::adjacent_find(coords.begin(), coords.end());
        if (dup != coords.end())
            raise(Errc::duplicate_position, "two points at (" + std::to_string(dup->x) + "," +
                                                std::to_string(dup->y) + ")");
    }

    // normalize storage order to id order so adjacency is input-order independent
    std::sort(pts.begin(), pts.end(), [](const PointRecord& a, const PointRecord& b) { return a.id < b.id; });

    UdgInstance inst;
    inst.points_ = std::move(pts);
    inst.adj_.assign(static_cast<size_t>(n), {});

    const auto edges = (n >= 2048) ? udg_edges_parallel(inst.points_) : udg_edges_serial(inst.points_);
    inst.edge_count_ = static_cast<int64_t>(edges.size());
    for (auto [a, b] : edges) {
        inst.adj_[static_cast<size_t>(a)].push_back(b);
        inst.adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& row : inst.adj_) std::sort(row.begin(), row.end());
    return inst;
}

int max_closed_degree(const UdgInstance& inst) {
    if (inst.size() == 0) raise(Errc::empty_instance, "max_closed_degree of empty instance");
    int best = 0;
    for (int i = 0; i < inst.size(); ++i)
        best = std::max(best, static_cast<int>(inst.neighbors(i).size()) + 1);
    return best;
}

namespace {

// strips comments, returns false for blank lines
bool payload_line(const std::string& line, std::string& out) {
    const auto hash = line.find('#');
    out = (hash == std::string::npos) ? line : line.substr(0, hash);
    return out.find_first_not_of(" \t\r") != std::string::npos;
}

} // namespace

std::vector<PointRecord> read_points(std::istream& in) {
    std::vector<PointRecord> pts;
    std::string line, payload;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!payload_line(line, payload)) continue;
        std::istringstream ss(payload);
        PointRecord rec;
        std::string kind;
        if (!(ss >> rec.id >> kind >> rec.pos.x >> rec.pos.y))
            raise(Errc::parse_error, "points line " + std::to_string(lineno) + ": expected '<id> <kind> <x> <y>'");
        std::string extra;
        if (ss >> extra)
            raise(Errc::parse_error, "points line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        rec.kind = kind_from_token(kind);
        check_coord_bounds(rec.pos);
        pts.push_back(rec);
    }
    return pts;
}

std::vector<PointRecord> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open points file '" + path + "'");
    return read_points(in);
}

void write_points(std::ostream& out, const std::vector<PointRecord>& pts) {
    for (const auto& p : pts)
        out << p.id << ' ' << kind_token(p.kind) << ' ' << p.pos.x << ' ' << p.pos.y << '\n';
}

void write_points_file(const std::string& path, const std::vector<PointRecord>& pts) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_points(out, pts);
}

} // namespace liardom
