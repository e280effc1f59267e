#include "liardom/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace liardom {

namespace {

int sgn(int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Coord walk(const std::vector<Coord>& poly, int64_t dist) {
    for (size_t i = 1; i < poly.size(); ++i) {
        const int64_t seg = std::abs(poly[i].x - poly[i - 1].x) + std::abs(poly[i].y - poly[i - 1].y);
        if (dist <= seg) {
            const int dx = sgn(poly[i].x - poly[i - 1].x);
            const int dy = sgn(poly[i].y - poly[i - 1].y);
            return {poly[i - 1].x + dx * dist, poly[i - 1].y + dy * dist};
        }
        dist -= seg;
    }
    raise(Errc::invalid_decomposition, "offset beyond path end");
}

} // namespace

std::vector<std::vector<int64_t>> place_joints(const StepDecomposition& dec) {
    std::vector<std::vector<int64_t>> out;
    out.reserve(dec.edges.size());
    for (const auto& es : dec.edges) {
        const int64_t steps = static_cast<int64_t>(es.steps.size());
        if (steps < 1 || es.length != steps * kGridStep)
            raise(Errc::invalid_decomposition, "edge " + std::to_string(es.edge_id) +
                                                   " steps do not tile its path");
        std::vector<int64_t> offs;
        if (steps == 1) {
            offs = {10, 15, 25, 30};
        } else {
            offs = {10, 15, 25, 35};
            for (int64_t s = 1; s + 1 < steps; ++s)
                for (int64_t local : {5, 15, 25, 35}) offs.push_back(40 * s + local);
            const int64_t len = es.length;  // mirror the node-side pattern from the far end
            for (int64_t back : {35, 25, 15, 10}) offs.push_back(len - back);
        }
        out.push_back(std::move(offs));
    }
    return out;
}

std::vector<SupportPlacement> place_supports(const SimpleGraph& g, const GridEmbedding& emb) {
    static constexpr std::pair<int64_t, int64_t> kOrder[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::vector<SupportPlacement> out;
    out.reserve(static_cast<size_t>(g.vertex_count()));
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        std::set<std::pair<int64_t, int64_t>> used;
        for (const auto& ep : emb.edges) {
            const auto& poly = ep.polyline;
            if (ep.u == v)
                used.insert({sgn(poly[1].x - poly[0].x), sgn(poly[1].y - poly[0].y)});
            if (ep.v == v) {
                const size_t k = poly.size();
                used.insert({sgn(poly[k - 2].x - poly[k - 1].x), sgn(poly[k - 2].y - poly[k - 1].y)});
            }
        }
        SupportPlacement sp;
        sp.vertex = v;
        bool placed = false;
        for (const auto& d : kOrder) {
            if (used.contains(d)) continue;
            const Coord p = emb.vertex_pos[static_cast<size_t>(v)];
            sp.dir_x = d.first;
            sp.dir_y = d.second;
            sp.x = {p.x + d.first * 2, p.y + d.second * 2};
            sp.y = {p.x + d.first * 12, p.y + d.second * 12};
            sp.z = {p.x + d.first * 14, p.y + d.second * 14};
            placed = true;
            break;
        }
        if (!placed)
            raise(Errc::no_free_direction, "vertex " + std::to_string(v) +
                                               " uses all four axis directions");
        out.push_back(sp);
    }
    return out;
}

std::string SeparationReport::describe() const {
    if (ok) return "ok";
    std::ostringstream ss;
    ss << (unintended ? "unintended adjacency" : "missing chain edge") << " between points " << a
       << " and " << b << " (squared distance " << sq << ")";
    return ss.str();
}

SeparationReport check_separation(const UdgInstance& inst, const ReductionMap& map) {
    // reconstruct the intended chains from provenance
    std::set<std::pair<int32_t, int32_t>> intended;
    auto add = [&](int32_t a, int32_t b) { intended.insert(std::minmax(a, b)); };

    const int edge_count = map.graph.edge_count();
    std::vector<std::vector<std::pair<int64_t, int32_t>>> joints_by_edge(
        static_cast<size_t>(edge_count));
    std::vector<int32_t> sup_x(static_cast<size_t>(map.n_nodes), -1),
        sup_y(static_cast<size_t>(map.n_nodes), -1), sup_z(static_cast<size_t>(map.n_nodes), -1);
    for (size_t id = 0; id < map.origin.size(); ++id) {
        const PointOrigin& o = map.origin[id];
        if (o.type == PointOrigin::Type::joint)
            joints_by_edge[static_cast<size_t>(o.edge)].emplace_back(o.offset, static_cast<int32_t>(id));
        else if (o.type == PointOrigin::Type::support) {
            auto& slot = o.role == 'x' ? sup_x : (o.role == 'y' ? sup_y : sup_z);
            slot[static_cast<size_t>(o.vertex)] = static_cast<int32_t>(id);
        }
    }
    for (int e = 0; e < edge_count; ++e) {
        auto& chain = joints_by_edge[static_cast<size_t>(e)];
        std::sort(chain.begin(), chain.end());
        const auto [u, v] = map.graph.edges()[static_cast<size_t>(e)];
        int32_t prev = u;  // node ids equal vertex ids
        for (const auto& [off, id] : chain) {
            add(prev, id);
            prev = id;
        }
        add(prev, v);
    }
    for (int32_t v = 0; v < map.n_nodes; ++v) {
        add(v, sup_x[static_cast<size_t>(v)]);
        add(sup_x[static_cast<size_t>(v)], sup_y[static_cast<size_t>(v)]);
        add(sup_y[static_cast<size_t>(v)], sup_z[static_cast<size_t>(v)]);
    }

    const auto& pts = inst.points();
    for (int32_t i = 0; i < inst.size(); ++i)
        for (int32_t j = i + 1; j < inst.size(); ++j) {
            const bool actual = inst.adjacent(i, j);
            const bool wanted = intended.contains({i, j});
            if (actual != wanted)
                return {false, actual, i, j, sq_dist(pts[static_cast<size_t>(i)].pos,
                                                     pts[static_cast<size_t>(j)].pos)};
        }
    return {};
}

Reduction reduce(const SimpleGraph& g, const GridEmbedding& emb, bool verify_separation) {
    const ValidationResult val = validate_embedding(g, emb);
    if (!val.ok)
        raise(Errc::invalid_embedding, "rule " + std::to_string(val.violations.front().rule) + ": " +
                                           val.violations.front().what);

    const StepDecomposition dec = decompose_steps(emb);
    const auto joint_offsets = place_joints(dec);
    const auto supports = place_supports(g, emb);

    std::vector<PointRecord> pts;
    ReductionMap map;
    map.graph = g;
    map.embedding = emb;
    map.n_nodes = g.vertex_count();
    map.total_steps = total_segments(dec);

    int32_t next_id = 0;
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        pts.push_back({next_id, PointKind::node, emb.vertex_pos[static_cast<size_t>(v)]});
        map.origin.push_back({PointOrigin::Type::node, v, -1, -1, 0});
        ++next_id;
    }
    for (size_t e = 0; e < emb.edges.size(); ++e) {
        for (int64_t off : joint_offsets[e]) {
            pts.push_back({next_id, PointKind::joint, walk(emb.edges[e].polyline, off)});
            map.origin.push_back({PointOrigin::Type::joint, -1, static_cast<int32_t>(e), off, 0});
            ++next_id;
            ++map.j_count;
        }
    }
    for (const SupportPlacement& sp : supports) {
        const std::tuple<PointKind, Coord, char> triple[3] = {
            {PointKind::support_x, sp.x, 'x'},
            {PointKind::support_y, sp.y, 'y'},
            {PointKind::support_z, sp.z, 'z'},
        };
        for (const auto& [kind, pos, role] : triple) {
            pts.push_back({next_id, kind, pos});
            map.origin.push_back({PointOrigin::Type::support, sp.vertex, -1, -1, role});
            ++next_id;
            ++map.s_count;
        }
    }

    Reduction red{build_udg(std::move(pts)), std::move(map)};
    if (verify_separation) {
        const SeparationReport rep = check_separation(red.instance, red.map);
        if (!rep.ok) raise(Errc::separation_violation, rep.describe());
    }
    return red;
}

void write_provenance(std::ostream& out, const ReductionMap& map) {
    for (size_t id = 0; id < map.origin.size(); ++id) {
        const PointOrigin& o = map.origin[id];
        out << id << ' ';
        switch (o.type) {
            case PointOrigin::Type::node:
                out << "node " << o.vertex;
                break;
            case PointOrigin::Type::joint:
                out << "joint " << o.edge << ' ' << o.offset;
                break;
            case PointOrigin::Type::support:
                out << "support " << o.vertex << ' ' << o.role;
                break;
        }
        out << '\n';
    }
}

void write_provenance_file(const std::string& path, const ReductionMap& map) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_provenance(out, map);
}

} // namespace liardom
