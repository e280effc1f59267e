#include "liardom/embedding.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace liardom {

namespace {

int sgn(int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct Dir {
    int64_t dx, dy;
};

std::string coord_str(Coord c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

} // namespace

int64_t GridEmbedding::path_length(int edge_id) const {
    const auto& poly = edges[static_cast<size_t>(edge_id)].polyline;
    int64_t len = 0;
    for (size_t i = 1; i < poly.size(); ++i)
        len += std::abs(poly[i].x - poly[i - 1].x) + std::abs(poly[i].y - poly[i - 1].y);
    return len;
}

std::vector<Coord> canonical_polyline(std::vector<Coord> poly) {
    std::vector<Coord> out;
    for (const Coord& p : poly) {
        if (!out.empty() && out.back() == p) continue;  // zero-length piece
        if (out.size() >= 2) {
            const Coord& a = out[out.size() - 2];
            const Coord& b = out.back();
            const bool collinear = (sgn(b.x - a.x) == sgn(p.x - b.x)) && (sgn(b.y - a.y) == sgn(p.y - b.y));
            if (collinear && ((a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y))) {
                out.back() = p;
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

ValidationResult validate_embedding(const SimpleGraph& g, const GridEmbedding& emb) {
    if (static_cast<int>(emb.vertex_pos.size()) != g.vertex_count())
        raise(Errc::missing_vertex, "embedding places " + std::to_string(emb.vertex_pos.size()) +
                                        " vertices, graph has " + std::to_string(g.vertex_count()));
    if (emb.edges.size() != g.edges().size())
        raise(Errc::missing_edge_path, "embedding has " + std::to_string(emb.edges.size()) +
                                           " edge paths, graph has " + std::to_string(g.edges().size()));
    for (size_t e = 0; e < emb.edges.size(); ++e) {
        const auto& want = g.edges()[e];
        if (emb.edges[e].u != want.first || emb.edges[e].v != want.second)
            raise(Errc::missing_edge_path, "edge path " + std::to_string(e) + " is (" +
                                               std::to_string(emb.edges[e].u) + "," + std::to_string(emb.edges[e].v) +
                                               "), graph edge is (" + std::to_string(want.first) + "," +
                                               std::to_string(want.second) + ")");
    }

    ValidationResult res;
    auto flag = [&](int rule, std::string what) {
        res.ok = false;
        res.violations.push_back({rule, std::move(what)});
    };

    // rule 1/2: vertex placement distinct and on the 40-grid
    std::map<Coord, int32_t> vertex_at;
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        const Coord p = emb.vertex_pos[static_cast<size_t>(v)];
        if (auto [it, inserted] = vertex_at.emplace(p, v); !inserted)
            flag(1, "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                        " share position " + coord_str(p));
        if (p.x % kGridStep != 0 || p.y % kGridStep != 0)
            flag(2, "vertex " + std::to_string(v) + " off grid at " + coord_str(p));
    }
    if (!res.ok) return res;  // grid rasterization below assumes rules 1-2

    // rule 3: each path is a clean rectilinear polyline between its endpoints
    struct Usage {
        int32_t edge;
        bool endpoint;
    };
    std::map<Coord, std::vector<Usage>> point_usage;
    std::set<std::pair<Coord, Coord>> segments_seen;

    for (size_t e = 0; e < emb.edges.size(); ++e) {
        const auto& ep = emb.edges[e];
        const std::vector<Coord> poly = canonical_polyline(ep.polyline);
        const std::string tag = "edge (" + std::to_string(ep.u) + "," + std::to_string(ep.v) + ")";
        if (poly.size() < 2) {
            flag(3, tag + ": degenerate path");
            continue;
        }
        if (poly.front() != emb.vertex_pos[static_cast<size_t>(ep.u)] ||
            poly.back() != emb.vertex_pos[static_cast<size_t>(ep.v)]) {
            flag(3, tag + ": path does not join its endpoints");
            continue;
        }
        bool shape_ok = true;
        for (size_t i = 0; i < poly.size() && shape_ok; ++i) {
            if (poly[i].x % kGridStep != 0 || poly[i].y % kGridStep != 0) {
                flag(3, tag + ": bend off grid at " + coord_str(poly[i]));
                shape_ok = false;
            }
            if (i == 0) continue;
            const int64_t dx = poly[i].x - poly[i - 1].x;
            const int64_t dy = poly[i].y - poly[i - 1].y;
            if ((dx != 0) == (dy != 0)) {  // diagonal or zero-length
                flag(3, tag + ": piece " + coord_str(poly[i - 1]) + "-" + coord_str(poly[i]) +
                            " is not a positive axis-parallel segment");
                shape_ok = false;
            }
        }
        if (!shape_ok) continue;

        // rasterize to 40-quanta; grid-line paths can only meet at lattice points
        std::vector<Coord> pts{poly.front()};
        for (size_t i = 1; i < poly.size(); ++i) {
            Coord cur = poly[i - 1];
            const Dir d{sgn(poly[i].x - cur.x), sgn(poly[i].y - cur.y)};
            while (cur != poly[i]) {
                const Coord nxt{cur.x + d.dx * kGridStep, cur.y + d.dy * kGridStep};
                auto seg = std::minmax(cur, nxt);
                segments_seen.insert({seg.first, seg.second});
                pts.push_back(nxt);
                cur = nxt;
            }
        }
        std::set<Coord> own;
        bool simple = true;
        for (const Coord& p : pts)
            if (!own.insert(p).second) {
                flag(3, tag + ": path revisits " + coord_str(p));
                simple = false;
                break;
            }
        if (!simple) continue;
        for (size_t i = 0; i < pts.size(); ++i)
            point_usage[pts[i]].push_back({static_cast<int32_t>(e), i == 0 || i + 1 == pts.size()});
    }

    // rule 4: paths meet only at a graph vertex all of them end on
    for (const auto& [p, uses] : point_usage) {
        const auto interior =
            std::find_if(uses.begin(), uses.end(), [](const Usage& u) { return !u.endpoint; });
        if (interior == uses.end()) continue;
        const auto at = vertex_at.find(p);
        if (at != vertex_at.end()) {
            const auto& ep = emb.edges[static_cast<size_t>(interior->edge)];
            flag(4, "edge (" + std::to_string(ep.u) + "," + std::to_string(ep.v) +
                        ") passes through vertex " + std::to_string(at->second));
        } else if (uses.size() > 1) {
            flag(4, "paths intersect at " + coord_str(p));
        }
    }
    return res;
}

StepDecomposition decompose_steps(const GridEmbedding& emb) {
    StepDecomposition dec;
    for (size_t e = 0; e < emb.edges.size(); ++e) {
        const std::vector<Coord> poly = canonical_polyline(emb.edges[e].polyline);
        if (poly.size() < 2)
            raise(Errc::invalid_embedding, "edge " + std::to_string(e) + " has a degenerate path");
        int64_t len = 0;
        for (size_t i = 1; i < poly.size(); ++i) {
            const int64_t dx = poly[i].x - poly[i - 1].x;
            const int64_t dy = poly[i].y - poly[i - 1].y;
            if ((dx != 0) == (dy != 0) || (dx % kGridStep) || (dy % kGridStep))
                raise(Errc::invalid_embedding, "edge " + std::to_string(e) + " is not on the grid");
            len += std::abs(dx) + std::abs(dy);
        }
        EdgeSteps es;
        es.edge_id = static_cast<int32_t>(e);
        es.length = len;
        const int64_t count = len / kGridStep;
        for (int64_t s = 0; s < count; ++s) {
            Step st;
            const bool first = s == 0;
            const bool last = s == count - 1;
            if (first || last) {
                st.cls = StepClass::improper;
                st.node_end = first && last ? NodeEnd::both : (first ? NodeEnd::start : NodeEnd::end);
            }
            es.steps.push_back(st);
        }
        dec.edges.push_back(std::move(es));
    }
    return dec;
}

int total_segments(const StepDecomposition& dec) {
    int total = 0;
    for (const auto& es : dec.edges) total += static_cast<int>(es.steps.size());
    return total;
}

namespace {

// --- router internals (unit lattice; scaled to deci at the end) ---

// Dense occupancy/cost grids over the routing box. Horizontal segment
// (x,y)-(x+1,y) is keyed by its left point, vertical (x,y)-(x,y+1) by its
// lower point. Owners are edge ids, -1 when free.
struct Router {
    const SimpleGraph& g;
    std::vector<Coord> pos;  // lattice coords per vertex

    Coord lo, hi;
    int width = 0, height = 0;
    std::vector<int32_t> vertex_at, point_owner, hseg_owner, vseg_owner;
    std::vector<int32_t> point_hist, hseg_hist, vseg_hist;
    std::vector<int64_t> dist;
    std::vector<int32_t> parent;
    std::vector<uint32_t> stamp;
    uint32_t cur_stamp = 0;

    explicit Router(const SimpleGraph& graph) : g(graph) {}

    int idx(Coord p) const {
        return static_cast<int>(p.x - lo.x) * height + static_cast<int>(p.y - lo.y);
    }
    Coord coord(int i) const {
        return {lo.x + i / height, lo.y + i % height};
    }
    bool in_box(Coord p) const { return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y; }

    // segment between lattice neighbors a,b -> (grid index of the low end, horizontal?)
    std::pair<int, bool> seg_key(Coord a, Coord b) const {
        const Coord low = std::min(a, b);
        return {idx(low), a.y == b.y};
    }

    enum class Layout { bfs_columns, bfs_rows, line_by_id, line_by_bfs, line_seeded };

    void place(int spacing, Layout layout, uint64_t seed) {
        pos.assign(static_cast<size_t>(g.vertex_count()), Coord{});
        int64_t base_x = 0;
        for (const auto& comp : g.components()) {
            // breadth-first layering from the smallest vertex of the component
            std::vector<int> depth(static_cast<size_t>(g.vertex_count()), -1);
            std::deque<int32_t> queue{comp.front()};
            depth[static_cast<size_t>(comp.front())] = 0;
            std::vector<std::vector<int32_t>> layers;
            std::vector<int32_t> bfs_order;
            while (!queue.empty()) {
                const int32_t v = queue.front();
                queue.pop_front();
                bfs_order.push_back(v);
                const int d = depth[static_cast<size_t>(v)];
                if (static_cast<size_t>(d) >= layers.size()) layers.resize(static_cast<size_t>(d) + 1);
                layers[static_cast<size_t>(d)].push_back(v);
                for (int32_t u : g.neighbors(v))
                    if (depth[static_cast<size_t>(u)] < 0) {
                        depth[static_cast<size_t>(u)] = d + 1;
                        queue.push_back(u);
                    }
            }
            int64_t extent = 0;
            if (layout == Layout::bfs_columns || layout == Layout::bfs_rows) {
                const bool transpose = layout == Layout::bfs_rows;
                for (size_t d = 0; d < layers.size(); ++d) {
                    std::sort(layers[d].begin(), layers[d].end());
                    for (size_t i = 0; i < layers[d].size(); ++i) {
                        const int64_t along = static_cast<int64_t>(d) * spacing;
                        const int64_t across = static_cast<int64_t>(i) * spacing;
                        pos[static_cast<size_t>(layers[d][i])] =
                            transpose ? Coord{base_x + across, along} : Coord{base_x + along, across};
                    }
                    extent = std::max(extent, static_cast<int64_t>(
                                                  (transpose ? layers[d].size() - 1 : d) *
                                                  static_cast<size_t>(spacing)));
                }
            } else {
                // single row; edges route as nested arcs above and below
                std::vector<int32_t> order = bfs_order;
                if (layout == Layout::line_by_id) std::sort(order.begin(), order.end());
                if (layout == Layout::line_seeded) {
                    std::sort(order.begin(), order.end());
                    std::mt19937_64 rng(seed);
                    for (size_t i = order.size(); i > 1; --i)
                        std::swap(order[i - 1], order[static_cast<size_t>(rng() % i)]);
                }
                for (size_t i = 0; i < order.size(); ++i)
                    pos[static_cast<size_t>(order[i])] = {base_x + static_cast<int64_t>(i) * spacing, 0};
                extent = static_cast<int64_t>((order.size() - 1) * static_cast<size_t>(spacing));
            }
            base_x += extent + 2 * spacing + 2;
        }

        const int64_t margin = g.vertex_count() + 4;
        lo = hi = pos.empty() ? Coord{} : pos[0];
        for (const Coord& p : pos) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
        lo.x -= margin;
        lo.y -= margin;
        hi.x += margin;
        hi.y += margin;

        width = static_cast<int>(hi.x - lo.x + 1);
        height = static_cast<int>(hi.y - lo.y + 1);
        const size_t cells = static_cast<size_t>(width) * static_cast<size_t>(height);
        vertex_at.assign(cells, -1);
        point_owner.assign(cells, -1);
        hseg_owner.assign(cells, -1);
        vseg_owner.assign(cells, -1);
        point_hist.assign(cells, 0);
        hseg_hist.assign(cells, 0);
        vseg_hist.assign(cells, 0);
        dist.assign(cells, 0);
        parent.assign(cells, -1);
        stamp.assign(cells, 0);
        cur_stamp = 0;
        for (int32_t v = 0; v < g.vertex_count(); ++v)
            vertex_at[static_cast<size_t>(idx(pos[static_cast<size_t>(v)]))] = v;
    }

    // Min-cost path on the lattice: unit cost per step, a large penalty for
    // stepping on another edge's corridor (preferring long detours, ripping
    // only when enclosed), history-escalated so negotiation cannot oscillate.
    static constexpr int64_t kConflictCost = 1000;

    int64_t step_cost(int32_t edge, Coord p, Coord q) const {
        const auto [si, horizontal] = seg_key(p, q);
        const auto& seg_owner = horizontal ? hseg_owner : vseg_owner;
        const auto& seg_h = horizontal ? hseg_hist : vseg_hist;
        const int qi = idx(q);
        int64_t step = 1;
        const int32_t so = seg_owner[static_cast<size_t>(si)];
        if (so >= 0 && so != edge)
            step += kConflictCost * (1 + seg_h[static_cast<size_t>(si)]);
        else
            step += 2 * seg_h[static_cast<size_t>(si)];
        const int32_t po = point_owner[static_cast<size_t>(qi)];
        if (po >= 0 && po != edge)
            step += kConflictCost * (1 + point_hist[static_cast<size_t>(qi)]);
        else
            step += 2 * point_hist[static_cast<size_t>(qi)];
        return step;
    }

    // Ties break toward lower cost, then lower (x, y) (the grid index orders
    // points lexicographically), keeping routes fully deterministic.
    bool route(int32_t edge, Coord from, Coord to, std::vector<Coord>& path) {
        ++cur_stamp;
        using Entry = std::pair<int64_t, int32_t>;  // (cost, grid index)
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
        const int from_i = idx(from), to_i = idx(to);
        dist[static_cast<size_t>(from_i)] = 0;
        parent[static_cast<size_t>(from_i)] = from_i;
        stamp[static_cast<size_t>(from_i)] = cur_stamp;
        heap.push({0, from_i});
        while (!heap.empty()) {
            const auto [cost, pi] = heap.top();
            heap.pop();
            if (stamp[static_cast<size_t>(pi)] == cur_stamp && cost != dist[static_cast<size_t>(pi)])
                continue;
            if (pi == to_i) break;
            const Coord p = coord(pi);
            static constexpr std::pair<int64_t, int64_t> order[4] = {
                {-1, 0}, {0, -1}, {0, 1}, {1, 0}};
            for (const auto& d : order) {
                const Coord q{p.x + d.first, p.y + d.second};
                if (!in_box(q)) continue;
                const int qi = idx(q);
                if (qi != to_i && vertex_at[static_cast<size_t>(qi)] >= 0) continue;
                const int64_t next = cost + step_cost(edge, p, q);
                if (stamp[static_cast<size_t>(qi)] == cur_stamp &&
                    dist[static_cast<size_t>(qi)] <= next)
                    continue;
                stamp[static_cast<size_t>(qi)] = cur_stamp;
                dist[static_cast<size_t>(qi)] = next;
                parent[static_cast<size_t>(qi)] = pi;
                heap.push({next, qi});
            }
        }
        if (stamp[static_cast<size_t>(to_i)] != cur_stamp) return false;
        path.clear();
        for (int i = to_i; i != from_i; i = parent[static_cast<size_t>(i)]) path.push_back(coord(i));
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return true;
    }

    void set_owner(const std::vector<Coord>& path, int32_t owner) {
        for (size_t i = 0; i < path.size(); ++i) {
            if (i > 0) {
                const auto [si, horizontal] = seg_key(path[i - 1], path[i]);
                (horizontal ? hseg_owner : vseg_owner)[static_cast<size_t>(si)] = owner;
            }
            if (i > 0 && i + 1 < path.size())
                point_owner[static_cast<size_t>(idx(path[i]))] = owner;
        }
    }

    // Negotiated routing: edges enter in id order; an edge that cannot find a
    // free corridor takes the min-conflict path, rips the paths in its way
    // and re-queues them. Budget-bounded, fully deterministic.
    bool route_all(std::vector<std::vector<Coord>>& paths) {
        const int m = static_cast<int>(g.edges().size());
        paths.assign(static_cast<size_t>(m), {});
        std::deque<int32_t> queue;
        for (int32_t e = 0; e < m; ++e) queue.push_back(e);
        std::vector<int> rips(static_cast<size_t>(m), 0);
        int iterations = 0;
        const int iteration_cap = 120 + 30 * m;
        while (!queue.empty()) {
            if (++iterations > iteration_cap) return false;
            const int32_t e = queue.front();
            queue.pop_front();
            const auto [u, v] = g.edges()[static_cast<size_t>(e)];
            std::vector<Coord> path;
            if (!route(e, pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)], path))
                return false;  // hard-blocked by vertices or the box
            std::set<int32_t> conflicts;
            for (size_t i = 0; i < path.size(); ++i) {
                if (i > 0) {
                    const auto [si, horizontal] = seg_key(path[i - 1], path[i]);
                    const int32_t so = (horizontal ? hseg_owner : vseg_owner)[static_cast<size_t>(si)];
                    if (so >= 0) {
                        conflicts.insert(so);
                        ++(horizontal ? hseg_hist : vseg_hist)[static_cast<size_t>(si)];
                    }
                }
                const int32_t po = point_owner[static_cast<size_t>(idx(path[i]))];
                if (po >= 0 && po != e) {
                    conflicts.insert(po);
                    ++point_hist[static_cast<size_t>(idx(path[i]))];
                }
            }
            for (int32_t c : conflicts) {
                if (++rips[static_cast<size_t>(c)] > 40) return false;
                set_owner(paths[static_cast<size_t>(c)], -1);
                paths[static_cast<size_t>(c)].clear();
                queue.push_back(c);
            }
            paths[static_cast<size_t>(e)] = path;
            set_owner(path, e);
        }
        return true;
    }
};

} // namespace

GridEmbedding embed_graph(const SimpleGraph& g) {
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0)
            raise(Errc::isolated_vertex, "vertex " + std::to_string(v) + " has no incident edges");
        if (g.degree(v) > 3)
            raise(Errc::degree_too_high, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(g.degree(v)));
    }

    Router router(g);
    const int m = g.edge_count();
    struct Attempt {
        int spacing;
        Router::Layout layout;
        uint64_t seed;
    };
    std::vector<Attempt> ladder;
    for (int spacing : {1, 2, 3}) {
        ladder.push_back({spacing, Router::Layout::bfs_columns, 0});
        ladder.push_back({spacing, Router::Layout::bfs_rows, 0});
        ladder.push_back({spacing, Router::Layout::line_by_id, 0});
        ladder.push_back({spacing, Router::Layout::line_by_bfs, 0});
        if (spacing > 1)
            for (uint64_t seed = 1; seed <= 6; ++seed)
                ladder.push_back({spacing, Router::Layout::line_seeded, seed});
    }
    for (const Attempt& attempt : ladder) {
        router.place(attempt.spacing, attempt.layout, attempt.seed);
        std::vector<std::vector<Coord>> paths;
        if (!router.route_all(paths)) continue;
        GridEmbedding emb;
        emb.vertex_pos.reserve(static_cast<size_t>(g.vertex_count()));
        for (const Coord& p : router.pos)
            emb.vertex_pos.push_back({p.x * kGridStep, p.y * kGridStep});
        for (size_t e = 0; e < paths.size(); ++e) {
            EdgePath ep;
            ep.u = g.edges()[e].first;
            ep.v = g.edges()[e].second;
            for (const Coord& p : paths[e])
                ep.polyline.push_back({p.x * kGridStep, p.y * kGridStep});
            ep.polyline = canonical_polyline(std::move(ep.polyline));
            emb.edges.push_back(std::move(ep));
        }
        return emb;
    }
    raise(Errc::routing_failed, "router gave up within its backtracking budget (" +
                                    std::to_string(g.vertex_count()) + " vertices, " +
                                    std::to_string(m) + " edges)");
}

namespace {

bool payload_line(const std::string& line, std::string& out) {
    const auto hash = line.find('#');
    out = (hash == std::string::npos) ? line : line.substr(0, hash);
    return out.find_first_not_of(" \t\r") != std::string::npos;
}

} // namespace

GridEmbedding read_embedding(std::istream& in) {
    std::vector<std::pair<int32_t, Coord>> verts;
    std::vector<EdgePath> paths;
    std::string line, payload;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!payload_line(line, payload)) continue;
        std::istringstream ss(payload);
        std::string tag;
        ss >> tag;
        const std::string where = "embedding line " + std::to_string(lineno);
        if (tag == "v") {
            int32_t id;
            Coord p;
            if (!(ss >> id >> p.x >> p.y)) raise(Errc::parse_error, where + ": expected 'v <id> <x> <y>'");
            check_coord_bounds(p);
            verts.emplace_back(id, p);
        } else if (tag == "e") {
            EdgePath ep;
            if (!(ss >> ep.u >> ep.v)) raise(Errc::parse_error, where + ": expected 'e <u> <v> <coords...>'");
            Coord p;
            while (ss >> p.x >> p.y) {
                check_coord_bounds(p);
                ep.polyline.push_back(p);
            }
            if (!ss.eof()) raise(Errc::parse_error, where + ": dangling coordinate");
            if (ep.polyline.size() < 2) raise(Errc::parse_error, where + ": polyline needs two points");
            if (ep.u > ep.v) {
                std::swap(ep.u, ep.v);
                std::reverse(ep.polyline.begin(), ep.polyline.end());
            }
            ep.polyline = canonical_polyline(std::move(ep.polyline));
            paths.push_back(std::move(ep));
        } else {
            raise(Errc::parse_error, where + ": unknown tag '" + tag + "'");
        }
    }
    std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    GridEmbedding emb;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].first != static_cast<int32_t>(i))
            raise(Errc::parse_error, "embedding: vertex ids must be dense 0..n-1");
        emb.vertex_pos.push_back(verts[i].second);
    }
    std::sort(paths.begin(), paths.end(), [](const EdgePath& a, const EdgePath& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    emb.edges = std::move(paths);
    return emb;
}

GridEmbedding read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open embedding file '" + path + "'");
    return read_embedding(in);
}

void write_embedding(std::ostream& out, const GridEmbedding& emb) {
    for (size_t v = 0; v < emb.vertex_pos.size(); ++v)
        out << "v " << v << ' ' << emb.vertex_pos[v].x << ' ' << emb.vertex_pos[v].y << '\n';
    for (const auto& ep : emb.edges) {
        out << "e " << ep.u << ' ' << ep.v;
        for (const Coord& p : ep.polyline) out << ' ' << p.x << ' ' << p.y;
        out << '\n';
    }
}

void write_embedding_file(const std::string& path, const GridEmbedding& emb) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_embedding(out, emb);
}

} // namespace liardom
