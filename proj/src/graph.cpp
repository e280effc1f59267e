#include "liardom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace liardom {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int32_t, int32_t>> edges) : n_(n) {
    if (n < 0) raise(Errc::parse_error, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) raise(Errc::parse_error, "self-loop at " + std::to_string(u));
        if (u < 0 || v >= n) raise(Errc::unknown_vertex, "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        raise(Errc::parse_error, "duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    closed_.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        BlockBitset m(n);
        m.set(v);
        for (int32_t u : adj_[static_cast<size_t>(v)]) m.set(u);
        closed_.push_back(std::move(m));
    }
}

const std::vector<int32_t>& SimpleGraph::neighbors(int32_t v) const {
    if (v < 0 || v >= n_) raise(Errc::unknown_vertex, "vertex " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

bool SimpleGraph::adjacent(int32_t u, int32_t v) const {
    const auto& nu = neighbors(u);
    if (v < 0 || v >= n_) raise(Errc::unknown_vertex, "vertex " + std::to_string(v));
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<int32_t> SimpleGraph::closed_nbhd(int32_t v) const {
    std::vector<int32_t> out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

const BlockBitset& SimpleGraph::closed_mask(int32_t v) const {
    if (v < 0 || v >= n_) raise(Errc::unknown_vertex, "vertex " + std::to_string(v));
    return closed_[static_cast<size_t>(v)];
}

std::vector<std::vector<int32_t>> SimpleGraph::components() const {
    std::vector<std::vector<int32_t>> comps;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int32_t> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int32_t u : adj_[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

SimpleGraph to_graph(const UdgInstance& inst) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int32_t i = 0; i < inst.size(); ++i)
        for (int32_t j : inst.neighbors(i))
            if (i < j) edges.emplace_back(i, j);
    return SimpleGraph(inst.size(), std::move(edges));
}

VertexSet VertexSet::of(std::vector<int32_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return VertexSet{std::move(ids)};
}

VertexSet VertexSet::full(int n) {
    std::vector<int32_t> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    return VertexSet{std::move(ids)};
}

bool VertexSet::contains(int32_t v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::string VerifyReport::describe() const {
    if (ok) return "ok";
    std::ostringstream ss;
    ss << "condition " << failure->condition << " violated at ";
    if (failure->condition == 2)
        ss << "pair (" << failure->u << "," << failure->v << ")";
    else
        ss << "vertex " << failure->u;
    ss << ", achieved " << failure->achieved;
    return ss.str();
}

namespace {

BlockBitset member_mask(const SimpleGraph& g, const VertexSet& d) {
    BlockBitset m(g.vertex_count());
    for (int32_t v : d.members) {
        if (v < 0 || v >= g.vertex_count())
            raise(Errc::out_of_range_member, "set member " + std::to_string(v));
        m.set(v);
    }
    return m;
}

// condition (i) sweep shared by both liar's verifiers
std::optional<VerifyReport::Failure> first_condition1_failure(const SimpleGraph& g,
                                                              const BlockBitset& d) {
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        const int got = g.closed_mask(v).count_and(d);
        if (got < 2) return VerifyReport::Failure{1, v, -1, got};
    }
    return std::nullopt;
}

} // namespace

VerifyReport is_dominating(const SimpleGraph& g, const VertexSet& d) {
    const BlockBitset dm = member_mask(g, d);
    for (int32_t v = 0; v < g.vertex_count(); ++v)
        if (g.closed_mask(v).count_and(dm) < 1)
            return {false, VerifyReport::Failure{1, v, -1, 0}};
    return {};
}

VerifyReport is_liars_dominating(const SimpleGraph& g, const VertexSet& d) {
    const BlockBitset dm = member_mask(g, d);
    if (auto f = first_condition1_failure(g, dm)) return {false, f};
    // condition (i) holds, so disjoint-neighborhood pairs reach 2+2 >= 3 and
    // only intersecting pairs can fail; lex scan keeps witnesses smallest-first
    for (int32_t u = 0; u < g.vertex_count(); ++u)
        for (int32_t v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.closed_mask(u).intersects(g.closed_mask(v))) continue;
            const int got = g.closed_mask(u).count_union_and(g.closed_mask(v), dm);
            if (got < 3) return {false, VerifyReport::Failure{2, u, v, got}};
        }
    return {};
}

VerifyReport is_liars_dominating_full(const SimpleGraph& g, const VertexSet& d) {
    const BlockBitset dm = member_mask(g, d);
    if (auto f = first_condition1_failure(g, dm)) return {false, f};
    for (int32_t u = 0; u < g.vertex_count(); ++u)
        for (int32_t v = u + 1; v < g.vertex_count(); ++v) {
            const int got = g.closed_mask(u).count_union_and(g.closed_mask(v), dm);
            if (got < 3) return {false, VerifyReport::Failure{2, u, v, got}};
        }
    return {};
}

std::string FeasibilityReport::describe() const {
    if (feasible) return "feasible";
    std::ostringstream ss;
    ss << "infeasible: component {";
    for (size_t i = 0; i < small_component.size(); ++i)
        ss << (i ? "," : "") << small_component[i];
    ss << "} has fewer than 3 vertices";
    return ss.str();
}

FeasibilityReport liars_feasible(const SimpleGraph& g) {
    for (const auto& comp : g.components())
        if (comp.size() < 3) return {false, comp};
    return {};
}

namespace {

bool payload_line(const std::string& line, std::string& out) {
    const auto hash = line.find('#');
    out = (hash == std::string::npos) ? line : line.substr(0, hash);
    return out.find_first_not_of(" \t\r") != std::string::npos;
}

std::vector<std::string> payload_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line, payload;
    while (std::getline(in, line))
        if (payload_line(line, payload)) out.push_back(payload);
    return out;
}

} // namespace

SimpleGraph read_graph(std::istream& in) {
    const auto lines = payload_lines(in);
    if (lines.empty()) raise(Errc::parse_error, "graph file: missing 'n m' header");
    std::istringstream head(lines[0]);
    int n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0)
        raise(Errc::parse_error, "graph file: bad header '" + lines[0] + "'");
    if (static_cast<int>(lines.size()) - 1 != m)
        raise(Errc::parse_error, "graph file: expected " + std::to_string(m) + " edge lines, got " +
                                     std::to_string(lines.size() - 1));
    std::vector<std::pair<int32_t, int32_t>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        std::istringstream ss(lines[static_cast<size_t>(i)]);
        int32_t u, v;
        if (!(ss >> u >> v)) raise(Errc::parse_error, "graph file: bad edge line '" + lines[static_cast<size_t>(i)] + "'");
        if (!(0 <= u && u < v && v < n))
            raise(Errc::parse_error, "graph file: edge must satisfy 0 <= u < v < n, got " +
                                         std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const SimpleGraph& g) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_graph(out, g);
}

VertexSet read_solution(std::istream& in) {
    std::vector<int32_t> ids;
    std::string line, payload;
    while (std::getline(in, line)) {
        if (!payload_line(line, payload)) continue;
        std::istringstream ss(payload);
        int32_t v;
        if (!(ss >> v)) raise(Errc::parse_error, "solution file: bad line '" + payload + "'");
        std::string extra;
        if (ss >> extra) raise(Errc::parse_error, "solution file: one id per line");
        ids.push_back(v);
    }
    return VertexSet::of(std::move(ids));
}

VertexSet read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open solution file '" + path + "'");
    return read_solution(in);
}

void write_solution(std::ostream& out, const VertexSet& s) {
    for (int32_t v : s.members) out << v << '\n';
}

void write_solution_file(const std::string& path, const VertexSet& s) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_solution(out, s);
}

} // namespace liardom
