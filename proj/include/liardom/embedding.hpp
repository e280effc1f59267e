#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"

namespace liardom {

// vertices and bends live on the 40-deci grid (4 units)
constexpr int64_t kGridStep = 40;

struct EdgePath {
    int32_t u = 0;
    int32_t v = 0;                // u < v, matching the graph's edge list
    std::vector<Coord> polyline;  // starts at pos[u], ends at pos[v]
};

// Rectilinear drawing: vertices on the 40-grid, edges as axis-parallel
// polylines bending only on the grid, pairwise disjoint except at shared
// endpoints.
struct GridEmbedding {
    std::vector<Coord> vertex_pos;  // indexed by vertex id
    std::vector<EdgePath> edges;    // indexed by edge id

    int64_t path_length(int edge_id) const;
};

// drops zero-length pieces and merges collinear runs
std::vector<Coord> canonical_polyline(std::vector<Coord> poly);

struct Violation {
    int rule = 0;  // 1 vertex placement, 2 off-grid vertex, 3 malformed path, 4 path conflict
    std::string what;
};

struct ValidationResult {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks the rectilinear drawing rules; coverage mismatches (vertex or edge
// present in only one of g/emb) throw MissingVertex / MissingEdgePath.
ValidationResult validate_embedding(const SimpleGraph& g, const GridEmbedding& emb);

enum class StepClass { proper, improper };
enum class NodeEnd { none, start, end, both };

struct Step {
    StepClass cls = StepClass::proper;
    NodeEnd node_end = NodeEnd::none;
};

struct EdgeSteps {
    int32_t edge_id = 0;
    int64_t length = 0;       // total path length in deci-units
    std::vector<Step> steps;  // length / 40 entries
};

// Edge paths tiled into directed length-40 steps; first and last step of
// every edge are improper (they touch a node), interior steps proper.
struct StepDecomposition {
    std::vector<EdgeSteps> edges;
};

StepDecomposition decompose_steps(const GridEmbedding& emb);
int total_segments(const StepDecomposition& dec);

// Desk-scale deterministic router: breadth-first layering on the grid,
// shortest-path edge routing over unused grid lines, backtracking over edge
// insertion order, spacing escalation. RoutingFailed is a budget report, not
// a planarity verdict.
GridEmbedding embed_graph(const SimpleGraph& g);

// Embedding file: `v <id> <x> <y>` lines, then `e <u> <v> <x1> <y1> ... <xk> <yk>`
// polyline lines (deci-units, endpoints included); '#' comments.
GridEmbedding read_embedding(std::istream& in);
GridEmbedding read_embedding_file(const std::string& path);
void write_embedding(std::ostream& out, const GridEmbedding& emb);
void write_embedding_file(const std::string& path, const GridEmbedding& emb);

} // namespace liardom
