#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liardom/embedding.hpp"
#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"

namespace liardom {

struct PointOrigin {
    enum class Type { node, joint, support };
    Type type = Type::node;
    int32_t vertex = -1;  // node / support
    int32_t edge = -1;    // joint
    int64_t offset = -1;  // joint: deci-units along the edge path from its u endpoint
    char role = 0;        // support: 'x', 'y' or 'z'
};

// Provenance of every gadget point plus the accounting identities
// j_count = 4*steps, s_count = 3*n, total = 4*(n + steps).
struct ReductionMap {
    std::vector<PointOrigin> origin;  // indexed by point id
    int32_t n_nodes = 0;
    int32_t total_steps = 0;
    int32_t j_count = 0;
    int32_t s_count = 0;
    SimpleGraph graph;
    GridEmbedding embedding;
};

struct Reduction {
    UdgInstance instance;
    ReductionMap map;
};

// Joint offsets per edge, measured along the path from its u endpoint:
// single-step edges use {10,15,25,30}; longer edges use {10,15,25,35} on the
// first step, {5,15,25,35} locally on proper steps, and mirror the first-step
// pattern from the far node on the last step. Exactly 4 joints per step.
std::vector<std::vector<int64_t>> place_joints(const StepDecomposition& dec);

struct SupportPlacement {
    int32_t vertex = 0;
    int64_t dir_x = 0, dir_y = 0;
    Coord x, y, z;  // 2, 12, 14 deci-units out along the free direction
};

// First direction in the fixed order +x, -x, +y, -y not used by an incident
// edge path's initial segment (free by degree <= 3).
std::vector<SupportPlacement> place_supports(const SimpleGraph& g, const GridEmbedding& emb);

struct SeparationReport {
    bool ok = true;
    bool unintended = false;  // true: extra adjacency, false: missing chain edge
    int32_t a = -1, b = -1;
    int64_t sq = -1;

    std::string describe() const;
};

// The instance's edge set must be exactly the intended chains: consecutive
// gadget points along each edge path plus each node's pendant x-y-z chain.
SeparationReport check_separation(const UdgInstance& inst, const ReductionMap& map);

// Builds the gadget instance from a validated embedding. Point ids: nodes by
// vertex id, then joints by (edge id, offset), then supports by (vertex, x/y/z).
// Runs check_separation fail-closed unless told otherwise.
Reduction reduce(const SimpleGraph& g, const GridEmbedding& emb, bool verify_separation = true);

// Provenance sidecar: `<point id> node <v>` | `<point id> joint <e> <offset>`
// | `<point id> support <v> <x|y|z>` lines.
void write_provenance(std::ostream& out, const ReductionMap& map);
void write_provenance_file(const std::string& path, const ReductionMap& map);

} // namespace liardom
