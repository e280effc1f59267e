#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liardom/bitset.hpp"
#include "liardom/errors.hpp"
#include "liardom/geometry.hpp"

namespace liardom {

// Undirected simple graph: no self-loops, no duplicate edges, endpoints in range.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int32_t, int32_t>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // edges normalized to u < v, sorted; index in this list is the edge id
    const std::vector<std::pair<int32_t, int32_t>>& edges() const { return edges_; }
    const std::vector<int32_t>& neighbors(int32_t v) const;
    bool adjacent(int32_t u, int32_t v) const;
    int degree(int32_t v) const { return static_cast<int>(neighbors(v).size()); }

    // v plus its neighbors, ascending
    std::vector<int32_t> closed_nbhd(int32_t v) const;
    const BlockBitset& closed_mask(int32_t v) const;

    std::vector<std::vector<int32_t>> components() const;

private:
    int n_ = 0;
    std::vector<std::pair<int32_t, int32_t>> edges_;
    std::vector<std::vector<int32_t>> adj_;
    std::vector<BlockBitset> closed_;
};

SimpleGraph to_graph(const UdgInstance& inst);

// Set of vertex (or point) ids, kept sorted and unique.
struct VertexSet {
    std::vector<int32_t> members;

    static VertexSet of(std::vector<int32_t> ids);
    static VertexSet full(int n);
    bool contains(int32_t v) const;
    int size() const { return static_cast<int>(members.size()); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Falsification certificate carrier for the two verifiers: either ok, or the
// first violated condition in (i)-then-(ii) order with smallest witnesses.
struct VerifyReport {
    struct Failure {
        int condition = 0;  // 1: |N[v] ∩ D| deficit, 2: pair-union deficit
        int32_t u = -1;
        int32_t v = -1;  // -1 unless condition 2
        int achieved = 0;
    };

    bool ok = true;
    std::optional<Failure> failure;

    std::string describe() const;
};

VerifyReport is_dominating(const SimpleGraph& g, const VertexSet& d);

// Production verifier: condition (ii) scan restricted to pairs with
// intersecting closed neighborhoods (equivalent once condition (i) holds,
// since disjoint pairs contribute at least 2+2).
VerifyReport is_liars_dominating(const SimpleGraph& g, const VertexSet& d);

// Reference verifier scanning every pair; kept independent for cross-checks.
VerifyReport is_liars_dominating_full(const SimpleGraph& g, const VertexSet& d);

struct FeasibilityReport {
    bool feasible = true;
    std::vector<int32_t> small_component;  // a component of size <= 2 when infeasible

    std::string describe() const;
};

// Liar's domination is satisfiable iff every connected component has >= 3
// vertices (then d = V verifies; a component of size <= 2 violates (i) or (ii)).
FeasibilityReport liars_feasible(const SimpleGraph& g);

// Graph file: first payload line `n m`, then m lines `u v` with
// 0 <= u < v < n; duplicate edge or self-loop is a parse error; '#' comments.
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_graph_file(const std::string& path, const SimpleGraph& g);

// Solution file: one id per line; '#' comments.
VertexSet read_solution(std::istream& in);
VertexSet read_solution_file(const std::string& path);
void write_solution(std::ostream& out, const VertexSet& s);
void write_solution_file(const std::string& path, const VertexSet& s);

} // namespace liardom
