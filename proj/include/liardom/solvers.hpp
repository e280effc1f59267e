#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liardom/graph.hpp"

namespace liardom {

enum class Problem { ds, lds };

Problem problem_from_token(const std::string& tok);
const char* problem_token(Problem p);

enum class SolveStatus { proven_minimum, feasible_only };

struct SolveStats {
    uint64_t subsets_examined = 0;
    uint64_t nodes_expanded = 0;
    double elapsed_sec = 0.0;
};

struct SolveResult {
    std::optional<VertexSet> solution;  // empty means proven infeasible
    int size = -1;
    SolveStatus status = SolveStatus::proven_minimum;
    SolveStats stats;

    bool feasible() const { return solution.has_value(); }
};

struct SolveOptions {
    uint64_t budget = uint64_t{1} << 28;  // cap on subsets_examined
    bool parallel = true;                 // lexicographic block partitioning
};

// Trusted oracle: ascending k, all size-k subsets in lexicographic order,
// first feasible subset wins. Infeasibility (lds) is proven by exhausting
// every size, not by the component shortcut, so liars_feasible stays an
// independently testable characterization.
SolveResult brute_force_minimum(Problem problem, const SimpleGraph& g, const SolveOptions& opt = {});

// True iff no subset of size exactly k is feasible; by monotonicity this
// implies the minimum exceeds k.
bool prove_no_solution_of_size(Problem problem, const SimpleGraph& g, int k,
                               const SolveOptions& opt = {}, SolveStats* stats = nullptr);

// Every feasible size-k subset, in lexicographic order (audit helper).
std::vector<VertexSet> enumerate_feasible_of_size(Problem problem, const SimpleGraph& g, int k,
                                                  const SolveOptions& opt = {});

// Unmet-requirement potential: sum over vertices of max(0, 2 - |N[v] ∩ d|)
// plus sum over all pairs u < v of max(0, 3 - |(N[u] ∪ N[v]) ∩ d|).
// Zero iff is_liars_dominating(g, d).ok.
int64_t deficiency(const SimpleGraph& g, const VertexSet& d);

// Exact solver: forcing rules (|N[v]|<2 infeasible; |N[v]|=2 forces both;
// |N[u]∪N[v]|<3 infeasible, =3 forces all three) then in/out DFS with a
// deficiency lower bound ceil(def / max single-vertex coverage).
SolveResult branch_and_bound_lds(const SimpleGraph& g, const SolveOptions& opt = {});

// Baseline heuristic: repeatedly add the vertex with the largest deficiency
// decrease (smallest id on ties) until deficiency reaches zero.
// Throws Infeasible when liars_feasible fails.
SolveResult greedy_lds(const SimpleGraph& g, const SolveOptions& opt = {});

} // namespace liardom
