#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liardom/reduction.hpp"
#include "liardom/solvers.hpp"

namespace liardom {

// Concrete witness that a proof-derived claim failed verification on an
// instance; carried by results instead of being swallowed.
struct Falsification {
    std::string claim;
    VertexSet witness;
    std::string detail;

    std::string describe() const;
};

struct ForwardMapResult {
    VertexSet lds;  // node points of d, plus all joints and supports
    std::optional<Falsification> falsified;
};

// Necessity direction: maps a dominating set d of G to d ∪ J ∪ S in G' and
// verifies the result (fail-closed); |result| = |d| + 4l + 3n.
// Throws NotDominating when d is not a dominating set of G.
ForwardMapResult forward_map(const Reduction& red, const VertexSet& d);

struct ExtractResult {
    std::optional<VertexSet> dominating;  // present iff no certificate fired
    std::optional<Falsification> certificate;
};

// Sufficiency direction, as a verified-postcondition reinterpretation:
// (1) assert S ⊆ L, (2) project node points, (3) repair undominated vertices
// in ascending id order; the result must dominate G with
// |D| <= |L| - 4l - 3n or a SizeBoundViolated certificate is returned.
// Throws NotLiarsDominating when L is not a liar's dominating set of G'.
ExtractResult extract_dominating_set(const Reduction& red, const VertexSet& L);

struct TheoremReport {
    int32_t n = 0;
    int32_t l = 0;
    int gamma_ds = -1;
    int gamma_lds = -1;
    int expected = -1;  // gamma_ds + 4l + 3n
    bool pass = false;
    bool small_edge_set = false;  // |E| <= 2, outside the construction's stated hypothesis
    VertexSet ds_witness;
    VertexSet lds_witness;
    std::vector<Falsification> certificates;

    std::string machine_line() const;  // single-line record
    std::string table() const;         // human-readable summary
};

// Builds G' from g (embedding supplied or routed), computes γ(G) exactly and
// probes γ_LR(G') by forward-map witness plus a descending proof at
// expected-1; on a miss the true γ_LR is computed by branch and bound and the
// smaller liar's dominating set is attached as a falsification certificate.
TheoremReport theorem_check(const SimpleGraph& g, const std::optional<GridEmbedding>& emb = {},
                            const SolveOptions& opt = {});

// True iff every listed liar's dominating set contains all support points.
bool forced_support_audit(const ReductionMap& map, const std::vector<VertexSet>& all_min_lds);

} // namespace liardom
