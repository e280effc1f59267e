#include "liardom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>

#include "liardom/enumeration.hpp"

namespace liardom {

Problem problem_from_token(const std::string& tok) {
    if (tok == "ds") return Problem::ds;
    if (tok == "lds") return Problem::lds;
    raise(Errc::parse_error, "unknown problem '" + tok + "' (want ds|lds)");
}

const char* problem_token(Problem p) { return p == Problem::ds ? "ds" : "lds"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_mask_width(const SimpleGraph& g) {
    if (g.vertex_count() > 64)
        raise(Errc::unsupported_size, "solvers handle at most 64 vertices, got " +
                                          std::to_string(g.vertex_count()));
}

// mask-based requirement tables for n <= 64
struct MaskChecks {
    int n = 0;
    std::vector<uint64_t> closed;            // closed[v] = N[v]
    std::vector<uint64_t> pair_union_isect;  // unions of intersecting pairs, lex order
    std::vector<uint64_t> pair_union_all;    // unions of all pairs, lex order

    explicit MaskChecks(const SimpleGraph& g) : n(g.vertex_count()) {
        closed.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            uint64_t m = uint64_t{1} << v;
            for (int32_t u : g.neighbors(v)) m |= uint64_t{1} << u;
            closed[static_cast<size_t>(v)] = m;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const uint64_t un = closed[static_cast<size_t>(u)] | closed[static_cast<size_t>(v)];
                pair_union_all.push_back(un);
                if (closed[static_cast<size_t>(u)] & closed[static_cast<size_t>(v)])
                    pair_union_isect.push_back(un);
            }
    }

    bool ds_ok(uint64_t d) const {
        for (uint64_t m : closed)
            if (!(m & d)) return false;
        return true;
    }

    bool lds_ok(uint64_t d) const {
        for (uint64_t m : closed)
            if (std::popcount(m & d) < 2) return false;
        for (uint64_t m : pair_union_isect)
            if (std::popcount(m & d) < 3) return false;
        return true;
    }

    int64_t def(uint64_t d) const {
        int64_t total = 0;
        for (uint64_t m : closed) total += std::max(0, 2 - std::popcount(m & d));
        for (uint64_t m : pair_union_all) total += std::max(0, 3 - std::popcount(m & d));
        return total;
    }
};

VertexSet set_from_mask(uint64_t mask) {
    std::vector<int32_t> ids;
    while (mask) {
        ids.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet{std::move(ids)};
}

ScanOutcome scan_level(const MaskChecks& mc, Problem problem, int k, uint64_t budget, bool parallel) {
    auto feasible = [&](uint64_t m) { return problem == Problem::ds ? mc.ds_ok(m) : mc.lds_ok(m); };
    return scan_combinations(mc.n, k, budget, parallel, feasible);
}

} // namespace

SolveResult brute_force_minimum(Problem problem, const SimpleGraph& g, const SolveOptions& opt) {
    require_mask_width(g);
    const auto t0 = Clock::now();
    const MaskChecks mc(g);
    SolveResult res;
    for (int k = 0; k <= g.vertex_count(); ++k) {
        const uint64_t left = opt.budget - std::min(opt.budget, res.stats.subsets_examined);
        const ScanOutcome out = scan_level(mc, problem, k, left, opt.parallel);
        res.stats.subsets_examined += out.examined;
        if (out.witness_rank) {
            res.solution = set_from_mask(mask_of(unrank_combination(g.vertex_count(), k, *out.witness_rank)));
            res.size = k;
            res.status = SolveStatus::proven_minimum;
            res.stats.elapsed_sec = seconds_since(t0);
            return res;
        }
        if (out.budget_hit)
            raise(Errc::budget_exceeded, "brute force spent " + std::to_string(res.stats.subsets_examined) +
                                             " subset checks (budget " + std::to_string(opt.budget) + ")");
    }
    // every size exhausted: proven infeasible
    res.status = SolveStatus::proven_minimum;
    res.stats.elapsed_sec = seconds_since(t0);
    return res;
}

bool prove_no_solution_of_size(Problem problem, const SimpleGraph& g, int k,
                               const SolveOptions& opt, SolveStats* stats) {
    require_mask_width(g);
    if (k < 0 || k > g.vertex_count())
        raise(Errc::parse_error, "size " + std::to_string(k) + " outside 0..n");
    const auto t0 = Clock::now();
    const MaskChecks mc(g);
    const ScanOutcome out = scan_level(mc, problem, k, opt.budget, opt.parallel);
    if (stats) {
        stats->subsets_examined = out.examined;
        stats->elapsed_sec = seconds_since(t0);
    }
    if (out.budget_hit)
        raise(Errc::budget_exceeded, "size-" + std::to_string(k) + " scan exceeded budget");
    return !out.witness_rank.has_value();
}

std::vector<VertexSet> enumerate_feasible_of_size(Problem problem, const SimpleGraph& g, int k,
                                                  const SolveOptions& opt) {
    require_mask_width(g);
    if (k < 0 || k > g.vertex_count()) return {};
    const MaskChecks mc(g);
    auto feasible = [&](uint64_t m) { return problem == Problem::ds ? mc.ds_ok(m) : mc.lds_ok(m); };
    std::vector<uint64_t> ranks = collect_feasible_ranks(g.vertex_count(), k, opt.parallel, feasible);
    std::sort(ranks.begin(), ranks.end());
    std::vector<VertexSet> out;
    out.reserve(ranks.size());
    for (uint64_t r : ranks)
        out.push_back(set_from_mask(mask_of(unrank_combination(g.vertex_count(), k, r))));
    return out;
}

int64_t deficiency(const SimpleGraph& g, const VertexSet& d) {
    BlockBitset dm(g.vertex_count());
    for (int32_t v : d.members) {
        if (v < 0 || v >= g.vertex_count())
            raise(Errc::out_of_range_member, "set member " + std::to_string(v));
        dm.set(v);
    }
    int64_t total = 0;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) total += std::max(0, 2 - g.closed_mask(v).count_and(dm));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            total += std::max(0, 3 - g.closed_mask(u).count_union_and(g.closed_mask(v), dm));
    return total;
}

namespace {

struct BnbState {
    const MaskChecks& mc;
    uint64_t full_mask;
    uint64_t budget;
    uint64_t best_size;
    uint64_t best_mask = 0;
    bool found = false;
    SolveStats stats;

    int64_t def_counted(uint64_t d) {
        ++stats.subsets_examined;
        if (stats.subsets_examined > budget)
            raise(Errc::budget_exceeded, "branch and bound exceeded budget");
        return mc.def(d);
    }

    void dfs(uint64_t in, uint64_t excluded) {
        ++stats.nodes_expanded;
        const int64_t def = def_counted(in);
        if (def == 0) {
            const uint64_t sz = static_cast<uint64_t>(std::popcount(in));
            if (sz < best_size) {
                best_size = sz;
                best_mask = in;
                found = true;
            }
            return;
        }
        const uint64_t undecided = full_mask & ~(in | excluded);
        if (undecided == 0) return;
        if (def_counted(in | undecided) > 0) return;  // no completion can satisfy

        int64_t max_delta = 0;
        int branch_v = -1;
        for (uint64_t rest = undecided; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            const int64_t delta = def - def_counted(in | (uint64_t{1} << w));
            if (delta > max_delta) {
                max_delta = delta;
                branch_v = w;
            }
        }
        if (max_delta == 0) return;
        const uint64_t lb = static_cast<uint64_t>(std::popcount(in)) +
                            static_cast<uint64_t>((def + max_delta - 1) / max_delta);
        if (lb >= best_size) return;

        dfs(in | (uint64_t{1} << branch_v), excluded);
        dfs(in, excluded | (uint64_t{1} << branch_v));
    }
};

// greedy over masks; caller guarantees feasibility
uint64_t greedy_mask(const MaskChecks& mc, SolveStats& stats, uint64_t budget) {
    uint64_t d = 0;
    int64_t def = mc.def(d);
    while (def > 0) {
        int64_t best_delta = 0;
        int best_v = -1;
        for (int w = 0; w < mc.n; ++w) {
            if (d & (uint64_t{1} << w)) continue;
            ++stats.subsets_examined;
            if (stats.subsets_examined > budget) raise(Errc::budget_exceeded, "greedy exceeded budget");
            const int64_t delta = def - mc.def(d | (uint64_t{1} << w));
            if (delta > best_delta) {
                best_delta = delta;
                best_v = w;
            }
        }
        // progress is guaranteed while the instance is feasible
        assert(best_delta > 0);
        if (best_v < 0) raise(Errc::infeasible, "greedy stalled on an infeasible instance");
        d |= uint64_t{1} << best_v;
        def -= best_delta;
    }
    return d;
}

} // namespace

SolveResult branch_and_bound_lds(const SimpleGraph& g, const SolveOptions& opt) {
    require_mask_width(g);
    const auto t0 = Clock::now();
    SolveResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.solution = VertexSet{};
        res.size = 0;
        res.stats.elapsed_sec = seconds_since(t0);
        return res;
    }
    const MaskChecks mc(g);

    // forcing rules; they also decide feasibility exactly (components of size
    // 1 and 2 are precisely the |N[v]|<2 and |N[u]∪N[v]|<3 hits)
    uint64_t forced = 0;
    for (int v = 0; v < n; ++v) {
        const int c = std::popcount(mc.closed[static_cast<size_t>(v)]);
        if (c < 2) {
            res.stats.elapsed_sec = seconds_since(t0);
            return res;  // infeasible, proven
        }
        if (c == 2) forced |= mc.closed[static_cast<size_t>(v)];
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const uint64_t un = mc.closed[static_cast<size_t>(u)] | mc.closed[static_cast<size_t>(v)];
            const int c = std::popcount(un);
            if (c < 3) {
                res.stats.elapsed_sec = seconds_since(t0);
                return res;  // infeasible, proven
            }
            if (c == 3) forced |= un;
        }

    const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    BnbState st{mc, full, opt.budget, static_cast<uint64_t>(n) + 1, 0, false, {}};
    const uint64_t ub_mask = greedy_mask(mc, st.stats, opt.budget);
    st.best_size = static_cast<uint64_t>(std::popcount(ub_mask));
    st.best_mask = ub_mask;
    st.found = true;
    st.dfs(forced, 0);

    res.solution = set_from_mask(st.best_mask);
    res.size = static_cast<int>(st.best_size);
    res.status = SolveStatus::proven_minimum;
    res.stats = st.stats;
    res.stats.elapsed_sec = seconds_since(t0);
    return res;
}

SolveResult greedy_lds(const SimpleGraph& g, const SolveOptions& opt) {
    const auto feas = liars_feasible(g);
    if (!feas.feasible) raise(Errc::infeasible, feas.describe());
    require_mask_width(g);
    const auto t0 = Clock::now();
    const MaskChecks mc(g);
    SolveResult res;
    const uint64_t d = greedy_mask(mc, res.stats, opt.budget);
    res.solution = set_from_mask(d);
    res.size = std::popcount(d);
    res.status = SolveStatus::feasible_only;
    res.stats.elapsed_sec = seconds_since(t0);
    return res;
}

} // namespace liardom
