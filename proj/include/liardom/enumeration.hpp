#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liardom {

// Lexicographic fixed-size combination scanning over {0..n-1}, n <= 64.
// Subsets are ordered as sorted index lists ({0,1,4} < {0,2,3}); the witness
// contract everywhere is "lexicographically first feasible", which makes the
// serial and OpenMP block-partitioned scans return identical results.

inline uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;  // intermediates overflow 64 bits near C(64,32)
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<uint64_t>(r);
}

using Combination = std::vector<int>;

inline Combination unrank_combination(int n, int k, uint64_t rank) {
    Combination c(static_cast<size_t>(k));
    int x = 0;
    for (int i = 0; i < k; ++i) {
        for (;;) {
            const uint64_t block = binom(n - 1 - x, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        c[static_cast<size_t>(i)] = x++;
    }
    return c;
}

// advances to the lex successor; false when c was the last combination
inline bool next_combination(Combination& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            int v = ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = ++v;
            return true;
        }
    }
    return false;
}

inline uint64_t mask_of(const Combination& c) {
    uint64_t m = 0;
    for (int i : c) m |= uint64_t{1} << i;
    return m;
}

struct ScanOutcome {
    std::optional<uint64_t> witness_rank;
    uint64_t examined = 0;
    bool budget_hit = false;
};

// Scans ranks [0, C(n,k)) in order, stopping at the first feasible subset or
// when `budget` checks have been spent.
template <class Feasible>
ScanOutcome scan_combinations_serial(int n, int k, uint64_t budget, Feasible&& feasible) {
    ScanOutcome out;
    const uint64_t total = binom(n, k);
    if (total == 0) return out;
    Combination c = unrank_combination(n, k, 0);
    uint64_t mask = mask_of(c);
    for (uint64_t rank = 0; rank < total; ++rank) {
        if (out.examined >= budget) {
            out.budget_hit = true;
            return out;
        }
        ++out.examined;
        if (feasible(mask)) {
            out.witness_rank = rank;
            return out;
        }
        if (!next_combination(c, n)) break;
        mask = mask_of(c);
    }
    return out;
}

// Identical contract; work split into contiguous lex-rank blocks across
// threads, with a shared best-rank so later blocks stop early.
template <class Feasible>
ScanOutcome scan_combinations_parallel(int n, int k, uint64_t budget, Feasible&& feasible) {
#ifndef _OPENMP
    return scan_combinations_serial(n, k, budget, feasible);
#else
    const uint64_t total = binom(n, k);
    ScanOutcome out;
    if (total == 0) return out;
    const int threads = std::max(1, omp_get_max_threads());
    if (total < 4096 || threads == 1) return scan_combinations_serial(n, k, budget, feasible);

    const uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
    std::atomic<uint64_t> best{UINT64_MAX};
    std::atomic<uint64_t> spent{0};
    std::atomic<bool> over_budget{false};

#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
        const uint64_t lo = std::min(total, static_cast<uint64_t>(t) * chunk);
        const uint64_t hi = std::min(total, lo + chunk);
        if (lo < hi && lo < best.load(std::memory_order_relaxed)) {
            Combination c = unrank_combination(n, k, lo);
            uint64_t mask = mask_of(c);
            uint64_t local_examined = 0;
            for (uint64_t rank = lo; rank < hi; ++rank) {
                if (rank >= best.load(std::memory_order_relaxed)) break;
                if (over_budget.load(std::memory_order_relaxed)) break;
                if ((local_examined & 1023) == 0) {
                    if (spent.load(std::memory_order_relaxed) + local_examined >= budget) {
                        spent.fetch_add(local_examined);
                        local_examined = 0;
                        if (spent.load() >= budget) {
                            over_budget.store(true);
                            break;
                        }
                    }
                }
                ++local_examined;
                if (feasible(mask)) {
                    uint64_t cur = best.load();
                    while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                    }
                    break;
                }
                if (!next_combination(c, n)) break;
                mask = mask_of(c);
            }
            spent.fetch_add(local_examined);
        }
    }

    out.examined = spent.load();
    const uint64_t b = best.load();
    if (b != UINT64_MAX)
        out.witness_rank = b;
    else if (over_budget.load())
        out.budget_hit = true;
    return out;
#endif
}

template <class Feasible>
ScanOutcome scan_combinations(int n, int k, uint64_t budget, bool parallel, Feasible&& feasible) {
    return parallel ? scan_combinations_parallel(n, k, budget, feasible)
                    : scan_combinations_serial(n, k, budget, feasible);
}

// Collects the lex ranks of every feasible size-k subset (audit helper).
template <class Feasible>
std::vector<uint64_t> collect_feasible_ranks(int n, int k, bool parallel, Feasible&& feasible) {
    const uint64_t total = binom(n, k);
    std::vector<uint64_t> ranks;
    if (total == 0) return ranks;
#ifdef _OPENMP
    if (parallel && total >= 4096) {
        const int threads = std::max(1, omp_get_max_threads());
        const uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        std::vector<std::vector<uint64_t>> local(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            const int t = omp_get_thread_num();
            const uint64_t lo = std::min(total, static_cast<uint64_t>(t) * chunk);
            const uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi) {
                Combination c = unrank_combination(n, k, lo);
                uint64_t mask = mask_of(c);
                for (uint64_t rank = lo; rank < hi; ++rank) {
                    if (feasible(mask)) local[static_cast<size_t>(t)].push_back(rank);
                    if (!next_combination(c, n)) break;
                    mask = mask_of(c);
                }
            }
        }
        for (auto& l : local) ranks.insert(ranks.end(), l.begin(), l.end());
        return ranks;
    }
#else
    (void)parallel;
#endif
    Combination c = unrank_combination(n, k, 0);
    uint64_t mask = mask_of(c);
    for (uint64_t rank = 0; rank < total; ++rank) {
        if (feasible(mask)) ranks.push_back(rank);
        if (!next_combination(c, n)) break;
        mask = mask_of(c);
    }
    return ranks;
}

} // namespace liardom
