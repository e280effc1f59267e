#include <doctest.h>

#include <random>

#include "liardom/enumeration.hpp"

using namespace liardom;

TEST_CASE("binomial coefficients") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(12, 0) == 1);
    CHECK(binom(12, 13) == 0);
    CHECK(binom(20, 17) == 1140);
    CHECK(binom(28, 24) == 20475);
    CHECK(binom(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("unrank enumerates combinations in lexicographic order") {
    for (const auto [n, k] : {std::pair{6, 3}, {7, 1}, {5, 5}, {8, 4}}) {
        Combination cur = unrank_combination(n, k, 0);
        const uint64_t total = binom(n, k);
        for (uint64_t rank = 0; rank < total; ++rank) {
            CHECK(unrank_combination(n, k, rank) == cur);
            const bool more = next_combination(cur, n);
            CHECK(more == (rank + 1 < total));
        }
    }
    // spot check the order is list-lexicographic, not numeric-mask order
    CHECK(unrank_combination(5, 3, 0) == Combination{0, 1, 2});
    CHECK(unrank_combination(5, 3, 1) == Combination{0, 1, 3});
    CHECK(unrank_combination(5, 3, 2) == Combination{0, 1, 4});
    CHECK(unrank_combination(5, 3, 3) == Combination{0, 2, 3});
    CHECK(unrank_combination(5, 3, 9) == Combination{2, 3, 4});
}

TEST_CASE("serial and parallel scans find the same first witness") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 10 + static_cast<int>(rng() % 9);
        const int k = 2 + static_cast<int>(rng() % 5);
        const uint64_t accept = rng();
        auto feasible = [&](uint64_t mask) { return ((mask * 0x9e3779b97f4a7c15ULL) ^ accept) % 97 == 0; };
        const ScanOutcome s = scan_combinations_serial(n, k, UINT64_MAX, feasible);
        const ScanOutcome p = scan_combinations_parallel(n, k, UINT64_MAX, feasible);
        CHECK(s.witness_rank == p.witness_rank);
    }
}

TEST_CASE("scan respects the budget") {
    auto never = [](uint64_t) { return false; };
    const ScanOutcome out = scan_combinations_serial(20, 10, 1000, never);
    CHECK(out.budget_hit);
    CHECK(out.examined == 1000);
    CHECK_FALSE(out.witness_rank.has_value());
}

TEST_CASE("collect_feasible_ranks matches a direct filter") {
    auto feasible = [](uint64_t mask) { return (mask & 1) != 0; };  // subsets containing element 0
    auto ranks = collect_feasible_ranks(8, 3, false, feasible);
    std::sort(ranks.begin(), ranks.end());
    CHECK(ranks.size() == binom(7, 2));
    auto par = collect_feasible_ranks(8, 3, true, feasible);
    std::sort(par.begin(), par.end());
    CHECK(ranks == par);
    for (uint64_t r : ranks) {
        const Combination c = unrank_combination(8, 3, r);
        CHECK(c.front() == 0);
    }
}
