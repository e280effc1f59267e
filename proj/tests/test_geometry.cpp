#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "liardom/geometry.hpp"

using namespace liardom;

namespace {

// independent wide-integer evaluation of the adjacency predicate; no part of
// the production path
bool adjacent_wide(Coord a, Coord b) {
    const __int128 dx = a.x - b.x;
    const __int128 dy = a.y - b.y;
    return dx * dx + dy * dy <= 100;
}

} // namespace

TEST_CASE("sq_dist basics") {
    CHECK(sq_dist({0, 0}, {0, 0}) == 0);
    CHECK(sq_dist({0, 0}, {10, 0}) == 100);
    CHECK(sq_dist({0, 0}, {5, 5}) == 50);
    // commutative
    CHECK(sq_dist({3, -7}, {-2, 9}) == sq_dist({-2, 9}, {3, -7}));
}

TEST_CASE("are_adjacent threshold is exact") {
    CHECK(are_adjacent({0, 0}, {10, 0}));
    CHECK_FALSE(are_adjacent({0, 0}, {10, 2}));  // 104 > 100, the support near-miss
    CHECK(are_adjacent({0, 0}, {5, 5}));         // 50, the cross-bend joint pair
}

TEST_CASE("adjacency agrees with an independent wide-integer oracle") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20000; ++trial) {
        const auto coord = [&]() -> int64_t {
            // mix tiny near-threshold offsets with full-range values
            if (rng() % 2) return static_cast<int64_t>(rng() % 41) - 20;
            return static_cast<int64_t>(rng() % (2 * static_cast<uint64_t>(kCoordLimit) + 1)) - kCoordLimit;
        };
        const Coord a{coord(), coord()}, b{coord(), coord()};
        CHECK(are_adjacent(a, b) == adjacent_wide(a, b));
        CHECK(are_adjacent(a, b) == are_adjacent(b, a));
    }
}

TEST_CASE("build_udg basics") {
    SUBCASE("two points at unit distance") {
        const UdgInstance inst = build_udg({{0, PointKind::node, {0, 0}}, {1, PointKind::node, {10, 0}}});
        CHECK(inst.edge_count() == 1);
        CHECK(inst.adjacent(0, 1));
    }
    SUBCASE("empty point list") {
        const UdgInstance inst = build_udg({});
        CHECK(inst.size() == 0);
        CHECK(inst.edge_count() == 0);
    }
    SUBCASE("duplicate position rejected") {
        CHECK_THROWS_WITH_AS(build_udg({{0, PointKind::node, {1, 1}}, {1, PointKind::node, {1, 1}}}),
                             doctest::Contains("DuplicatePosition"), Error);
    }
    SUBCASE("duplicate id rejected") {
        CHECK_THROWS_WITH_AS(build_udg({{0, PointKind::node, {0, 0}}, {0, PointKind::node, {9, 0}}}),
                             doctest::Contains("DuplicateId"), Error);
    }
    SUBCASE("gapped ids rejected") {
        CHECK_THROWS_AS(build_udg({{0, PointKind::node, {0, 0}}, {2, PointKind::node, {9, 0}}}), Error);
    }
    SUBCASE("out-of-bounds coordinate rejected") {
        CHECK_THROWS_AS(build_udg({{0, PointKind::node, {kCoordLimit + 1, 0}}}), Error);
    }
}

TEST_CASE("instance A edge set is exactly the intended chain") {
    const Reduction red = fixtures::reduce_k2();
    const auto& pts = red.instance.points();
    REQUIRE(pts.size() == 12);
    // oracle: exhaustive pairwise wide-integer check against the instance
    for (int32_t i = 0; i < red.instance.size(); ++i)
        for (int32_t j = i + 1; j < red.instance.size(); ++j)
            CHECK(red.instance.adjacent(i, j) ==
                  adjacent_wide(pts[static_cast<size_t>(i)].pos, pts[static_cast<size_t>(j)].pos));
    // the gadget is one 12-vertex path: 11 edges
    CHECK(red.instance.edge_count() == 11);
}

TEST_CASE("closed neighborhoods") {
    SUBCASE("isolated point") {
        const UdgInstance inst = build_udg({{0, PointKind::node, {0, 0}}, {1, PointKind::node, {100, 0}}});
        CHECK(inst.closed_neighborhood(0) == std::vector<int32_t>{0});
    }
    SUBCASE("instance A node v0: itself, its support x, the offset-10 joint") {
        const Reduction red = fixtures::reduce_k2();
        const auto nb = red.instance.closed_neighborhood(0);
        CHECK(nb.size() == 3);
        CHECK(red.instance.closed_neighborhood(0) == std::vector<int32_t>{0, 2, 6});
    }
    SUBCASE("midpoint of a 3-chain") {
        const UdgInstance inst = build_udg(
            {{0, PointKind::node, {0, 0}}, {1, PointKind::node, {10, 0}}, {2, PointKind::node, {20, 0}}});
        CHECK(inst.closed_neighborhood(1).size() == 3);
    }
    SUBCASE("unknown id") {
        const UdgInstance inst = build_udg({{0, PointKind::node, {0, 0}}});
        CHECK_THROWS_WITH_AS(inst.closed_neighborhood(5), doctest::Contains("UnknownId"), Error);
    }
}

TEST_CASE("max closed degree") {
    CHECK(max_closed_degree(build_udg({{0, PointKind::node, {0, 0}}})) == 1);
    CHECK(max_closed_degree(fixtures::reduce_k2().instance) == 3);
    // a degree-3 node point sees itself, three joints and its support x
    CHECK(max_closed_degree(fixtures::reduce_star3().instance) == 5);
    CHECK_THROWS_WITH_AS(max_closed_degree(build_udg({})), doctest::Contains("EmptyInstance"), Error);
}

TEST_CASE("build_udg is order-insensitive up to id relabeling") {
    std::mt19937_64 rng(7);
    const Reduction red = fixtures::reduce_p3();
    std::vector<PointRecord> pts = red.instance.points();
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(pts.begin(), pts.end(), rng);
        const UdgInstance again = build_udg(pts);
        for (int32_t i = 0; i < again.size(); ++i)
            CHECK(again.neighbors(i) == red.instance.neighbors(i));
    }
}

TEST_CASE("points file round trip") {
    const Reduction red = fixtures::reduce_p3();
    std::ostringstream out;
    write_points(out, red.instance.points());
    std::istringstream in(out.str());
    const auto back = read_points(in);
    REQUIRE(back.size() == red.instance.points().size());
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].id == red.instance.points()[i].id);
        CHECK(back[i].kind == red.instance.points()[i].kind);
        CHECK(back[i].pos == red.instance.points()[i].pos);
    }
}

TEST_CASE("points file parse errors") {
    {
        std::istringstream in("0 node 1\n");
        CHECK_THROWS_AS(read_points(in), Error);
    }
    {
        std::istringstream in("0 blob 1 2\n");
        CHECK_THROWS_WITH_AS(read_points(in), doctest::Contains("unknown point kind"), Error);
    }
    {
        std::istringstream in("# comment only\n0 sx -2 0\n");
        const auto pts = read_points(in);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].kind == PointKind::support_x);
    }
}
