#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "liardom/generate.hpp"
#include "liardom/reduction.hpp"

using namespace liardom;

TEST_CASE("joint offsets follow the per-step patterns") {
    SUBCASE("single step: 10, 15, 25, 30") {
        const auto offs = place_joints(decompose_steps(fixtures::k2_embedding()));
        REQUIRE(offs.size() == 1);
        CHECK(offs[0] == std::vector<int64_t>{10, 15, 25, 30});
    }
    SUBCASE("two straight steps mirror the node pattern from the far end") {
        GridEmbedding emb;
        emb.vertex_pos = {{0, 0}, {80, 0}};
        emb.edges = {{0, 1, {{0, 0}, {80, 0}}}};
        const auto offs = place_joints(decompose_steps(emb));
        CHECK(offs[0] == std::vector<int64_t>{10, 15, 25, 35, 45, 55, 65, 70});
    }
    SUBCASE("three steps insert the proper-step pattern in the middle") {
        GridEmbedding emb;
        emb.vertex_pos = {{0, 0}, {120, 0}};
        emb.edges = {{0, 1, {{0, 0}, {120, 0}}}};
        const auto offs = place_joints(decompose_steps(emb));
        CHECK(offs[0] ==
              std::vector<int64_t>{10, 15, 25, 35, 45, 55, 65, 75, 85, 95, 105, 110});
    }
    SUBCASE("exactly four joints per step") {
        GridEmbedding emb;
        emb.vertex_pos = {{0, 0}, {160, 40}};
        emb.edges = {{0, 1, {{0, 0}, {160, 0}, {160, 40}}}};
        const auto dec = decompose_steps(emb);
        const auto offs = place_joints(dec);
        CHECK(offs[0].size() == 4 * dec.edges[0].steps.size());
    }
}

TEST_CASE("support placement follows the fixed direction order") {
    SUBCASE("edge leaving +x puts the chain at -x") {
        const auto sup = place_supports(fixtures::k2(), fixtures::k2_embedding());
        REQUIRE(sup.size() == 2);
        CHECK(sup[0].x == Coord{-2, 0});
        CHECK(sup[0].y == Coord{-12, 0});
        CHECK(sup[0].z == Coord{-14, 0});
        // v1's only edge leaves toward -x, so +x is first free
        CHECK(sup[1].x == Coord{42, 0});
    }
    SUBCASE("degree-3 vertex using +x, -x, +y gets -y") {
        const auto sup = place_supports(fixtures::star3(), fixtures::star3_embedding());
        CHECK(sup[0].dir_x == 0);
        CHECK(sup[0].dir_y == -1);
        CHECK(sup[0].x == Coord{0, -2});
    }
    SUBCASE("edge leaving +y leaves +x free") {
        SimpleGraph g(2, {{0, 1}});
        GridEmbedding emb;
        emb.vertex_pos = {{0, 0}, {0, 40}};
        emb.edges = {{0, 1, {{0, 0}, {0, 40}}}};
        const auto sup = place_supports(g, emb);
        CHECK(sup[0].x == Coord{2, 0});
        CHECK(sup[1].x == Coord{2, 40});
    }
}

TEST_CASE("reduce accounting on the canonical corpus") {
    struct Row {
        Reduction red;
        int n, l, total;
    };
    const Row rows[] = {{fixtures::reduce_k2(), 2, 1, 12},
                        {fixtures::reduce_p3(), 3, 2, 20},
                        {fixtures::reduce_star3(), 4, 3, 28}};
    for (const Row& row : rows) {
        CHECK(row.red.instance.size() == row.total);
        CHECK(row.red.map.n_nodes == row.n);
        CHECK(row.red.map.total_steps == row.l);
        CHECK(row.red.map.j_count == 4 * row.l);
        CHECK(row.red.map.s_count == 3 * row.n);
        CHECK(row.red.instance.size() == 4 * (row.n + row.l));
        CHECK(static_cast<int>(row.red.map.origin.size()) == row.total);
    }
}

TEST_CASE("reduce id layout is deterministic: nodes, joints, then supports") {
    const Reduction red = fixtures::reduce_p3();
    const auto& pts = red.instance.points();
    for (int32_t v = 0; v < 3; ++v) CHECK(pts[static_cast<size_t>(v)].kind == PointKind::node);
    for (int32_t j = 3; j < 11; ++j) CHECK(pts[static_cast<size_t>(j)].kind == PointKind::joint);
    CHECK(pts[11].kind == PointKind::support_x);
    CHECK(pts[12].kind == PointKind::support_y);
    CHECK(pts[13].kind == PointKind::support_z);
    // joints ordered by (edge, offset)
    int32_t last_edge = -1;
    int64_t last_off = -1;
    for (int32_t j = 3; j < 11; ++j) {
        const PointOrigin& o = red.map.origin[static_cast<size_t>(j)];
        REQUIRE(o.type == PointOrigin::Type::joint);
        CHECK(std::pair{o.edge, o.offset} > std::pair{last_edge, last_off});
        last_edge = o.edge;
        last_off = o.offset;
    }
    // byte-identical points files across runs
    std::ostringstream a, b;
    write_points(a, fixtures::reduce_p3().instance.points());
    write_points(b, fixtures::reduce_p3().instance.points());
    CHECK(a.str() == b.str());
}

TEST_CASE("support chains hang off each node with the exact gap pattern") {
    const Reduction red = fixtures::reduce_star3();
    const auto& pts = red.instance.points();
    for (int32_t v = 0; v < red.map.n_nodes; ++v) {
        int32_t sx = -1, sy = -1, sz = -1;
        for (size_t id = 0; id < red.map.origin.size(); ++id) {
            const PointOrigin& o = red.map.origin[id];
            if (o.type != PointOrigin::Type::support || o.vertex != v) continue;
            (o.role == 'x' ? sx : o.role == 'y' ? sy : sz) = static_cast<int32_t>(id);
        }
        const Coord pv = pts[static_cast<size_t>(v)].pos;
        CHECK(sq_dist(pv, pts[static_cast<size_t>(sx)].pos) == 4);
        CHECK(sq_dist(pts[static_cast<size_t>(sx)].pos, pts[static_cast<size_t>(sy)].pos) == 100);
        CHECK(sq_dist(pts[static_cast<size_t>(sy)].pos, pts[static_cast<size_t>(sz)].pos) == 4);
        // no shortcuts across the pendant chain
        CHECK(sq_dist(pv, pts[static_cast<size_t>(sy)].pos) == 144);
        CHECK(sq_dist(pts[static_cast<size_t>(sx)].pos, pts[static_cast<size_t>(sz)].pos) == 144);
        CHECK_FALSE(red.instance.adjacent(v, sy));
        CHECK_FALSE(red.instance.adjacent(sx, sz));
    }
}

TEST_CASE("each edge gadget induces a simple chain") {
    const Reduction red = fixtures::reduce_p3();
    for (int e = 0; e < red.map.graph.edge_count(); ++e) {
        std::vector<std::pair<int64_t, int32_t>> joints;
        for (size_t id = 0; id < red.map.origin.size(); ++id)
            if (red.map.origin[id].type == PointOrigin::Type::joint && red.map.origin[id].edge == e)
                joints.emplace_back(red.map.origin[id].offset, static_cast<int32_t>(id));
        std::sort(joints.begin(), joints.end());
        const auto [u, v] = red.map.graph.edges()[static_cast<size_t>(e)];
        std::vector<int32_t> chain{u};
        for (const auto& [off, id] : joints) chain.push_back(id);
        chain.push_back(v);
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j) {
                const bool want = j == i + 1;
                CHECK(red.instance.adjacent(chain[i], chain[j]) == want);
            }
    }
}

TEST_CASE("check_separation") {
    SUBCASE("canonical instances separate cleanly") {
        CHECK(check_separation(fixtures::reduce_k2().instance, fixtures::reduce_k2().map).ok);
        CHECK(check_separation(fixtures::reduce_p3().instance, fixtures::reduce_p3().map).ok);
        CHECK(check_separation(fixtures::reduce_star3().instance, fixtures::reduce_star3().map).ok);
    }
    SUBCASE("support near-miss sits at squared distance 104 on the corner instance") {
        const Reduction red = fixtures::reduce_p3();
        const auto& pts = red.instance.points();
        int64_t closest_miss = INT64_MAX;
        for (int32_t i = 0; i < red.instance.size(); ++i)
            for (int32_t j = i + 1; j < red.instance.size(); ++j)
                if (!red.instance.adjacent(i, j))
                    closest_miss = std::min(closest_miss, sq_dist(pts[static_cast<size_t>(i)].pos,
                                                                  pts[static_cast<size_t>(j)].pos));
        CHECK(closest_miss == 104);
    }
    SUBCASE("joints across a bend meet at squared distance 50 and stay intended") {
        SimpleGraph g(2, {{0, 1}});
        GridEmbedding emb;
        emb.vertex_pos = {{0, 0}, {40, 40}};
        emb.edges = {{0, 1, {{0, 0}, {40, 0}, {40, 40}}}};
        const Reduction red = reduce(g, emb);  // separation check runs fail-closed inside
        const auto& pts = red.instance.points();
        // offsets 35 and 45 straddle the bend at arc length 40
        int32_t a = -1, b = -1;
        for (size_t id = 0; id < red.map.origin.size(); ++id) {
            if (red.map.origin[id].offset == 35) a = static_cast<int32_t>(id);
            if (red.map.origin[id].offset == 45) b = static_cast<int32_t>(id);
        }
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        CHECK(sq_dist(pts[static_cast<size_t>(a)].pos, pts[static_cast<size_t>(b)].pos) == 50);
        CHECK(red.instance.adjacent(a, b));
    }
    SUBCASE("joints on distinct edges keep squared distance at least 200") {
        for (const Reduction& red : {fixtures::reduce_p3(), fixtures::reduce_star3()}) {
            const auto& pts = red.instance.points();
            int64_t closest = INT64_MAX;
            for (size_t i = 0; i < red.map.origin.size(); ++i)
                for (size_t j = i + 1; j < red.map.origin.size(); ++j) {
                    const PointOrigin& oi = red.map.origin[i];
                    const PointOrigin& oj = red.map.origin[j];
                    if (oi.type != PointOrigin::Type::joint || oj.type != PointOrigin::Type::joint)
                        continue;
                    if (oi.edge == oj.edge) continue;
                    closest = std::min(closest, sq_dist(pts[i].pos, pts[j].pos));
                }
            CHECK(closest == 200);  // perpendicular offset-10 joints at the shared node
        }
    }
    SUBCASE("a joint nudged toward its node trips the detector") {
        const Reduction red = fixtures::reduce_k2();
        std::vector<PointRecord> pts = red.instance.points();
        pts[2].pos = {5, 0};  // was (10,0)
        const UdgInstance corrupted = build_udg(pts);
        const SeparationReport rep = check_separation(corrupted, red.map);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.unintended);
        CHECK(rep.a == 2);
        CHECK(rep.b == 6);  // now within range of support x0
        CHECK(rep.sq == 49);
    }
}

TEST_CASE("reduce identities hold on seeded random graphs") {
    for (uint64_t seed : {11ULL, 22ULL, 33ULL, 44ULL}) {
        const SimpleGraph g = gen_planar_max3(6, seed);
        const GridEmbedding emb = embed_graph(g);
        const Reduction red = reduce(g, emb);
        const int l = red.map.total_steps;
        CHECK(red.map.j_count == 4 * l);
        CHECK(red.map.s_count == 3 * g.vertex_count());
        CHECK(red.instance.size() == 4 * (g.vertex_count() + l));
        CHECK(check_separation(red.instance, red.map).ok);
    }
}

TEST_CASE("provenance sidecar format") {
    const Reduction red = fixtures::reduce_k2();
    std::ostringstream out;
    write_provenance(out, red.map);
    CHECK(out.str() ==
          "0 node 0\n"
          "1 node 1\n"
          "2 joint 0 10\n"
          "3 joint 0 15\n"
          "4 joint 0 25\n"
          "5 joint 0 30\n"
          "6 support 0 x\n"
          "7 support 0 y\n"
          "8 support 0 z\n"
          "9 support 1 x\n"
          "10 support 1 y\n"
          "11 support 1 z\n");
}
