#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "fixtures.hpp"
#include "liardom/generate.hpp"
#include "liardom/render.hpp"

using namespace liardom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("liardom_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args, const std::string& out_file = "/dev/null",
            const std::string& err_file = "/dev/null") {
    const std::string cmd =
        std::string(LIARDOM_CLI_PATH) + " " + args + " > " + out_file + " 2> " + err_file;
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("generator determinism and shape") {
    const SimpleGraph a = gen_planar_max3(8, 123);
    const SimpleGraph b = gen_planar_max3(8, 123);
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.edges() == b.edges());
    CHECK(a.vertex_count() == 8);
    for (int32_t v = 0; v < a.vertex_count(); ++v) CHECK(a.degree(v) <= 3);
    const SimpleGraph c = gen_planar_max3(8, 124);
    CHECK((a.edges() != c.edges() || a.vertex_count() != c.vertex_count()));

    const auto pts = gen_points(50, 100, 9);
    CHECK(pts.size() == 50);
    CHECK(gen_points(50, 100, 9) == std::vector<PointRecord>(pts));
}

TEST_CASE("generated graphs embed and reduce across a seed sweep") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        const SimpleGraph g = gen_planar_max3(4 + static_cast<int>(seed % 5), seed);
        const GridEmbedding emb = embed_graph(g);
        CHECK(validate_embedding(g, emb).ok);
    }
}

TEST_CASE("svg rendering is deterministic and structured") {
    const Reduction red = fixtures::reduce_p3();
    const std::string svg1 = render_points_svg(red.instance.points());
    const std::string svg2 = render_points_svg(red.instance.points());
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg xmlns") != std::string::npos);
    // nodes render as filled circles, joints as rects, supports as open circles
    CHECK(svg1.find("<rect") != std::string::npos);
    CHECK(svg1.find("fill=\"none\" stroke=") != std::string::npos);
    const std::string emb_svg = render_embedding_svg(fixtures::p3_embedding());
    CHECK(emb_svg.find("<polyline") != std::string::npos);
}

TEST_CASE("cli pipeline: gen, embed, reduce, solve, verify, render") {
    TempDir tmp;
    write_graph_file(tmp / "k2.graph", fixtures::k2());

    SUBCASE("embed then reduce keeps the accounting identity") {
        CHECK(run_cli("gen --kind graph --n 6 --seed 3 -o " + (tmp / "g.graph")) == 0);
        CHECK(run_cli("embed -i " + (tmp / "g.graph") + " -o " + (tmp / "g.emb")) == 0);
        CHECK(run_cli("reduce -i " + (tmp / "g.graph") + " -e " + (tmp / "g.emb") + " -o " +
                      (tmp / "g.pts")) == 0);
        const SimpleGraph g = read_graph_file(tmp / "g.graph");
        const GridEmbedding emb = read_embedding_file(tmp / "g.emb");
        const auto pts = read_points_file(tmp / "g.pts");
        const int l = total_segments(decompose_steps(emb));
        CHECK(static_cast<int>(pts.size()) == 4 * (g.vertex_count() + l));
        CHECK(fs::exists(tmp / "g.pts.prov"));
    }

    SUBCASE("solve and verify round trip on the K2 gadget") {
        CHECK(run_cli("reduce -i " + (tmp / "k2.graph") + " -o " + (tmp / "a.pts")) == 0);
        CHECK(run_cli("solve -i " + (tmp / "a.pts") + " --problem lds --method brute -o " +
                      (tmp / "a.sol")) == 0);
        CHECK(read_solution_file(tmp / "a.sol").size() == 10);
        CHECK(run_cli("verify -i " + (tmp / "a.pts") + " -s " + (tmp / "a.sol") +
                      " --problem lds") == 0);

        // a deliberately broken solution: exit 1 with a condition-1 witness
        write_solution_file(tmp / "bad.sol", VertexSet::of({0, 1}));
        CHECK(run_cli("verify -i " + (tmp / "a.pts") + " -s " + (tmp / "bad.sol") +
                          " --problem lds",
                      tmp / "verify.out") == 1);
        CHECK(slurp(tmp / "verify.out").find("condition 1") != std::string::npos);
    }

    SUBCASE("theorem reports the falsified correspondence with exit 1") {
        CHECK(run_cli("theorem -i " + (tmp / "k2.graph"), tmp / "theorem.out") == 1);
        const std::string out = slurp(tmp / "theorem.out");
        CHECK(out.find("theorem n=2 l=1 gamma_ds=1 gamma_lds=10 expected=11 pass=0") !=
              std::string::npos);
        CHECK(out.find("certificate:") != std::string::npos);
    }

    SUBCASE("render twice is byte-identical") {
        CHECK(run_cli("reduce -i " + (tmp / "k2.graph") + " -o " + (tmp / "a.pts")) == 0);
        CHECK(run_cli("render -i " + (tmp / "a.pts") + " -o " + (tmp / "a.svg")) == 0);
        CHECK(run_cli("render -i " + (tmp / "a.pts") + " -o " + (tmp / "b.svg")) == 0);
        CHECK(slurp(tmp / "a.svg") == slurp(tmp / "b.svg"));
        CHECK(slurp(tmp / "a.svg").rfind("</svg>\n") != std::string::npos);
    }

    SUBCASE("exit codes: usage 2, infeasible 3") {
        CHECK(run_cli("solve --nope") == 2);
        std::ofstream(tmp / "broken.graph") << "not a graph\n";
        CHECK(run_cli("solve -i " + (tmp / "broken.graph")) == 2);
        // K2 itself (as a graph) has no liar's dominating set
        CHECK(run_cli("solve -i " + (tmp / "k2.graph") + " --problem lds --method brute") == 3);
        CHECK(run_cli("solve -i " + (tmp / "k2.graph") + " --problem ds --method brute -o " +
                      (tmp / "k2.sol")) == 0);
        CHECK(read_solution_file(tmp / "k2.sol").size() == 1);
    }
}
