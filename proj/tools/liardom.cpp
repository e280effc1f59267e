// liardom: liar's domination on unit disk graphs — embed, reduce, solve,
// verify, theorem-check, render, generate.
//
// Exit codes: 0 success/pass, 1 verification or theorem failure,
// 2 usage/parse error, 3 infeasible instance or routing failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liardom/embedding.hpp"
#include "liardom/generate.hpp"
#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"
#include "liardom/reduction.hpp"
#include "liardom/render.hpp"
#include "liardom/solvers.hpp"
#include "liardom/theorem.hpp"

namespace {

using namespace liardom;

enum class FileKind { graph, points, embedding };

FileKind sniff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        std::string payload = hash == std::string::npos ? line : line.substr(0, hash);
        std::istringstream ss(payload);
        std::string t1;
        if (!(ss >> t1)) continue;
        if (t1 == "v" || t1 == "e") return FileKind::embedding;
        std::string t2, t3, t4, extra;
        if (ss >> t2) {
            if (!(ss >> t3)) return FileKind::graph;  // `n m` header
            if (ss >> t4 && !(ss >> extra)) return FileKind::points;
        }
        raise(Errc::parse_error, "cannot tell what kind of file '" + path + "' is");
    }
    raise(Errc::parse_error, "'" + path + "' is empty");
}

SimpleGraph load_instance_graph(const std::string& path, bool& was_points) {
    const FileKind kind = sniff_file(path);
    if (kind == FileKind::graph) {
        was_points = false;
        return read_graph_file(path);
    }
    if (kind == FileKind::points) {
        was_points = true;
        const UdgInstance inst = build_udg(read_points_file(path));
        std::cerr << "points instance: " << inst.size() << " points, " << inst.edge_count()
                  << " disk edges, max |N[p]| = " << (inst.size() ? max_closed_degree(inst) : 0)
                  << "\n";
        return to_graph(inst);
    }
    raise(Errc::parse_error, "'" + path + "' holds an embedding; expected a graph or points file");
}

void emit(const std::optional<std::string>& path, const std::string& payload) {
    if (!path) {
        std::cout << payload;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot open '" + *path + "' for writing");
    out << payload;
}

std::string to_string_embedding(const GridEmbedding& emb) {
    std::ostringstream ss;
    write_embedding(ss, emb);
    return ss.str();
}

int run_embed(const std::string& in, const std::optional<std::string>& out) {
    const SimpleGraph g = read_graph_file(in);
    if (g.edge_count() <= 2)
        std::cerr << "note: |E| <= 2, outside the construction's stated edge-count hypothesis\n";
    const GridEmbedding emb = embed_graph(g);
    const StepDecomposition dec = decompose_steps(emb);
    std::cerr << "embedded " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges using " << total_segments(dec) << " steps\n";
    emit(out, to_string_embedding(emb));
    return 0;
}

int run_reduce(const std::string& in, const std::optional<std::string>& emb_path,
               const std::string& out, const std::optional<std::string>& prov_path, bool unchecked) {
    const SimpleGraph g = read_graph_file(in);
    const GridEmbedding emb = emb_path ? read_embedding_file(*emb_path) : embed_graph(g);
    const Reduction red = reduce(g, emb, !unchecked);
    write_points_file(out, red.instance.points());
    const std::string prov = prov_path ? *prov_path : out + ".prov";
    write_provenance_file(prov, red.map);
    std::cerr << "reduced to " << red.instance.size() << " points (n=" << red.map.n_nodes
              << ", l=" << red.map.total_steps << ", |J|=" << red.map.j_count
              << ", |S|=" << red.map.s_count << ") -> " << out << ", " << prov << "\n";
    return 0;
}

int run_solve(const std::string& in, const std::string& problem, const std::string& method,
              uint64_t budget, bool serial, const std::optional<std::string>& out) {
    bool was_points = false;
    const SimpleGraph g = load_instance_graph(in, was_points);
    const Problem p = problem_from_token(problem);
    SolveOptions opt;
    opt.budget = budget;
    opt.parallel = !serial;

    SolveResult res;
    if (method == "brute") {
        res = brute_force_minimum(p, g, opt);
    } else if (method == "bnb") {
        if (p != Problem::lds) raise(Errc::parse_error, "--method bnb solves lds only");
        res = branch_and_bound_lds(g, opt);
    } else if (method == "greedy") {
        if (p != Problem::lds) raise(Errc::parse_error, "--method greedy solves lds only");
        res = greedy_lds(g, opt);
    } else {
        raise(Errc::parse_error, "unknown method '" + method + "' (want brute|bnb|greedy)");
    }

    std::cerr << "status " << (res.status == SolveStatus::proven_minimum ? "proven_minimum" : "feasible_only")
              << ", subsets examined " << res.stats.subsets_examined << ", nodes expanded "
              << res.stats.nodes_expanded << ", elapsed " << res.stats.elapsed_sec << " s\n";
    if (!res.feasible()) {
        std::cerr << "no " << problem_token(p) << " solution exists for this instance\n";
        return 3;
    }
    std::cerr << "solution size " << res.size << "\n";
    std::ostringstream payload;
    write_solution(payload, *res.solution);
    emit(out, payload.str());
    return 0;
}

int run_verify(const std::string& in, const std::string& sol_path, const std::string& problem) {
    bool was_points = false;
    const SimpleGraph g = load_instance_graph(in, was_points);
    const VertexSet sol = read_solution_file(sol_path);
    const Problem p = problem_from_token(problem);
    const VerifyReport rep =
        p == Problem::ds ? is_dominating(g, sol) : is_liars_dominating(g, sol);
    std::cout << rep.describe() << "\n";
    return rep.ok ? 0 : 1;
}

int run_theorem(const std::string& in, const std::optional<std::string>& emb_path, uint64_t budget,
                bool serial) {
    const SimpleGraph g = read_graph_file(in);
    std::optional<GridEmbedding> emb;
    if (emb_path) emb = read_embedding_file(*emb_path);
    SolveOptions opt;
    opt.budget = budget;
    opt.parallel = !serial;
    const TheoremReport rep = theorem_check(g, emb, opt);
    std::cout << rep.machine_line() << "\n" << rep.table();
    return rep.pass ? 0 : 1;
}

int run_render(const std::string& in, const std::optional<std::string>& out) {
    const FileKind kind = sniff_file(in);
    std::string svg;
    if (kind == FileKind::points)
        svg = render_points_svg(read_points_file(in));
    else if (kind == FileKind::embedding)
        svg = render_embedding_svg(read_embedding_file(in));
    else
        raise(Errc::parse_error, "render wants a points or embedding file");
    emit(out, svg);
    return 0;
}

int run_gen(const std::string& kind, int n, uint64_t seed, int64_t box,
            const std::optional<std::string>& out) {
    std::ostringstream payload;
    if (kind == "graph") {
        write_graph(payload, gen_planar_max3(n, seed));
    } else if (kind == "points") {
        write_points(payload, gen_points(n, box, seed));
    } else {
        raise(Errc::parse_error, "unknown gen kind '" + kind + "' (want graph|points)");
    }
    emit(out, payload.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"liar's domination on unit disk graphs"};
    app.require_subcommand(1);

    std::string in, sol, problem = "lds", method = "bnb", kind = "graph";
    std::optional<std::string> out, emb_path, prov_path;
    std::string reduce_out;
    uint64_t budget = uint64_t{1} << 28;
    uint64_t seed = 1;
    int n = 6;
    int64_t box = 100;
    bool unchecked = false, serial = false;

    auto* embed = app.add_subcommand("embed", "rectilinear grid embedding of a graph");
    embed->add_option("-i,--input", in, "graph file")->required();
    embed->add_option("-o,--output", out, "embedding file (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "build the gadget point instance from a graph");
    reduce->add_option("-i,--input", in, "graph file")->required();
    reduce->add_option("-e,--embedding", emb_path, "embedding file (routed internally if absent)");
    reduce->add_option("-o,--output", reduce_out, "points file")->required();
    reduce->add_option("--provenance", prov_path, "provenance file (default <output>.prov)");
    reduce->add_flag("--unchecked", unchecked, "skip the separation check");

    auto* solve = app.add_subcommand("solve", "minimum (liar's) dominating set");
    solve->add_option("-i,--input", in, "graph or points file")->required();
    solve->add_option("--problem", problem, "ds|lds (default lds)");
    solve->add_option("--method", method, "brute|bnb|greedy (default bnb)");
    solve->add_option("--budget", budget, "cap on subset checks");
    solve->add_flag("--serial", serial, "disable parallel enumeration");
    solve->add_option("-o,--output", out, "solution file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    verify->add_option("-i,--input", in, "graph or points file")->required();
    verify->add_option("-s,--solution", sol, "solution file")->required();
    verify->add_option("--problem", problem, "ds|lds (default lds)");

    auto* theorem = app.add_subcommand("theorem", "empirical size-correspondence check");
    theorem->add_option("-i,--input", in, "graph file")->required();
    theorem->add_option("-e,--embedding", emb_path, "embedding file (routed internally if absent)");
    theorem->add_option("--budget", budget, "cap on subset checks");
    theorem->add_flag("--serial", serial, "disable parallel enumeration");

    auto* render = app.add_subcommand("render", "deterministic SVG of points or an embedding");
    render->add_option("-i,--input", in, "points or embedding file")->required();
    render->add_option("-o,--output", out, "svg file (default stdout)");

    auto* gen = app.add_subcommand("gen", "seeded random instances");
    gen->add_option("--kind", kind, "graph|points (default graph)");
    gen->add_option("--n", n, "target size");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--box", box, "points: half-width of the sample box");
    gen->add_option("-o,--output", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (embed->parsed()) return run_embed(in, out);
        if (reduce->parsed()) return run_reduce(in, emb_path, reduce_out, prov_path, unchecked);
        if (solve->parsed()) return run_solve(in, problem, method, budget, serial, out);
        if (verify->parsed()) return run_verify(in, sol, problem);
        if (theorem->parsed()) return run_theorem(in, emb_path, budget, serial);
        if (render->parsed()) return run_render(in, out);
        if (gen->parsed()) return run_gen(kind, n, seed, box, out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == Errc::infeasible || e.code() == Errc::routing_failed) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
