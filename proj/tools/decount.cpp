#include <decount/error.hpp>
#include <decount/fixtures.hpp>
#include <decount/oracle.hpp>
#include <decount/pipeline.hpp>
#include <decount/reducer.hpp>
#include <decount/reductions.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace decount;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode
{
    exit_ok = 0,
    exit_internal = 1,
    exit_input = 2,
    exit_cap = 3,
    exit_mismatch = 4,
    exit_unsupported = 5
};

auto read_graph(const std::string & path) -> UndirectedGraph
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot read graph file '" + path + "'");
    return load_edge_list(in);
}

// A file path when one exists, a built-in name otherwise.
auto resolve_pattern(const std::string & spec) -> Pattern
{
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream in(spec);
        if (! in)
            throw InputError("cannot read pattern file '" + spec + "'");
        return load_pattern(in);
    }
    return builtin_pattern(spec);
}

auto open_output(const std::string & path, std::ofstream & file) -> std::ostream &
{
    if (path == "-")
        return std::cout;
    file.open(path);
    if (! file)
        throw InputError("cannot write '" + path + "'");
    return file;
}

auto arcs_json(const SmallDigraph & d) -> json
{
    json arcs = json::array();
    for (auto [u, v] : d.arcs())
        arcs.push_back({u, v});
    return arcs;
}

auto mask_json(VertexMask mask) -> json { return mask_vertices(mask); }

auto report_json(const ClassificationReport & report) -> json
{
    json out;
    json edges = json::array();
    for (auto [u, v] : report.pattern.edges())
        edges.push_back({u, v});
    out["pattern"] = {{"vertices", report.pattern.num_vertices()}, {"edges", edges},
        {"form", canonical_form(report.pattern).to_string()}};
    out["k_max"] = report.k_max;
    out["verdict"] = report.verdict();
    json list = json::array();
    for (std::size_t i = 0; i < report.orientations.size(); ++i) {
        const auto & o = report.orientations[i];
        json entry;
        entry["index"] = i;
        entry["form"] = o.form.to_string();
        entry["multiplicity"] = o.multiplicity;
        entry["sources"] = o.sources;
        entry["intersections"] = o.intersections;
        entry["route"] = to_string(o.route);
        entry["cycle_length"] = o.certificate ? json(o.certificate->k) : json(nullptr);
        entry["arcs"] = arcs_json(o.orientation);
        if (o.certificate) {
            json blocks = json::array(), inter = json::array();
            for (int b = 0; b < o.certificate->k; ++b) {
                blocks.push_back(mask_json(o.certificate->blocks[b]));
                inter.push_back(mask_json(o.certificate->intersections[b]));
            }
            entry["certificate"] = {{"blocks", blocks}, {"designated", o.certificate->designated}, {"intersections", inter}};
        }
        list.push_back(entry);
    }
    out["orientations"] = list;
    return out;
}

void print_report(const ClassificationReport & report)
{
    std::cout << "pattern: " << report.pattern.num_vertices() << " vertices, " << report.pattern.num_edges()
              << " edges, licl " << licl(report.pattern) << "\n";
    std::cout << std::left << std::setw(7) << "index" << std::setw(14) << "multiplicity" << std::setw(9) << "sources"
              << std::setw(15) << "intersections" << std::setw(11) << "route" << "k\n";
    for (std::size_t i = 0; i < report.orientations.size(); ++i) {
        const auto & o = report.orientations[i];
        std::cout << std::setw(7) << i << std::setw(14) << o.multiplicity << std::setw(9) << o.sources << std::setw(15)
                  << o.intersections << std::setw(11) << to_string(o.route) << (o.certificate ? std::to_string(o.certificate->k) : "-")
                  << "\n";
    }
    std::cout << "verdict: " << report.verdict() << "\n";
}

auto key_text(const ImageKey & key, const UndirectedGraph & g) -> std::string
{
    if (key.size == 0)
        return "-";
    std::string text;
    for (std::uint8_t i = 0; i < key.size; ++i) {
        if (i > 0)
            text += ',';
        text += std::to_string(g.label(key[i]));
    }
    return text;
}

// Induced subgraph on a random vertex subset.
auto random_induced(const UndirectedGraph & g, std::size_t size, std::mt19937_64 & rng) -> UndirectedGraph
{
    std::vector<VertexId> all(g.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v)
        all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(size, all.size()));
    std::vector<VertexId> index(g.num_vertices(), static_cast<VertexId>(-1));
    for (VertexId i = 0; i < all.size(); ++i)
        index[all[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != static_cast<VertexId>(-1) && index[v] != static_cast<VertexId>(-1))
            edges.emplace_back(index[u], index[v]);
    return UndirectedGraph::from_edges(all.size(), edges);
}

auto parse_engine(const std::string & name) -> WSubEngine
{
    if (name == "matrix")
        return WSubEngine::Matrix;
    if (name == "combinatorial")
        return WSubEngine::Combinatorial;
    return WSubEngine::BruteForce;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact subgraph and homomorphism counting for bounded-degeneracy graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    PipelineOptions options;
    unsigned threads = 0;
    std::string engine = "matrix";
    std::uint64_t delta = 0;
    app.add_option("--threads", threads, "Worker threads (default: $DECOUNT_THREADS or 1)");
    app.add_option("--engine", engine, "WSub engine")->check(CLI::IsMember({"matrix", "combinatorial", "bruteforce"}));
    app.add_option("--delta", delta, "Degree threshold for the matrix kernels (0 = default)");
    app.add_flag("--fallback", options.allow_fallback, "Count unsupported orientations by brute force");

    std::string graph_path, pattern_spec, mode, out_path = "-";
    int k = 0, k_max = 5;
    std::size_t orientation = 0;
    bool as_json = false;
    std::uint64_t seed = 1;
    int trials = 10;
    std::vector<int> ks;

    auto count = app.add_subcommand("count", "Count homomorphisms or subgraphs of a pattern");
    count->add_option("--graph", graph_path, "Edge-list file")->required();
    count->add_option("--pattern", pattern_spec, "Pattern file or built-in name")->required();
    count->add_option("--mode", mode = "sub", "hom or sub")->check(CLI::IsMember({"hom", "sub"}));
    count->add_option("--kmax", k_max, "Largest cycle length for reductions")->check(CLI::Range(3, 5));

    auto cycles = app.add_subcommand("cycles", "Count k-cycles");
    cycles->add_option("--graph", graph_path, "Edge-list file")->required();
    cycles->add_option("--k", k, "Cycle length, 3..10")->required();

    auto classify = app.add_subcommand("classify", "Per-orientation verdicts for a pattern");
    classify->add_option("--pattern", pattern_spec, "Pattern file or built-in name")->required();
    classify->add_option("--kmax", k_max, "Largest cycle length for reductions")->check(CLI::Range(3, 5));
    classify->add_flag("--json", as_json, "JSON output");

    auto reduce = app.add_subcommand("reduce", "Write the reduced layered graph of one orientation");
    reduce->add_option("--graph", graph_path, "Edge-list file")->required();
    reduce->add_option("--pattern", pattern_spec, "Pattern file or built-in name")->required();
    reduce->add_option("--orientation", orientation, "Orientation index as listed by classify")->required();
    reduce->add_option("--kmax", k_max, "Largest cycle length for reductions")->check(CLI::Range(3, 5));
    reduce->add_option("--out", out_path, "Output file, - for stdout");

    auto expand = app.add_subcommand("expand", "Write the even or odd expansion of a graph");
    expand->add_option("--graph", graph_path, "Edge-list file")->required();
    expand->add_option("--mode", mode, "even or odd")->required()->check(CLI::IsMember({"even", "odd"}));
    expand->add_option("--out", out_path, "Output file, - for stdout");

    auto verify = app.add_subcommand("verify", "Compare the pipeline with the brute-force oracles");
    verify->add_option("--graph", graph_path, "Edge-list file")->required();
    verify->add_option("--pattern", pattern_spec, "Pattern file or built-in name")->required();
    verify->add_option("--seed", seed, "Seed for sampled subgraphs");
    verify->add_option("--trials", trials, "Random induced subgraphs to check as well");

    auto bench = app.add_subcommand("bench", "Time cycle counting (informational)");
    bench->add_option("--graph", graph_path, "Edge-list file")->required();
    bench->add_option("--k", ks, "Cycle lengths")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    try {
        options.threads = resolve_threads(threads);
        options.engine = parse_engine(engine);
        options.thresholds.delta = delta;
        options.k_max = k_max;

        if (*count) {
            auto g = read_graph(graph_path);
            auto h = resolve_pattern(pattern_spec);
            CountingSession session(g, options);
            std::cout << (mode == "hom" ? session.hom(h) : session.sub(h)) << "\n";
        }
        else if (*cycles) {
            auto g = read_graph(graph_path);
            std::cout << count_cycles(g, k, options) << "\n";
        }
        else if (*classify) {
            auto report = classify_pattern(resolve_pattern(pattern_spec), k_max);
            if (as_json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                print_report(report);
        }
        else if (*reduce) {
            auto g = read_graph(graph_path);
            auto report = classify_pattern(resolve_pattern(pattern_spec), k_max);
            if (orientation >= report.orientations.size())
                throw InputError("orientation index " + std::to_string(orientation) + " out of range; the pattern has " +
                    std::to_string(report.orientations.size()) + " orientation classes");
            const auto & o = report.orientations[orientation];
            auto p = analyze(o.orientation);
            auto cert = o.certificate ? o.certificate : find_cycle_reduction(p, k_max);
            if (! cert)
                throw UnsupportedError("orientation " + std::to_string(orientation) + " is not cycle-reducible for k <= " +
                    std::to_string(k_max));
            auto lg = build_reduced_graph(*cert, p, orient_by_degeneracy(g));
            std::ofstream file;
            auto & out = open_output(out_path, file);
            out << "# k=" << lg.k << " vertices=" << lg.num_vertices() << " edges=" << lg.num_edges() << "\n";
            for (int i = 0; i < lg.k; ++i) {
                int next = (i + 1) % lg.k;
                for (const auto & e : lg.edges[i])
                    out << i << ' ' << key_text(lg.layer_keys[i][e.u], g) << ' ' << next << ' '
                        << key_text(lg.layer_keys[next][e.v], g) << ' ' << e.weight << '\n';
            }
        }
        else if (*expand) {
            auto g = read_graph(graph_path);
            std::ofstream file;
            write_edge_list(open_output(out_path, file), mode == "even" ? expand_even(g) : expand_odd(g));
        }
        else if (*verify) {
            auto g = read_graph(graph_path);
            auto h = resolve_pattern(pattern_spec);
            std::vector<UndirectedGraph> graphs;
            if (g.num_vertices() <= 40)
                graphs.push_back(g);
            std::mt19937_64 rng(seed);
            for (int t = 0; t < trials; ++t)
                graphs.push_back(random_induced(g, 12, rng));
            int mismatches = 0;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                CountingSession session(graphs[i], options);
                auto hom = session.hom(h), hom_ref = hom_bruteforce(graphs[i], h);
                auto sub = session.sub(h), sub_ref = sub_bruteforce(graphs[i], h);
                bool ok = hom == hom_ref && sub == sub_ref;
                mismatches += ! ok;
                std::cout << (i == 0 && g.num_vertices() <= 40 ? std::string("input") : "sample " + std::to_string(i)) << ": hom "
                          << hom << " / " << hom_ref << ", sub " << sub << " / " << sub_ref << (ok ? "  ok" : "  MISMATCH") << "\n";
            }
            if (mismatches > 0)
                throw VerificationError(std::to_string(mismatches) + " of " + std::to_string(graphs.size()) + " checks disagree");
            std::cout << "all " << graphs.size() << " checks agree\n";
        }
        else if (*bench) {
            auto g = read_graph(graph_path);
            std::cout << "graph: n=" << g.num_vertices() << " m=" << g.num_edges() << " degeneracy=" << degeneracy_order(g).degeneracy
                      << "\n";
            std::cout << std::left << std::setw(5) << "k" << std::setw(24) << "count" << "seconds\n";
            for (int len : ks) {
                auto start = std::chrono::steady_clock::now();
                auto c = count_cycles(g, len, options);
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                std::cout << std::setw(5) << len << std::setw(24) << c << std::fixed << std::setprecision(3) << secs << "\n";
            }
        }
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Input: return exit_input;
        case ErrorKind::CapExceeded: return exit_cap;
        case ErrorKind::Verification: return exit_mismatch;
        case ErrorKind::Unsupported: return exit_unsupported;
        case ErrorKind::Invariant: return exit_internal;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_ok;
}
