// Command-line front end. Talks to the library exclusively through the C API
// in flexcolor.h; all file I/O happens here.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flexcolor.h"

namespace {

using GraphPtr = std::unique_ptr<flexcolor_graph, decltype(&flexcolor_graph_free)>;

bool slurp(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// Prints the report (if any) to stdout and the stored error (if the call
// failed) to stderr; the status doubles as the process exit code.
int emit(int status, char* out) {
    if (out) {
        std::cout << out;
        flexcolor_string_free(out);
    }
    if (status >= 2) std::cerr << "error: " << flexcolor_last_error() << "\n";
    return status;
}

GraphPtr load_graph(const std::string& path, int& status) {
    std::string text;
    if (!slurp(path, text)) {
        status = fail("cannot read " + path);
        return {nullptr, flexcolor_graph_free};
    }
    GraphPtr g(flexcolor_graph_parse(text.c_str()), flexcolor_graph_free);
    if (!g) status = fail(flexcolor_last_error());
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flexcolor: list-coloring toolkit for triangle-free planar graphs"};
    app.require_subcommand(1);

    int k = 4, d = 1, b = 31, cap = 12, jobs = 1, n = 0, subdivisions = 0;
    long long trials = 1000;
    std::uint64_t seed = 0;
    std::string graph_path, lists_path, request_path;
    std::vector<int> subgraph;

    app.add_option("--jobs", jobs, "worker count (reserved; orchestration is single-threaded)")
        ->check(CLI::PositiveNumber)
        ->envname("FLEXCOLOR_JOBS");

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph file")->required();
    };
    auto add_lists = [&](CLI::App* cmd) {
        cmd->add_option("lists", lists_path, "list-assignment file")->required();
    };

    CLI::App* c_faces = app.add_subcommand("faces", "print the facial walks of the embedding");
    add_graph(c_faces);

    CLI::App* c_check = app.add_subcommand(
        "check-reducible", "brute-force reducibility verdict for an induced subgraph");
    add_graph(c_check);
    c_check->add_option("--subgraph", subgraph, "vertex ids inducing the subgraph")
        ->delimiter(',')
        ->required();
    c_check->add_option("--d", d, "independence distance")->envname("FLEXCOLOR_D");
    c_check->add_option("--k", k, "list size")->envname("FLEXCOLOR_K");
    c_check->add_option("--cap", cap, "subgraph size cap")->envname("FLEXCOLOR_CAP");

    CLI::App* c_find = app.add_subcommand("find-config", "locate a reducible configuration");
    add_graph(c_find);

    CLI::App* c_discharge =
        app.add_subcommand("discharge", "run the charge audit and print the report");
    add_graph(c_discharge);

    CLI::App* c_color = app.add_subcommand("color", "find one coloring from the lists");
    add_graph(c_color);
    add_lists(c_color);

    CLI::App* c_count = app.add_subcommand("count", "count colorings and check the 2^(n/b) bound");
    add_graph(c_count);
    add_lists(c_count);
    c_count->add_option("--b", b, "bound exponent divisor")->envname("FLEXCOLOR_B");

    CLI::App* c_flex =
        app.add_subcommand("flex", "sample colorings to satisfy a (weighted) request");
    add_graph(c_flex);
    add_lists(c_flex);
    c_flex->add_option("request", request_path, "request file (r or w lines)")->required();
    c_flex->add_option("--trials", trials, "number of samples")->envname("FLEXCOLOR_TRIALS");
    c_flex->add_option("--seed", seed, "random seed")->envname("FLEXCOLOR_SEED");

    CLI::App* c_estimate =
        app.add_subcommand("estimate", "empirical per-(vertex,color) probabilities");
    add_graph(c_estimate);
    add_lists(c_estimate);
    c_estimate->add_option("--trials", trials, "number of samples")->envname("FLEXCOLOR_TRIALS");
    c_estimate->add_option("--seed", seed, "random seed")->envname("FLEXCOLOR_SEED");

    CLI::App* c_gen =
        app.add_subcommand("gen", "emit a random triangle-free planar test fixture");
    c_gen->add_option("n", n, "target vertex count")->required();
    c_gen->add_option("--seed", seed, "random seed")->envname("FLEXCOLOR_SEED");
    c_gen->add_option("--subdivisions", subdivisions, "extra edge subdivisions");

    CLI::App* c_eps = app.add_subcommand("epsilon", "print the flexibility constant for (k, b)");
    c_eps->add_option("--k", k, "list size")->envname("FLEXCOLOR_K");
    c_eps->add_option("--b", b, "configuration size bound")->envname("FLEXCOLOR_B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Sequences the library call strictly before emit reads `out`.
    char* out = nullptr;
    auto finish = [&](int status) { return emit(status, out); };

    if (c_eps->parsed()) return finish(flexcolor_epsilon(k, b, &out));
    if (c_gen->parsed()) return finish(flexcolor_gen(n, seed, subdivisions, &out));

    int status = 0;
    GraphPtr g = load_graph(graph_path, status);
    if (!g) return status;

    if (c_faces->parsed()) return finish(flexcolor_faces(g.get(), &out));
    if (c_check->parsed())
        return finish(flexcolor_check_reducible(g.get(), subgraph.data(), int(subgraph.size()),
                                                d, k, cap, &out));
    if (c_find->parsed()) return finish(flexcolor_find_config(g.get(), &out));
    if (c_discharge->parsed()) return finish(flexcolor_discharge(g.get(), &out));

    std::string lists;
    if (!slurp(lists_path, lists)) return fail("cannot read " + lists_path);

    if (c_color->parsed()) return finish(flexcolor_color(g.get(), lists.c_str(), &out));
    if (c_count->parsed()) return finish(flexcolor_count(g.get(), lists.c_str(), b, &out));
    if (c_estimate->parsed())
        return finish(flexcolor_estimate(g.get(), lists.c_str(), trials, seed, &out));

    std::string request;
    if (!slurp(request_path, request)) return fail("cannot read " + request_path);
    return finish(flexcolor_flex(g.get(), lists.c_str(), request.c_str(), trials, seed, &out));
}
