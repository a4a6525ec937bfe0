#include "flexcolor.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "flexcolor/configurations.hpp"
#include "flexcolor/discharging.hpp"
#include "flexcolor/errors.hpp"
#include "flexcolor/flexibility.hpp"
#include "flexcolor/generate.hpp"
#include "flexcolor/io.hpp"
#include "flexcolor/list_coloring.hpp"
#include "flexcolor/planar_graph.hpp"
#include "flexcolor/reducibility.hpp"

using namespace flexcolor;

struct flexcolor_graph {
    PlanarGraph g;
};

namespace {

thread_local std::string t_last_error = "";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn() -> {status, report}; stores the report into *out on status 0/1.
template <typename Fn>
int guarded(char** out, Fn&& fn) {
    t_last_error.clear();
    if (out) *out = nullptr;
    try {
        auto [status, text] = fn();
        if (out) *out = dup_string(text);
        return status;
    } catch (const Error& e) {
        t_last_error = e.what();
        return e.exit_status();
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return FLEXCOLOR_BAD_INPUT;
    }
}

std::string coloring_lines(const Coloring& phi) {
    std::string out;
    for (const auto& [v, c] : phi.assignment)
        out += "c " + std::to_string(v) + " " + std::to_string(c) + "\n";
    return out;
}

bool looks_weighted(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        return tok == "w";
    }
    return false;
}

} // namespace

extern "C" {

flexcolor_graph* flexcolor_graph_parse(const char* text) {
    t_last_error.clear();
    try {
        return new flexcolor_graph{parse_graph(text ? text : "")};
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return nullptr;
    }
}

void flexcolor_graph_free(flexcolor_graph* g) { delete g; }

int flexcolor_graph_vertex_count(const flexcolor_graph* g) {
    return g ? g->g.vertex_count() : 0;
}

const char* flexcolor_last_error(void) { return t_last_error.c_str(); }

int flexcolor_faces(const flexcolor_graph* g, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        std::string text;
        for (const Face& f : g->g.faces()) {
            text += "face " + std::to_string(f.id);
            if (g->g.outer_face() == f.id) text += " outer";
            text += " :";
            for (int v : f.walk) text += " " + std::to_string(v);
            text += "\n";
        }
        return {FLEXCOLOR_OK, text};
    });
}

int flexcolor_check_reducible(const flexcolor_graph* g, const int* verts, int nverts,
                              int d, int k, int cap, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        std::vector<int> h(verts, verts + nverts);
        ReducibilityVerdict verdict = is_reducible(g->g, h, d, k, cap);
        if (verdict.reducible) return {FLEXCOLOR_OK, "reducible yes\n"};
        std::string text = "reducible no\n";
        if (verdict.failing_witness) {
            const ReducibilityWitness& w = *verdict.failing_witness;
            text += "condition " + w.condition + "\nset :";
            for (int v : w.set) text += " " + std::to_string(v);
            text += "\n" + format_lists(w.lists);
        }
        return {FLEXCOLOR_NO, text};
    });
}

int flexcolor_find_config(const flexcolor_graph* g, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        Configuration cfg = find_reducible(g->g);
        std::string text = std::string("config ") + config_kind_name(cfg.kind) + " vertices:";
        for (int v : cfg.vertex_set) text += " " + std::to_string(v);
        text += "\n";
        for (const Stalk& s : cfg.stalks) {
            text += std::string("stalk ") + stalk_kind_letter(s.kind) + " base " +
                    std::to_string(s.base) + " root " + std::to_string(s.root);
            if (s.bud) text += " bud " + std::to_string(*s.bud);
            text += " :";
            for (int v : s.vertices) text += " " + std::to_string(v);
            text += "\n";
        }
        for (const auto& cycle : cfg.cycles) {
            text += "cycle :";
            for (int v : cycle) text += " " + std::to_string(v);
            text += "\n";
        }
        return {FLEXCOLOR_OK, text};
    });
}

int flexcolor_discharge(const flexcolor_graph* g, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        return {FLEXCOLOR_OK, report_text(verify(g->g))};
    });
}

int flexcolor_color(const flexcolor_graph* g, const char* lists, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        auto phi = solve(g->g, parse_lists(lists ? lists : ""));
        if (!phi) return {FLEXCOLOR_NO, "no coloring\n"};
        return {FLEXCOLOR_OK, coloring_lines(*phi)};
    });
}

int flexcolor_count(const flexcolor_graph* g, const char* lists, int b, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        CountingBound cb = check_counting_bound(g->g, parse_lists(lists ? lists : ""), b);
        char bound[32];
        std::snprintf(bound, sizeof bound, "%.6g", cb.bound);
        std::string text = "count " + std::to_string(cb.count) + "\nbound " + bound +
                           "\nholds " + (cb.holds ? "yes" : "no") + "\n";
        return {cb.count ? FLEXCOLOR_OK : FLEXCOLOR_NO, text};
    });
}

int flexcolor_flex(const flexcolor_graph* g, const char* lists, const char* request,
                   long long trials, uint64_t seed, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        ListAssignment L = parse_lists(lists ? lists : "");
        std::string req = request ? request : "";
        std::string text;
        Coloring best;
        if (looks_weighted(req)) {
            WeightedOutcome w = satisfy_weighted(g->g, L, parse_weighted_request(req),
                                                 trials, seed);
            text = "value " + w.value.str() + "\ntotal " + w.total.str() + "\nratio " +
                   w.ratio.str() + "\n";
            best = std::move(w.best);
        } else {
            Request r = parse_request(req);
            RequestOutcome o = satisfy_request(g->g, L, r, trials, seed);
            text = "satisfied " + std::to_string(o.satisfied) + " of " +
                   std::to_string(r.entries.size()) + "\nfraction " + o.fraction.str() + "\n";
            best = std::move(o.best);
        }
        return {FLEXCOLOR_OK, text + coloring_lines(best)};
    });
}

int flexcolor_estimate(const flexcolor_graph* g, const char* lists, long long trials,
                       uint64_t seed, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        SampleStats stats =
            estimate_probabilities(g->g, parse_lists(lists ? lists : ""), trials, seed);
        std::string text = "trials " + std::to_string(stats.trials) + "\nmin " +
                           stats.min_empirical_prob.str() + "\n";
        for (const auto& [pair, hits] : stats.counts)
            text += "count " + std::to_string(pair.first) + " " + std::to_string(pair.second) +
                    " " + std::to_string(hits) + "\n";
        return {FLEXCOLOR_OK, text};
    });
}

int flexcolor_epsilon(int k, int b, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        return {FLEXCOLOR_OK, "epsilon " + theoretical_epsilon(k, b).str() + "\n"};
    });
}

int flexcolor_gen(int n, uint64_t seed, int subdivisions, char** out) {
    return guarded(out, [&]() -> std::pair<int, std::string> {
        return {FLEXCOLOR_OK, format_graph(gen_triangle_free(n, seed, subdivisions))};
    });
}

void flexcolor_string_free(char* s) { std::free(s); }

} // extern "C"
