#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flexcolor/list_coloring.hpp"
#include "flexcolor/planar_graph.hpp"
#include "flexcolor/rational.hpp"

namespace flexcolor {

// One requested color per vertex; order as read.
struct Request {
    std::vector<std::pair<int, int>> entries;  // (vertex, color)
};

// (vertex, color, weight) triples.
struct WeightedRequest {
    struct Entry {
        int vertex;
        int color;
        Rational weight;
    };
    std::vector<Entry> entries;
};

// Graph file: `planar <n>`, then n lines `v <id> : <nbr> ...` in clockwise
// order, optionally `outer : <v0> <v1> ...`. `#` starts a comment anywhere.
PlanarGraph parse_graph(const std::string& text);
PlanarGraph parse_graph_file(const std::string& path);
std::string format_graph(const PlanarGraph& g);

// List file: lines `L <vertex> : <c1> <c2> ...`.
ListAssignment parse_lists(const std::string& text);
ListAssignment parse_lists_file(const std::string& path);
std::string format_lists(const ListAssignment& L);

// Request file: lines `r <vertex> <color>`; weighted lines
// `w <vertex> <color> <weight>` with weight a decimal or `p/q`.
Request parse_request(const std::string& text);
Request parse_request_file(const std::string& path);
std::string format_request(const Request& r);

WeightedRequest parse_weighted_request(const std::string& text);
WeightedRequest parse_weighted_request_file(const std::string& path);
std::string format_weighted_request(const WeightedRequest& r);

std::string read_text_file(const std::string& path);

}  // namespace flexcolor
