#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "flexcolor/planar_graph.hpp"

namespace flexcolor {

// Per-vertex color lists. Colors are small nonnegative integers. Lists are
// kept sorted and duplicate-free by set(); may be empty (vertex uncolorable).
struct ListAssignment {
    std::map<int, std::vector<int>> lists;

    static ListAssignment uniform(const PlanarGraph& g, std::vector<int> colors);

    void set(int v, std::vector<int> colors);
    const std::vector<int>& at(int v) const;
    bool has(int v) const { return lists.count(v) != 0; }
    std::size_t size(int v) const { return at(v).size(); }
    bool covers(const PlanarGraph& g) const;
};

struct Coloring {
    std::map<int, int> assignment;

    int at(int v) const;
    // Proper and within the lists, over all of V(g).
    bool valid_for(const PlanarGraph& g, const ListAssignment& L) const;
};

// Visits every L-coloring of g in lexicographic order (by vertex id, then
// color). visit returns false to stop early; the return value is true iff the
// scan ran to completion.
bool for_each_coloring(const PlanarGraph& g, const ListAssignment& L,
                       const std::function<bool(const Coloring&)>& visit);

// Exact backtracking search: vertices by decreasing degree (ties by id),
// colors in ascending numeric order.
std::optional<Coloring> solve(const PlanarGraph& g, const ListAssignment& L);

unsigned long long count_colorings(const PlanarGraph& g, const ListAssignment& L);

// Lexicographic order (vertex id, then color). Throws CapExceeded when g has
// more than cap vertices.
std::vector<Coloring> enumerate_colorings(const PlanarGraph& g, const ListAssignment& L,
                                          int cap = 31);

// Maximal 2-connected blocks (biconnected components), each as a sorted vertex
// set; bridges give 2-vertex blocks, isolated vertices 1-vertex blocks.
std::vector<std::vector<int>> biconnected_blocks(const PlanarGraph& g);
bool block_is_complete(const PlanarGraph& g, const std::vector<int>& block);
bool block_is_odd_cycle(const PlanarGraph& g, const std::vector<int>& block);

// Sufficient condition for L-colorability of a connected graph: every list at
// least as large as the degree, and either some list strictly larger or some
// block neither complete nor an odd cycle. Throws Disconnected.
bool gallai_condition(const PlanarGraph& g, const ListAssignment& L);

// Sufficient condition built around one vertex v: for each component C_i of
// g - v with n_i vertices, c_i = n_i - 1 when every x in C_i has
// |L(x)| >= deg_g(x) and g[C_i + v] has a block neither complete nor an odd
// cycle, else c_i = n_i. True when |L(v)| > sum c_i. Requires g connected and
// g - v L-colorable.
bool cor_rem_colorable(const PlanarGraph& g, int v, const ListAssignment& L);

struct RemovalEvent {
    int rule = 0;               // 1: slack vertex, 2: removable block
    std::vector<int> vertices;  // sorted
};

struct KernelResult {
    PlanarGraph kernel;
    std::vector<RemovalEvent> log;
};

// Repeatedly removes (1) a vertex whose list beats its current degree and
// (2) a block of the restriction to vertices with list >= current degree that
// is neither complete nor an odd cycle, until no rule applies. The kernel is
// L-colorable iff g is, and is independent of the application order.
KernelResult reduce_kernel(const PlanarGraph& g, const ListAssignment& L);

// Same fixpoint, applying eligible rules in seed-shuffled order; the kernel
// vertex set must agree with reduce_kernel's.
KernelResult reduce_kernel_shuffled(const PlanarGraph& g, const ListAssignment& L,
                                    std::uint64_t seed);

}  // namespace flexcolor
