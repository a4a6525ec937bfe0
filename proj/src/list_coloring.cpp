#include "flexcolor/list_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "flexcolor/errors.hpp"

namespace flexcolor {

ListAssignment ListAssignment::uniform(const PlanarGraph& g, std::vector<int> colors) {
    ListAssignment L;
    for (int v : g.vertices()) L.set(v, colors);
    return L;
}

void ListAssignment::set(int v, std::vector<int> colors) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists[v] = std::move(colors);
}

const std::vector<int>& ListAssignment::at(int v) const {
    auto it = lists.find(v);
    if (it == lists.end())
        throw Error(ErrorCode::precondition_violated,
                    "no color list for vertex " + std::to_string(v));
    return it->second;
}

bool ListAssignment::covers(const PlanarGraph& g) const {
    for (int v : g.vertices())
        if (!has(v)) return false;
    return true;
}

int Coloring::at(int v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw Error(ErrorCode::precondition_violated,
                    "vertex " + std::to_string(v) + " is uncolored");
    return it->second;
}

bool Coloring::valid_for(const PlanarGraph& g, const ListAssignment& L) const {
    for (int v : g.vertices()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) return false;
        const auto& lst = L.at(v);
        if (!std::binary_search(lst.begin(), lst.end(), it->second)) return false;
        for (int w : g.neighbors(v)) {
            auto jt = assignment.find(w);
            if (jt != assignment.end() && jt->second == it->second) return false;
        }
    }
    return true;
}

namespace {

// Shared backtracking core over an explicit vertex order. Colors are tried in
// ascending order, so with ascending-id vertex order the emission order is
// lexicographic. Returns false iff visit stopped the scan.
bool backtrack(const PlanarGraph& g, const ListAssignment& L,
               const std::vector<int>& order, std::size_t idx,
               std::map<int, int>& partial,
               const std::function<bool(const Coloring&)>& visit) {
    if (idx == order.size()) {
        Coloring c{partial};
        return visit(c);
    }
    int v = order[idx];
    std::vector<int> colors = L.at(v);
    std::sort(colors.begin(), colors.end());
    for (int c : colors) {
        bool clash = false;
        for (int w : g.neighbors(v)) {
            auto it = partial.find(w);
            if (it != partial.end() && it->second == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        partial[v] = c;
        if (!backtrack(g, L, order, idx + 1, partial, visit)) {
            partial.erase(v);
            return false;
        }
        partial.erase(v);
    }
    return true;
}

void require_cover(const PlanarGraph& g, const ListAssignment& L) {
    if (!L.covers(g))
        throw Error(ErrorCode::precondition_violated, "lists do not cover all vertices");
}

}  // namespace

bool for_each_coloring(const PlanarGraph& g, const ListAssignment& L,
                       const std::function<bool(const Coloring&)>& visit) {
    require_cover(g, L);
    std::vector<int> order = g.vertices();
    std::sort(order.begin(), order.end());
    std::map<int, int> partial;
    return backtrack(g, L, order, 0, partial, visit);
}

std::optional<Coloring> solve(const PlanarGraph& g, const ListAssignment& L) {
    require_cover(g, L);
    std::vector<int> order = g.vertices();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::optional<Coloring> found;
    std::map<int, int> partial;
    backtrack(g, L, order, 0, partial, [&](const Coloring& c) {
        found = c;
        return false;
    });
    return found;
}

unsigned long long count_colorings(const PlanarGraph& g, const ListAssignment& L) {
    unsigned long long n = 0;
    for_each_coloring(g, L, [&](const Coloring&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<Coloring> enumerate_colorings(const PlanarGraph& g, const ListAssignment& L,
                                          int cap) {
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::cap_exceeded,
                    "enumeration over " + std::to_string(g.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(cap));
    std::vector<Coloring> out;
    for_each_coloring(g, L, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

namespace {

struct BlockFinder {
    const PlanarGraph& g;
    std::map<int, int> num, low;
    int counter = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;

    explicit BlockFinder(const PlanarGraph& gr) : g(gr) {}

    void pop_block(std::pair<int, int> until) {
        std::set<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        for (int w : g.neighbors(v)) {
            if (w == parent) {
                parent = -1;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (!num.count(w)) {
                edge_stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) pop_block({v, w});
            } else if (num[w] < num[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> biconnected_blocks(const PlanarGraph& g) {
    BlockFinder bf(g);
    for (int v : g.vertices()) {
        if (bf.num.count(v)) continue;
        bf.dfs(v, -1);
        if (g.degree(v) == 0) bf.blocks.push_back({v});
    }
    std::sort(bf.blocks.begin(), bf.blocks.end());
    return bf.blocks;
}

bool block_is_complete(const PlanarGraph& g, const std::vector<int>& block) {
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (!g.has_edge(block[i], block[j])) return false;
    return true;
}

bool block_is_odd_cycle(const PlanarGraph& g, const std::vector<int>& block) {
    if (block.size() < 3 || block.size() % 2 == 0) return false;
    std::set<int> in(block.begin(), block.end());
    for (int v : block) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (in.count(w)) ++d;
        if (d != 2) return false;
    }
    return true;  // blocks are connected, and connected 2-regular means a cycle
}

bool gallai_condition(const PlanarGraph& g, const ListAssignment& L) {
    if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph must be connected");
    require_cover(g, L);
    bool slack = false;
    for (int v : g.vertices()) {
        if (int(L.size(v)) < g.degree(v)) return false;
        if (int(L.size(v)) > g.degree(v)) slack = true;
    }
    if (slack) return true;
    for (const auto& b : biconnected_blocks(g))
        if (!block_is_complete(g, b) && !block_is_odd_cycle(g, b)) return true;
    return false;
}

bool cor_rem_colorable(const PlanarGraph& g, int v, const ListAssignment& L) {
    if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph must be connected");
    require_cover(g, L);
    std::vector<int> rest;
    for (int u : g.vertices())
        if (u != v) rest.push_back(u);
    PlanarGraph gv = g.induced_subgraph(rest);
    if (!rest.empty() && !solve(gv, L))
        throw Error(ErrorCode::precondition_violated, "graph minus the vertex is not colorable");
    long long bound = 0;
    for (const auto& comp : gv.components()) {
        long long ci = comp.size();
        bool lists_ok = true;
        for (int x : comp)
            if (int(L.size(x)) < g.degree(x)) {
                lists_ok = false;
                break;
            }
        if (lists_ok) {
            std::vector<int> with_v = comp;
            with_v.push_back(v);
            PlanarGraph sub = g.induced_subgraph(with_v);
            for (const auto& b : biconnected_blocks(sub))
                if (!block_is_complete(sub, b) && !block_is_odd_cycle(sub, b)) {
                    --ci;
                    break;
                }
        }
        bound += ci;
    }
    return long(L.size(v)) > bound;
}

namespace {

struct KernelState {
    const PlanarGraph& g;
    const ListAssignment& L;
    std::set<int> alive;
    std::map<int, int> deg;
    std::vector<RemovalEvent> log;

    KernelState(const PlanarGraph& gr, const ListAssignment& lists) : g(gr), L(lists) {
        for (int v : g.vertices()) {
            alive.insert(v);
            deg[v] = g.degree(v);
        }
    }

    void remove(int rule, std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        for (int v : verts) {
            alive.erase(v);
            for (int w : g.neighbors(v))
                if (alive.count(w)) --deg[w];
        }
        log.push_back({rule, std::move(verts)});
    }

    std::vector<int> rule1_candidates() const {
        std::vector<int> out;
        for (int v : alive)
            if (int(L.size(v)) > deg.at(v)) out.push_back(v);
        return out;
    }

    // Blocks of the restriction to alive vertices whose list covers the
    // current degree, filtered to the removable shape.
    std::vector<std::vector<int>> rule2_candidates() const {
        std::vector<int> eligible;
        for (int v : alive)
            if (int(L.size(v)) >= deg.at(v)) eligible.push_back(v);
        if (eligible.empty()) return {};
        PlanarGraph sub = g.induced_subgraph(eligible);
        std::vector<std::vector<int>> out;
        for (const auto& b : biconnected_blocks(sub))
            if (!block_is_complete(sub, b) && !block_is_odd_cycle(sub, b)) out.push_back(b);
        return out;
    }

    KernelResult finish() {
        std::vector<int> rest(alive.begin(), alive.end());
        return {g.induced_subgraph(rest), std::move(log)};
    }
};

}  // namespace

KernelResult reduce_kernel(const PlanarGraph& g, const ListAssignment& L) {
    require_cover(g, L);
    KernelState st(g, L);
    while (true) {
        auto r1 = st.rule1_candidates();
        if (!r1.empty()) {
            st.remove(1, {r1.front()});
            continue;
        }
        auto r2 = st.rule2_candidates();
        if (!r2.empty()) {
            st.remove(2, r2.front());
            continue;
        }
        break;
    }
    return st.finish();
}

KernelResult reduce_kernel_shuffled(const PlanarGraph& g, const ListAssignment& L,
                                    std::uint64_t seed) {
    require_cover(g, L);
    KernelState st(g, L);
    std::mt19937_64 rng(seed);
    while (true) {
        auto r1 = st.rule1_candidates();
        auto r2 = st.rule2_candidates();
        std::size_t total = r1.size() + r2.size();
        if (total == 0) break;
        std::size_t pick = rng() % total;
        if (pick < r1.size())
            st.remove(1, {r1[pick]});
        else
            st.remove(2, r2[pick - r1.size()]);
    }
    return st.finish();
}

}  // namespace flexcolor
