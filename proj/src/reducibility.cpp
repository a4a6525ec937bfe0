#include "flexcolor/reducibility.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "flexcolor/errors.hpp"

namespace flexcolor {

int DegreeBound::at(int v) const {
    auto it = values.find(v);
    if (it == values.end())
        throw Error(ErrorCode::precondition_violated,
                    "no bound for vertex " + std::to_string(v));
    return it->second;
}

DegreeBound DegreeBound::lowered_at(int v) const {
    DegreeBound b = *this;
    if (!b.values.count(v))
        throw Error(ErrorCode::precondition_violated,
                    "no bound for vertex " + std::to_string(v));
    b.values[v] = 1;
    return b;
}

DegreeBound DegreeBound::minus_one_on(const std::vector<int>& I) const {
    DegreeBound b = *this;
    for (int v : I) {
        if (!b.values.count(v))
            throw Error(ErrorCode::precondition_violated,
                        "no bound for vertex " + std::to_string(v));
        --b.values[v];
    }
    return b;
}

int DegreeBound::universe() const {
    int s = 0;
    for (auto& [v, f] : values) s += std::max(f, 0);
    return s;
}

DegreeBound delta(const PlanarGraph& g, const std::vector<int>& h_vertices, int k) {
    DegreeBound b;
    for (int v : h_vertices) b.values[v] = k - g.degree(v);
    return b;
}

DegreeBound reducibility_bound(const PlanarGraph& g, const PlanarGraph& h, int k) {
    DegreeBound b;
    for (int v : h.vertices()) b.values[v] = h.degree(v) + k - g.degree(v);
    return b;
}

namespace {

// Exhaustive scan of exact-size list assignments for one connected component,
// in canonical form: a color index may exceed the running maximum only by
// joining consecutively, and every color's support must end up connected.
// Positions follow BFS order so supports grow locally.
struct ComponentScan {
    int n = 0;
    int U = 0;
    std::vector<int> ids;            // position -> original vertex id
    std::vector<int> fval;           // position -> required list size
    std::vector<std::uint64_t> adj;  // position -> neighbor positions
    std::vector<std::uint64_t> lists;
    std::vector<std::uint64_t> support;  // color -> positions holding it
    int max_used = -1;
    std::vector<std::uint64_t> counterexample;

    bool support_reachable(std::uint64_t s, std::uint64_t allowed) const {
        std::uint64_t frontier = s & (~s + 1);  // lowest bit
        std::uint64_t reach = frontier;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t m = frontier;
            while (m) {
                int p = std::countr_zero(m);
                m &= m - 1;
                next |= adj[p];
            }
            next &= allowed & ~reach;
            reach |= next;
            frontier = next;
        }
        return (s & ~reach) == 0;
    }

    // Exact colorability over the positions in `todo` with the given masks.
    bool colorable(std::vector<std::uint64_t> ls, std::uint64_t todo) const {
        if (!todo) return true;
        int best = -1, best_count = 65;
        std::uint64_t m = todo;
        while (m) {
            int p = std::countr_zero(m);
            m &= m - 1;
            int c = std::popcount(ls[p]);
            if (c < best_count) {
                best_count = c;
                best = p;
            }
        }
        if (best_count == 0) return false;
        std::uint64_t colors = ls[best];
        while (colors) {
            int c = std::countr_zero(colors);
            colors &= colors - 1;
            auto next = ls;
            std::uint64_t nb = adj[best] & todo;
            bool dead = false;
            std::uint64_t mm = nb;
            while (mm) {
                int q = std::countr_zero(mm);
                mm &= mm - 1;
                next[q] &= ~(1ULL << c);
                if (next[q] == 0 && (todo & (1ULL << q)) && q != best) dead = true;
            }
            if (!dead && colorable(next, todo & ~(1ULL << best))) return true;
        }
        return false;
    }

    bool prefix_colorable(int placed) const {
        std::uint64_t todo = (placed + 1 == 64) ? ~0ULL : ((1ULL << (placed + 1)) - 1);
        std::vector<std::uint64_t> ls(lists.begin(), lists.begin() + placed + 1);
        // mask adjacency down to the prefix in the recursive check via todo
        return colorable(ls, todo);
    }

    void record_counterexample(int placed) {
        counterexample.assign(n, 0);
        for (int p = 0; p <= placed; ++p) counterexample[p] = lists[p];
        int fresh = max_used + 1;
        for (int p = placed + 1; p < n; ++p) {
            std::uint64_t m = 0;
            for (int t = 0; t < fval[p]; ++t) m |= 1ULL << (fresh++);
            counterexample[p] = m;
        }
    }

    // Returns false when a counterexample was found (search stops).
    bool scan(int i) {
        if (i == n) return true;
        int f = fval[i];
        int old_max = max_used;
        std::uint64_t future = 0;
        for (int p = i + 1; p < n; ++p) future |= 1ULL << p;

        auto try_mask = [&](std::uint64_t mask) -> bool {
            lists[i] = mask;
            int prev_max = max_used;
            std::uint64_t mm = mask;
            while (mm) {
                int c = std::countr_zero(mm);
                mm &= mm - 1;
                support[c] |= 1ULL << i;
                max_used = std::max(max_used, c);
            }
            bool feasible = true;
            for (int c = 0; c <= max_used && feasible; ++c)
                if (support[c] && !support_reachable(support[c], support[c] | future))
                    feasible = false;
            bool keep_going = true;
            if (feasible) {
                if (!prefix_colorable(i)) {
                    record_counterexample(i);
                    keep_going = false;
                } else {
                    keep_going = scan(i + 1);
                }
            }
            mm = mask;
            while (mm) {
                int c = std::countr_zero(mm);
                mm &= mm - 1;
                support[c] &= ~(1ULL << i);
            }
            max_used = prev_max;
            lists[i] = 0;
            return keep_going;
        };

        for (int fresh = 0; fresh <= f; ++fresh) {
            if (old_max + fresh >= U) continue;  // universe exhausted
            int reuse = f - fresh;
            if (reuse > old_max + 1) continue;
            std::uint64_t fresh_mask = 0;
            for (int t = 1; t <= fresh; ++t) fresh_mask |= 1ULL << (old_max + t);
            if (reuse == 0) {
                if (!try_mask(fresh_mask)) return false;
                continue;
            }
            // Gosper's hack over subsets of the old colors of size `reuse`
            std::uint64_t x = (1ULL << reuse) - 1;
            std::uint64_t limit = 1ULL << (old_max + 1);
            while (x < limit) {
                if (!try_mask(x | fresh_mask)) return false;
                std::uint64_t u = x & (~x + 1);
                std::uint64_t v = x + u;
                x = v | (((x ^ v) / u) >> 2);
            }
        }
        return true;
    }
};

std::vector<int> bfs_order(const PlanarGraph& h, const std::vector<int>& comp) {
    std::vector<int> order;
    std::set<int> seen;
    std::queue<int> q;
    q.push(comp[0]);  // components() sorts, so this is the smallest id
    seen.insert(comp[0]);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        std::vector<int> nb = h.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (int w : nb)
            if (seen.insert(w).second) q.push(w);
    }
    return order;
}

ListAssignment zero_bound_witness(const PlanarGraph& h, const DegreeBound& f, int zero_vertex) {
    ListAssignment L;
    int fresh = 0;
    for (int v : h.vertices()) {
        if (v == zero_vertex) {
            L.set(v, {});
            continue;
        }
        std::vector<int> colors;
        for (int t = 0; t < f.at(v); ++t) colors.push_back(fresh++);
        L.set(v, colors);
    }
    return L;
}

}  // namespace

AssignmentCheck colorable_for_all_assignments(const PlanarGraph& h, const DegreeBound& f,
                                              int cap) {
    if (h.vertex_count() > cap)
        throw Error(ErrorCode::cap_exceeded,
                    "assignment enumeration over " + std::to_string(h.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(cap));
    for (int v : h.vertices())
        if (f.at(v) <= 0) return {false, zero_bound_witness(h, f, v)};

    // Both kernel rules depend only on list sizes, so running them on any
    // assignment with sizes f removes exactly the vertices that are greedily
    // completable in every assignment. The verdict transfers both ways: a
    // kernel counterexample extends by fresh disjoint colors (the same rules
    // strip the extension back off), and any exact-size assignment restricts.
    ListAssignment synthetic;
    {
        int fresh = 0;
        for (int v : h.vertices()) {
            std::vector<int> colors;
            for (int t = 0; t < f.at(v); ++t) colors.push_back(fresh++);
            synthetic.set(v, colors);
        }
    }
    PlanarGraph kernel = reduce_kernel(h, synthetic).kernel;

    ListAssignment partial_witness;
    int color_base = 0;
    bool failed = false;
    for (const auto& comp : kernel.components()) {
        if (failed) break;
        std::vector<int> order = bfs_order(kernel, comp);
        ComponentScan cs;
        cs.n = int(order.size());
        cs.ids = order;
        std::map<int, int> pos;
        for (int p = 0; p < cs.n; ++p) pos[order[p]] = p;
        cs.fval.resize(cs.n);
        cs.adj.assign(cs.n, 0);
        for (int p = 0; p < cs.n; ++p) {
            cs.fval[p] = f.at(order[p]);
            for (int w : kernel.neighbors(order[p]))
                cs.adj[p] |= 1ULL << pos.at(w);
            cs.U += cs.fval[p];
        }
        cs.lists.assign(cs.n, 0);
        cs.support.assign(cs.U, 0);
        if (!cs.scan(0)) {
            for (int p = 0; p < cs.n; ++p) {
                std::vector<int> colors;
                std::uint64_t m = cs.counterexample[p];
                while (m) {
                    int c = std::countr_zero(m);
                    m &= m - 1;
                    colors.push_back(color_base + c);
                }
                partial_witness.set(cs.ids[p], colors);
            }
            failed = true;
        }
        color_base += cs.U;
    }
    if (!failed) return {true, std::nullopt};
    // vertices outside the failing component, including kernel-removed ones,
    // get disjoint fresh colors
    for (int v : h.vertices()) {
        if (partial_witness.has(v)) continue;
        std::vector<int> colors;
        for (int t = 0; t < f.at(v); ++t) colors.push_back(color_base++);
        partial_witness.set(v, colors);
    }
    return {false, partial_witness};
}

ConditionResult check_fix(const PlanarGraph& g, const std::vector<int>& h_vertices, int k,
                          int cap) {
    PlanarGraph h = g.induced_subgraph(h_vertices);
    DegreeBound f0 = reducibility_bound(g, h, k);
    std::vector<int> vs = h.vertices();
    for (int v : vs) {
        auto res = colorable_for_all_assignments(h, f0.lowered_at(v), cap);
        if (!res.ok) return {false, ReducibilityWitness{"FIX", {v}, *res.witness}};
    }
    return {true, std::nullopt};
}

namespace {

void independent_sets_upto(const PlanarGraph& h, int d, int max_size,
                           const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> vs = h.vertices();
    std::vector<int> cur;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (stop) return;
        if (!visit(cur)) {
            stop = true;
            return;
        }
        if (int(cur.size()) == max_size) return;
        for (std::size_t i = from; i < vs.size() && !stop; ++i) {
            bool ok = true;
            for (int u : cur) {
                int dist = h.distance(u, vs[i]);
                if (dist != -1 && dist <= d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(vs[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

ConditionResult check_forb(const PlanarGraph& g, const std::vector<int>& h_vertices, int k,
                           int d, int cap) {
    PlanarGraph h = g.induced_subgraph(h_vertices);
    DegreeBound f0 = reducibility_bound(g, h, k);
    for (int v : h.vertices()) {
        if (f0.at(v) < 2) {
            auto res = colorable_for_all_assignments(h, f0.minus_one_on({v}), cap);
            return {false, ReducibilityWitness{"FORB", {v}, *res.witness}};
        }
    }
    ConditionResult out{true, std::nullopt};
    independent_sets_upto(h, d, k - 2, [&](const std::vector<int>& I) {
        auto res = colorable_for_all_assignments(h, f0.minus_one_on(I), cap);
        if (!res.ok) {
            out = {false, ReducibilityWitness{"FORB", I, *res.witness}};
            return false;
        }
        return true;
    });
    return out;
}

ReducibilityVerdict is_reducible(const PlanarGraph& g, const std::vector<int>& h_vertices,
                                 int d, int k, int cap) {
    auto fix = check_fix(g, h_vertices, k, cap);
    if (!fix.ok) return {false, fix.witness};
    auto forb = check_forb(g, h_vertices, k, d, cap);
    if (!forb.ok) return {false, forb.witness};
    return {true, std::nullopt};
}

}  // namespace flexcolor
