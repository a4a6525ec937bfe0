#include "flexcolor/configurations.hpp"

#include "flexcolor/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace flexcolor {

namespace {

// Dedup/canonicalization key; the labeled order of symmetric limbs (the two
// degree-3 tips of kinds d/f, the two middle vertices of kinds e/f) does not
// matter, so stalks compare by kind, root, bud and sorted vertex set.
std::tuple<int, int, int, std::vector<int>> stalk_key(const Stalk& s) {
    std::vector<int> vs = s.vertices;
    std::sort(vs.begin(), vs.end());
    return {int(s.kind), s.root, s.bud ? *s.bud : -1, std::move(vs)};
}

bool stalk_less(const Stalk& a, const Stalk& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return stalk_key(a) < stalk_key(b);
}

std::vector<int> sorted_neighbors(const PlanarGraph& g, int v) {
    std::vector<int> ns = g.neighbors(v);
    std::sort(ns.begin(), ns.end());
    return ns;
}

std::set<int> outer_cycle_set(const PlanarGraph& g, const char* who) {
    if (!g.outer_face())
        throw Error(ErrorCode::precondition_violated, std::string(who) + ": no outer face designated");
    const Face& f = g.outer();
    if (!f.is_cycle())
        throw Error(ErrorCode::precondition_violated, std::string(who) + ": outer face is not a cycle");
    return {f.walk.begin(), f.walk.end()};
}

void require_short_cycles_facial(const PlanarGraph& g, const char* who) {
    for (const auto& cyc : g.short_cycles())
        if (!g.cycle_bounds_face(cyc)) {
            std::ostringstream os;
            os << who << ": (<=5)-cycle without a face:";
            for (int v : cyc) os << ' ' << v;
            throw Error(ErrorCode::precondition_violated, os.str());
        }
}

// In a cycle walk, the neighbor of u other than `avoid`.
int cycle_other_neighbor(const std::vector<int>& walk, int u, int avoid) {
    int n = int(walk.size());
    for (int i = 0; i < n; ++i) {
        if (walk[i] != u) continue;
        int nxt = walk[(i + 1) % n];
        int prv = walk[(i + n - 1) % n];
        return nxt == avoid ? prv : nxt;
    }
    return -1;
}

} // namespace

char stalk_kind_letter(StalkKind k) {
    switch (k) {
    case StalkKind::a: return 'a';
    case StalkKind::b: return 'b';
    case StalkKind::c: return 'c';
    case StalkKind::d: return 'd';
    case StalkKind::e: return 'e';
    case StalkKind::f: return 'f';
    }
    return '?';
}

const char* config_kind_name(ConfigKind k) {
    switch (k) {
    case ConfigKind::small_deg2: return "small-deg2";
    case ConfigKind::small_33: return "small-33";
    case ConfigKind::mainredu: return "mainredu";
    case ConfigKind::fiveredu: return "fiveredu";
    case ConfigKind::spec4: return "spec4";
    }
    return "?";
}

bool Stalk::validate(const PlanarGraph& g) const {
    for (int u : vertices)
        if (!g.has_vertex(u)) return false;
    std::set<int> uniq(vertices.begin(), vertices.end());
    if (uniq.size() != vertices.size()) return false;
    if (vertices.empty() || vertices[0] != base) return false;
    if (vertices.size() < 2 || vertices[1] != root) return false;
    if (bud.has_value() != (kind == StalkKind::c)) return false;
    auto deg_is = [&](int i, int d) { return g.degree(vertices[i]) == d; };
    auto edge = [&](int i, int j) { return g.has_edge(vertices[i], vertices[j]); };
    switch (kind) {
    case StalkKind::a:
        return vertices.size() == 2 && edge(0, 1) && deg_is(1, 3);
    case StalkKind::b:
        return vertices.size() == 3 && edge(0, 1) && edge(1, 2) && deg_is(1, 4) && deg_is(2, 3);
    case StalkKind::c:
        return vertices.size() == 4 && *bud == vertices[3] && edge(0, 1) && edge(1, 2) &&
               edge(2, 3) && edge(3, 0) && deg_is(1, 4) && deg_is(2, 4) && deg_is(3, 3);
    case StalkKind::d:
        return vertices.size() == 5 && edge(0, 1) && edge(1, 2) && edge(2, 3) && edge(2, 4) &&
               deg_is(1, 4) && deg_is(2, 4) && deg_is(3, 3) && deg_is(4, 3);
    case StalkKind::e:
        return vertices.size() == 5 && edge(0, 1) && edge(1, 2) && edge(2, 3) && edge(1, 4) &&
               edge(4, 3) && deg_is(1, 4) && deg_is(2, 4) && deg_is(3, 3) && deg_is(4, 4);
    case StalkKind::f:
        return vertices.size() == 7 && edge(0, 1) && edge(1, 2) && edge(2, 3) && edge(3, 4) &&
               edge(1, 5) && edge(5, 3) && edge(3, 6) && deg_is(1, 4) && deg_is(2, 4) &&
               deg_is(3, 4) && deg_is(4, 3) && deg_is(5, 4) && deg_is(6, 3);
    }
    return false;
}

std::vector<int> ExtendedStalk::vertices() const {
    std::set<int> vs(stalk.vertices.begin(), stalk.vertices.end());
    vs.insert(extra.begin(), extra.end());
    return {vs.begin(), vs.end()};
}

std::vector<Stalk> find_stalks(const PlanarGraph& g, const std::vector<int>& c_vertices, int v) {
    std::vector<Stalk> out;
    if (!g.has_vertex(v)) return out;
    std::set<int> cset(c_vertices.begin(), c_vertices.end());
    if (cset.count(v)) return out; // every stalk contains v itself
    auto off = [&](int u) { return !cset.count(u); };
    auto deg = [&](int u) { return g.degree(u); };
    std::set<std::tuple<int, int, int, std::vector<int>>> seen;
    auto add = [&](Stalk s) {
        if (seen.insert(stalk_key(s)).second) out.push_back(std::move(s));
    };

    for (int v1 : g.neighbors(v)) {
        if (!off(v1)) continue;
        if (deg(v1) == 3) add({StalkKind::a, v, {v, v1}, v1, {}});
        if (deg(v1) != 4) continue;
        for (int v2 : g.neighbors(v1)) {
            if (v2 == v || !off(v2)) continue;
            if (deg(v2) == 3) add({StalkKind::b, v, {v, v1, v2}, v1, {}});
            if (deg(v2) != 4) continue;
            std::vector<int> threes; // degree-3 neighbors of v2 usable as tips
            for (int v3 : g.neighbors(v2)) {
                if (v3 == v || v3 == v1 || !off(v3)) continue;
                if (deg(v3) == 3) {
                    if (g.has_edge(v3, v)) add({StalkKind::c, v, {v, v1, v2, v3}, v1, v3});
                    threes.push_back(v3);
                    for (int u2 : g.neighbors(v1)) {
                        if (u2 == v || u2 == v2 || u2 == v3 || !off(u2)) continue;
                        if (deg(u2) == 4 && g.has_edge(u2, v3))
                            add({StalkKind::e, v, {v, v1, v2, v3, u2}, v1, {}});
                    }
                }
                if (deg(v3) == 4) {
                    std::vector<int> tails;
                    for (int w : g.neighbors(v3))
                        if (w != v && w != v1 && w != v2 && off(w) && deg(w) == 3)
                            tails.push_back(w);
                    std::sort(tails.begin(), tails.end());
                    if (tails.size() < 2) continue;
                    for (int u2 : g.neighbors(v1)) {
                        if (u2 == v || u2 == v2 || u2 == v3 || !off(u2)) continue;
                        if (deg(u2) != 4 || !g.has_edge(u2, v3)) continue;
                        for (size_t i = 0; i < tails.size(); ++i)
                            for (size_t j = i + 1; j < tails.size(); ++j)
                                add({StalkKind::f, v,
                                     {v, v1, v2, v3, tails[i], u2, tails[j]}, v1, {}});
                    }
                }
            }
            std::sort(threes.begin(), threes.end());
            for (size_t i = 0; i < threes.size(); ++i)
                for (size_t j = i + 1; j < threes.size(); ++j)
                    add({StalkKind::d, v, {v, v1, v2, threes[i], threes[j]}, v1, {}});
        }
    }
    return out;
}

std::vector<std::pair<int, Stalk>> good_neighbors(const PlanarGraph& g,
                                                  const std::vector<int>& c_vertices, int v) {
    std::map<int, Stalk> best;
    for (const Stalk& s : find_stalks(g, c_vertices, v)) {
        auto it = best.find(s.root);
        if (it == best.end() || stalk_less(s, it->second))
            best.insert_or_assign(s.root, s);
    }
    return {best.begin(), best.end()};
}

std::optional<ExtendedStalk> is_excellent(const PlanarGraph& g, const std::vector<int>& c_vertices,
                                          int v, int x) {
    if (!g.has_vertex(v) || !g.has_vertex(x) || !g.has_edge(v, x)) return {};
    std::set<int> cset(c_vertices.begin(), c_vertices.end());
    auto off = [&](int u) { return !cset.count(u); };
    auto deg = [&](int u) { return g.degree(u); };

    std::vector<ExtendedStalk> cands;
    for (const Stalk& s : find_stalks(g, c_vertices, v)) {
        if (s.root != x) continue;
        switch (s.kind) {
        case StalkKind::a:
        case StalkKind::d:
        case StalkKind::e:
        case StalkKind::f:
            cands.push_back({s, ExtensionKind::none, {}});
            break;
        case StalkKind::c:
            break;
        case StalkKind::b: {
            int v2 = s.vertices[2];
            for (int u2 : g.neighbors(x))
                if (u2 != v && u2 != v2 && off(u2) && deg(u2) == 3)
                    cands.push_back({s, ExtensionKind::pendant, {u2}});
            for (int w3 : g.neighbors(v2)) {
                if (w3 == v || w3 == x || !off(w3) || deg(w3) != 4) continue;
                for (int w2 : g.neighbors(w3))
                    if (w2 != v && w2 != v2 && w2 != x && off(w2) && deg(w2) == 4 &&
                        g.has_edge(w2, x))
                        cands.push_back({s, ExtensionKind::far_cycle, {w2, w3}});
            }
            for (int w2 : g.neighbors(x)) {
                if (w2 == v || w2 == v2 || !off(w2) || deg(w2) != 4) continue;
                for (int w3 : g.neighbors(w2))
                    if (w3 != v && w3 != x && w3 != v2 && off(w3) && deg(w3) == 3 &&
                        g.has_edge(w3, v))
                        cands.push_back({s, ExtensionKind::near_cycle, {w2, w3}});
            }
            break;
        }
        }
    }
    if (cands.empty()) return {};
    auto less = [](const ExtendedStalk& a, const ExtendedStalk& b) {
        auto ka = std::make_tuple(a.vertices().size(), int(a.stalk.kind), int(a.extension),
                                  a.vertices(), a.extra);
        auto kb = std::make_tuple(b.vertices().size(), int(b.stalk.kind), int(b.extension),
                                  b.vertices(), b.extra);
        return ka < kb;
    };
    return *std::min_element(cands.begin(), cands.end(), less);
}

std::optional<Configuration> find_small(const PlanarGraph& g) {
    for (int v : g.vertices())
        if (g.degree(v) <= 2)
            return Configuration{ConfigKind::small_deg2, {v}, {}, {}, 1, false};
    for (int v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        for (int u : sorted_neighbors(g, v))
            if (g.degree(u) == 3) {
                std::vector<int> pair = {v, u};
                std::sort(pair.begin(), pair.end());
                return Configuration{ConfigKind::small_33, pair, {}, {}, 2, false};
            }
    }
    return {};
}

std::optional<Configuration> find_mainredu(const PlanarGraph& g) {
    std::set<int> cset = outer_cycle_set(g, "find_mainredu");
    require_short_cycles_facial(g, "find_mainredu");
    std::vector<int> cvec(cset.begin(), cset.end());

    for (int v : g.vertices()) {
        if (cset.count(v)) continue;
        int d = g.degree(v);
        if (d < 3) continue;
        std::map<int, std::vector<Stalk>> by_root;
        for (const Stalk& s : find_stalks(g, cvec, v)) by_root[s.root].push_back(s);
        for (auto& [root, opts] : by_root) std::sort(opts.begin(), opts.end(), stalk_less);
        std::vector<int> roots;
        for (const auto& [root, opts] : by_root) roots.push_back(root);
        if (int(roots.size()) < d - 1) continue;

        // Pick d-1 roots and one witness stalk per root with pairwise-distinct
        // buds, minimizing the union of stalk vertices; first minimum found
        // wins, so enumeration order keeps the result deterministic.
        std::set<int> acc, buds;
        std::vector<Stalk> chosen;
        std::optional<std::pair<std::vector<int>, std::vector<Stalk>>> best;
        size_t best_size = size_t(-1);
        std::function<void(size_t, int)> dfs = [&](size_t idx, int picked) {
            if (best && acc.size() >= best_size) return;
            if (picked == d - 1) {
                best = {{acc.begin(), acc.end()}, chosen};
                best_size = acc.size();
                return;
            }
            if (roots.size() - idx < size_t(d - 1 - picked)) return;
            for (const Stalk& s : by_root[roots[idx]]) {
                if (s.bud && buds.count(*s.bud)) continue;
                std::vector<int> fresh;
                for (int u : s.vertices)
                    if (acc.insert(u).second) fresh.push_back(u);
                if (s.bud) buds.insert(*s.bud);
                chosen.push_back(s);
                dfs(idx + 1, picked + 1);
                chosen.pop_back();
                if (s.bud) buds.erase(*s.bud);
                for (int u : fresh) acc.erase(u);
            }
            dfs(idx + 1, picked);
        };
        dfs(0, 0);
        if (best && int(best_size) <= 31)
            return Configuration{ConfigKind::mainredu, best->first, best->second, {},
                                 6 * d - 5, false};
    }
    return {};
}

std::optional<Configuration> find_5redu(const PlanarGraph& g) {
    std::set<int> cset = outer_cycle_set(g, "find_5redu");
    require_short_cycles_facial(g, "find_5redu");
    std::vector<int> cvec(cset.begin(), cset.end());
    int outer_id = *g.outer_face();

    for (int v : g.vertices()) {
        if (cset.count(v) || g.degree(v) != 5) continue;
        for (const Face& f : g.faces()) {
            if (f.id == outer_id || f.length() != 4 || !f.is_cycle()) continue;
            const auto& w = f.walk;
            int pos = -1;
            for (int i = 0; i < 4; ++i)
                if (w[i] == v) pos = i;
            if (pos < 0) continue;
            int v1 = w[(pos + 1) % 4], v2 = w[(pos + 2) % 4], v3 = w[(pos + 3) % 4];
            if (cset.count(v1) || cset.count(v2) || cset.count(v3)) continue;
            if (g.degree(v1) != 3 || g.degree(v2) != 4 || g.degree(v3) != 3) continue;
            for (int x : sorted_neighbors(g, v)) {
                if (x == v1 || x == v3) continue;
                auto ext = is_excellent(g, cvec, v, x);
                if (!ext) continue;
                std::set<int> hv = {v, v1, v2, v3};
                for (int u : ext->vertices()) hv.insert(u);
                return Configuration{ConfigKind::fiveredu,
                                     {hv.begin(), hv.end()},
                                     {ext->stalk},
                                     {{v, v1, v2, v3}},
                                     10,
                                     false};
            }
        }
    }
    return {};
}

std::optional<Configuration> find_spec4(const PlanarGraph& g) {
    std::set<int> cset = outer_cycle_set(g, "find_spec4");
    require_short_cycles_facial(g, "find_spec4");
    int outer_id = *g.outer_face();
    auto off = [&](int u) { return !cset.count(u); };
    auto deg4 = [&](int u) { return g.degree(u) == 4; };

    std::vector<int> quads;
    for (const Face& f : g.faces())
        if (f.id != outer_id && f.length() == 4 && f.is_cycle()) quads.push_back(f.id);

    for (size_t i = 0; i < quads.size(); ++i) {
        for (size_t j = i + 1; j < quads.size(); ++j) {
            const auto& wa = g.face(quads[i]).walk;
            const auto& wb = g.face(quads[j]).walk;
            std::set<std::pair<int, int>> eb;
            for (int t = 0; t < 4; ++t) {
                int p = wb[t], q = wb[(t + 1) % 4];
                eb.insert({std::min(p, q), std::max(p, q)});
            }
            std::vector<std::pair<int, int>> shared;
            for (int t = 0; t < 4; ++t) {
                int p = wa[t], q = wa[(t + 1) % 4];
                auto e = std::make_pair(std::min(p, q), std::max(p, q));
                if (eb.count(e)) shared.push_back(e);
            }
            std::sort(shared.begin(), shared.end());
            for (auto [p, q] : shared) {
                for (auto [v1, v2] : {std::pair{p, q}, std::pair{q, p}}) {
                    for (bool first_special : {true, false}) {
                        const auto& ws = first_special ? wa : wb;
                        const auto& wo = first_special ? wb : wa;
                        int v3 = cycle_other_neighbor(ws, v2, v1);
                        int v4 = cycle_other_neighbor(ws, v1, v2);
                        int u3 = cycle_other_neighbor(wo, v2, v1);
                        int u4 = cycle_other_neighbor(wo, v1, v2);
                        std::set<int> six = {v1, v2, v3, v4, u3, u4};
                        if (six.size() != 6) continue;
                        bool ok = true;
                        for (int u : six)
                            if (!off(u)) ok = false;
                        if (!ok) continue;
                        if (!deg4(v1) || !deg4(v2) || !deg4(v4) || !deg4(u3) || !deg4(u4))
                            continue;
                        std::vector<int> z;
                        if (g.degree(v3) == 4) {
                            for (int u : sorted_neighbors(g, v3))
                                if (off(u) && g.degree(u) == 3) z.push_back(u);
                            if (z.size() < 2) continue;
                            z.resize(2);
                        } else if (g.degree(v3) != 3) {
                            continue;
                        }
                        std::set<int> hv = six;
                        hv.insert(z.begin(), z.end());
                        return Configuration{ConfigKind::spec4,
                                             {hv.begin(), hv.end()},
                                             {},
                                             {{v1, v2, v3, v4}, {v1, v2, u3, u4}},
                                             8,
                                             false};
                    }
                }
            }
        }
    }
    return {};
}

Configuration find_reducible(const PlanarGraph& g0) {
    if (g0.vertex_count() == 0)
        throw Error(ErrorCode::precondition_violated, "find_reducible: empty graph");
    if (!g0.is_triangle_free())
        throw Error(ErrorCode::not_triangle_free, "find_reducible: input contains a triangle");

    std::ostringstream trace;
    for (const auto& comp : g0.components()) {
        PlanarGraph sub = g0.induced_subgraph(comp);
        if (auto c = find_small(sub)) return *c;

        int face_id = -1;
        for (const Face& f : sub.faces())
            if (f.length() <= 5 && f.is_cycle()) {
                face_id = f.id;
                break;
            }
        if (face_id < 0)
            throw Error(ErrorCode::face_bound_violation,
                        "find_reducible: component has no face bounded by a (<=5)-cycle");
        PlanarGraph rooted = sub.with_outer_face(face_id);
        DiskCycle dc = rooted.find_minimal_nonface_cycle();
        PlanarGraph disk = rooted.subgraph_in_disk(dc);
        if (auto c = find_mainredu(disk)) return *c;
        if (auto c = find_5redu(disk)) return *c;
        if (auto c = find_spec4(disk)) return *c;

        trace << "component min id " << comp.front() << " (" << comp.size() << " vertices): ";
        trace << "disk cycle";
        for (int u : dc.cycle) trace << ' ' << u;
        trace << " with " << disk.vertex_count() << " vertices / " << disk.faces().size()
              << " faces; mainredu, fiveredu, spec4 all empty. ";
        trace << "disk adjacency:";
        for (int u : disk.vertices()) {
            trace << ' ' << u << ':';
            bool first = true;
            for (int w : disk.neighbors(u)) {
                trace << (first ? "" : ",") << w;
                first = false;
            }
        }
        trace << ". ";
    }
    throw Error(ErrorCode::theorem_violation,
                "find_reducible: no configuration in any component; " + trace.str());
}

} // namespace flexcolor
