#include "flexcolor/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "flexcolor/errors.hpp"

namespace flexcolor {

bool Face::is_cycle() const {
    std::set<int> seen(walk.begin(), walk.end());
    return walk.size() >= 3 && seen.size() == walk.size();
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    std::vector<int> best;
    int k = int(cycle.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> c = cycle;
        if (dir) std::reverse(c.begin(), c.end());
        for (int s = 0; s < k; ++s) {
            std::vector<int> rot(k);
            for (int i = 0; i < k; ++i) rot[i] = c[(s + i) % k];
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

PlanarGraph PlanarGraph::build_from_rotation(const std::vector<std::vector<int>>& rotation) {
    PlanarGraph g;
    int cap = int(rotation.size());
    g.rot_ = rotation;
    g.present_.assign(cap, 1);
    for (int v = 0; v < cap; ++v) {
        std::set<int> seen;
        for (int w : rotation[v]) {
            if (w < 0 || w >= cap)
                throw Error(ErrorCode::parse_error,
                            "vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(w));
            if (w == v)
                throw Error(ErrorCode::parse_error, "self-loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw Error(ErrorCode::duplicate_neighbor,
                            "vertex " + std::to_string(v) + " lists " + std::to_string(w) + " twice");
        }
    }
    for (int v = 0; v < cap; ++v)
        for (int w : rotation[v]) {
            const auto& back = rotation[w];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error(ErrorCode::asymmetric_rotation,
                            "edge " + std::to_string(v) + "-" + std::to_string(w) + " missing reverse entry");
        }
    g.n_ = cap;
    g.verts_.resize(cap);
    std::iota(g.verts_.begin(), g.verts_.end(), 0);
    int deg_sum = 0;
    for (int v = 0; v < cap; ++v) deg_sum += int(rotation[v].size());
    g.m_ = deg_sum / 2;
    g.trace_faces();
    g.validate_euler();
    return g;
}

PlanarGraph PlanarGraph::build_from_faces(int n, const std::vector<std::vector<int>>& walks) {
    // succ[v][u] = w for each angle u,v,w gives v's rotation as one cycle.
    std::vector<std::map<int, int>> succ(n);
    for (const auto& w : walks) {
        int k = int(w.size());
        for (int i = 0; i < k; ++i) {
            int a = w[i], b = w[(i + 1) % k], c = w[(i + 2) % k];
            if (b < 0 || b >= n) throw Error(ErrorCode::parse_error, "face walk vertex out of range");
            if (succ[b].count(a))
                throw Error(ErrorCode::parse_error,
                            "directed edge " + std::to_string(a) + "->" + std::to_string(b) + " reused");
            succ[b][a] = c;
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw Error(ErrorCode::parse_error, "face walks do not close around vertex " + std::to_string(v));
            cur = it->second;
        } while (cur != start && int(rot[v].size()) <= int(succ[v].size()));
        if (cur != start || rot[v].size() != succ[v].size())
            throw Error(ErrorCode::parse_error, "face walks not a single cycle at vertex " + std::to_string(v));
    }
    PlanarGraph g = build_from_rotation(rot);
    if (int(g.faces_.size()) != int(walks.size()))
        throw Error(ErrorCode::parse_error, "face walks inconsistent with traced embedding");
    return g;
}

const std::vector<int>& PlanarGraph::neighbors(int v) const {
    if (!has_vertex(v)) throw Error(ErrorCode::precondition_violated, "no vertex " + std::to_string(v));
    return rot_[v];
}

bool PlanarGraph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

int PlanarGraph::rot_pos(int v, int nbr) const {
    const auto& r = rot_[v];
    for (int i = 0; i < int(r.size()); ++i)
        if (r[i] == nbr) return i;
    throw Error(ErrorCode::precondition_violated,
                "no edge " + std::to_string(v) + "-" + std::to_string(nbr));
}

void PlanarGraph::trace_faces() {
    faces_.clear();
    face_dir_.assign(rot_.size(), {});
    for (int v : verts_) face_dir_[v].assign(rot_[v].size(), -1);
    for (int u : verts_) {
        for (int i = 0; i < int(rot_[u].size()); ++i) {
            if (face_dir_[u][i] != -1) continue;
            Face f;
            f.id = int(faces_.size());
            int a = u, pos = i;
            do {
                face_dir_[a][pos] = f.id;
                int b = rot_[a][pos];
                f.walk.push_back(a);
                int back = rot_pos(b, a);
                pos = (back + 1) % int(rot_[b].size());
                a = b;
            } while (!(a == u && pos == i));
            faces_.push_back(std::move(f));
        }
    }
}

void PlanarGraph::validate_euler() const {
    for (const auto& comp : components()) {
        if (comp.size() == 1 && rot_[comp[0]].empty()) continue;
        int e = 0;
        std::set<int> fs;
        for (int v : comp) {
            e += int(rot_[v].size());
            for (int fid : face_dir_[v]) fs.insert(fid);
        }
        e /= 2;
        if (int(comp.size()) - e + int(fs.size()) != 2)
            throw Error(ErrorCode::precondition_violated,
                        "rotation system is not a plane embedding (Euler check failed)");
    }
}

int PlanarGraph::face_of(int u, int v) const {
    return face_dir_[u][rot_pos(u, v)];
}

const Face& PlanarGraph::outer() const {
    if (!outer_) throw Error(ErrorCode::precondition_violated, "no outer face designated");
    return faces_[*outer_];
}

PlanarGraph PlanarGraph::with_outer_face(int face_id) const {
    if (face_id < 0 || face_id >= int(faces_.size()))
        throw Error(ErrorCode::precondition_violated, "no face " + std::to_string(face_id));
    PlanarGraph g = *this;
    g.outer_ = face_id;
    return g;
}

std::optional<int> PlanarGraph::find_face_of_cycle(const std::vector<int>& cycle) const {
    std::vector<int> want = canonical_cycle(cycle);
    for (const auto& f : faces_) {
        if (f.length() != int(cycle.size()) || !f.is_cycle()) continue;
        if (canonical_cycle(f.walk) == want) return f.id;
    }
    return std::nullopt;
}

bool PlanarGraph::is_triangle_free() const {
    for (int u : verts_)
        for (int v : rot_[u]) {
            if (v < u) continue;
            for (int w : rot_[v])
                if (w != u && has_edge(w, u)) return false;
        }
    return true;
}

std::vector<std::vector<int>> PlanarGraph::components() const {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (int s : verts_) {
        if (seen.count(s)) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : rot_[v])
                if (seen.insert(w).second) q.push(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool PlanarGraph::is_connected() const { return components().size() <= 1; }

int PlanarGraph::distance(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v))
        throw Error(ErrorCode::precondition_violated, "distance on absent vertex");
    if (u == v) return 0;
    std::map<int, int> dist{{u, 0}};
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : rot_[x]) {
            if (dist.count(w)) continue;
            dist[w] = dist[x] + 1;
            if (w == v) return dist[w];
            q.push(w);
        }
    }
    return -1;
}

bool PlanarGraph::is_d_independent(const std::vector<int>& set, int d) const {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j) {
            int dd = distance(set[i], set[j]);
            if (dd != -1 && dd <= d) return false;
        }
    return true;
}

PlanarGraph PlanarGraph::induced_subgraph(const std::vector<int>& keep) const {
    std::set<int> ks(keep.begin(), keep.end());
    for (int v : keep)
        if (!has_vertex(v))
            throw Error(ErrorCode::precondition_violated, "induced subgraph on absent vertex");
    PlanarGraph g;
    g.rot_.assign(rot_.size(), {});
    g.present_.assign(rot_.size(), 0);
    int deg_sum = 0;
    for (int v : verts_) {
        if (!ks.count(v)) continue;
        g.present_[v] = 1;
        g.verts_.push_back(v);
        for (int w : rot_[v])
            if (ks.count(w)) g.rot_[v].push_back(w);
        deg_sum += int(g.rot_[v].size());
    }
    g.n_ = int(g.verts_.size());
    g.m_ = deg_sum / 2;
    g.trace_faces();
    g.validate_euler();
    return g;
}

std::vector<std::vector<int>> PlanarGraph::short_cycles() const {
    std::set<std::vector<int>> out;
    // Paths from a, with a the smallest vertex on the cycle.
    std::vector<int> path;
    auto dfs = [&](auto&& self, int a, int v) -> void {
        for (int w : rot_[v]) {
            if (w == a && path.size() >= 3) {
                if (path[1] < path.back()) out.insert(canonical_cycle(path));
                continue;
            }
            if (w <= a || path.size() >= 5) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            self(self, a, w);
            path.pop_back();
        }
    };
    for (int a : verts_) {
        path = {a};
        dfs(dfs, a, a);
    }
    return std::vector<std::vector<int>>(out.begin(), out.end());
}

bool PlanarGraph::cycle_bounds_face(const std::vector<int>& cycle) const {
    return find_face_of_cycle(cycle).has_value();
}

DiskCycle PlanarGraph::disk_of_cycle(const std::vector<int>& cycle) const {
    if (!outer_) throw Error(ErrorCode::precondition_violated, "disk_of_cycle needs an outer face");
    int k = int(cycle.size());
    std::set<std::pair<int, int>> ce;
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (!has_edge(a, b))
            throw Error(ErrorCode::precondition_violated, "disk_of_cycle on a non-cycle");
        ce.insert({std::min(a, b), std::max(a, b)});
    }
    // Union faces across every edge not on the cycle; a simple cycle leaves
    // exactly two sides.
    std::vector<int> parent(faces_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u : verts_)
        for (int v : rot_[u]) {
            if (v < u || ce.count({u, v})) continue;
            int a = find(face_of(u, v)), b = find(face_of(v, u));
            if (a != b) parent[a] = b;
        }
    int outside = find(*outer_);
    std::set<int> sides;
    for (const auto& f : faces_) sides.insert(find(f.id));
    if (sides.size() != 2)
        throw Error(ErrorCode::precondition_violated, "cycle does not split the plane in two");
    DiskCycle d;
    d.cycle = cycle;
    std::set<int> inner_verts;
    for (const auto& f : faces_)
        if (find(f.id) != outside) {
            d.interior_faces.push_back(f.id);
            inner_verts.insert(f.walk.begin(), f.walk.end());
        }
    for (int v : cycle) inner_verts.erase(v);
    d.interior_vertices.assign(inner_verts.begin(), inner_verts.end());
    return d;
}

DiskCycle PlanarGraph::find_minimal_nonface_cycle() const {
    if (!outer_) throw Error(ErrorCode::precondition_violated, "no outer face designated");
    if (!is_connected()) throw Error(ErrorCode::disconnected, "disk search needs a connected graph");
    for (int v : verts_)
        if (degree(v) < 3)
            throw Error(ErrorCode::precondition_violated,
                        "vertex " + std::to_string(v) + " has degree below 3");
    const Face& of = outer();
    if (of.length() > 5 || !of.is_cycle())
        throw Error(ErrorCode::precondition_violated, "outer face is not a (<=5)-cycle");

    std::optional<DiskCycle> best;
    for (const auto& c : short_cycles()) {
        if (cycle_bounds_face(c)) {
            // The outer cycle bounds the outer face yet its disk is the whole
            // interior; it stays a candidate.
            if (canonical_cycle(c) != canonical_cycle(of.walk)) continue;
        }
        DiskCycle d = disk_of_cycle(c);
        if (d.interior_faces.size() == 1) continue;
        if (!best || d.interior_faces.size() < best->interior_faces.size() ||
            (d.interior_faces.size() == best->interior_faces.size() &&
             canonical_cycle(c) < canonical_cycle(best->cycle)))
            best = d;
    }
    if (!best)
        throw Error(ErrorCode::precondition_violated, "graph has no (<=5)-cycle with a non-trivial disk");
    best->cycle = canonical_cycle(best->cycle);
    return *best;
}

PlanarGraph PlanarGraph::subgraph_in_disk(const DiskCycle& c) const {
    std::vector<int> keep = c.cycle;
    keep.insert(keep.end(), c.interior_vertices.begin(), c.interior_vertices.end());
    PlanarGraph g = induced_subgraph(keep);
    auto fid = g.find_face_of_cycle(c.cycle);
    if (!fid)
        throw Error(ErrorCode::precondition_violated, "disk boundary does not bound a face of the disk graph");
    if (int(g.faces().size()) != int(c.interior_faces.size()) + 1)
        throw Error(ErrorCode::precondition_violated, "disk subgraph lost faces");
    return g.with_outer_face(*fid);
}

} // namespace flexcolor
