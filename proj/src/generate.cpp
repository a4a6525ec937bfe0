#include "flexcolor/generate.hpp"

#include "flexcolor/errors.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace flexcolor {

namespace {

std::vector<std::vector<int>> seed_rotation(std::mt19937_64& rng, int n) {
    // C4, or one of the double wheels (two hubs joined to alternating
    // vertices of a 2k-ring) when the target size allows it.
    int pick = n >= 12 ? int(rng() % 4) : (n >= 8 ? int(rng() % 2) : 0);
    if (pick == 0) return {{1, 3}, {0, 2}, {1, 3}, {0, 2}};
    int k = pick + 2;
    auto u = [&](int i) { return 2 + ((i % (2 * k)) + 2 * k) % (2 * k); };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < k; ++i) {
        faces.push_back({0, u(2 * i), u(2 * i + 1), u(2 * i + 2)});
        faces.push_back({1, u(2 * i + 3), u(2 * i + 2), u(2 * i + 1)});
    }
    PlanarGraph g = PlanarGraph::build_from_faces(2 + 2 * k, faces);
    std::vector<std::vector<int>> rot(2 + 2 * k);
    for (int v : g.vertices()) rot[v] = g.neighbors(v);
    return rot;
}

void insert_before(std::vector<int>& r, int at, int x) {
    auto it = std::find(r.begin(), r.end(), at);
    r.insert(it, x);
}

void insert_after(std::vector<int>& r, int at, int x) {
    auto it = std::find(r.begin(), r.end(), at);
    r.insert(it + 1, x);
}

// Add one vertex across a face: pick a subwalk p-q-r of a face of g and join
// a fresh vertex to p and r inside that face. Keeps every face a 4-walk when
// g is a quadrangulation and never creates a triangle.
void grow_step(std::vector<std::vector<int>>& rot, const PlanarGraph& g, std::mt19937_64& rng) {
    const auto& fs = g.faces();
    for (int tries = 0; tries < 1000; ++tries) {
        const auto& w = fs[rng() % fs.size()].walk;
        int k = int(w.size());
        int i = int(rng() % k);
        int p = w[i], q = w[(i + 1) % k], r = w[(i + 2) % k];
        if (p == r || g.has_edge(p, r)) continue;
        int x = int(rot.size());
        insert_before(rot[p], q, x);
        insert_after(rot[r], q, x);
        rot.push_back({r, p});
        return;
    }
    throw Error(ErrorCode::precondition_violated, "generator found no insertable face subwalk");
}

void subdivide_step(std::vector<std::vector<int>>& rot, const PlanarGraph& g, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v : g.vertices())
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    auto [u, v] = edges[rng() % edges.size()];
    int x = int(rot.size());
    *std::find(rot[u].begin(), rot[u].end(), v) = x;
    *std::find(rot[v].begin(), rot[v].end(), u) = x;
    rot.push_back({u, v});
}

} // namespace

PlanarGraph gen_quadrangulation(int n, std::uint64_t seed) {
    if (n < 4) throw Error(ErrorCode::precondition_violated, "need at least 4 vertices");
    std::mt19937_64 rng(seed);
    auto rot = seed_rotation(rng, n);
    PlanarGraph g = PlanarGraph::build_from_rotation(rot);
    while (g.vertex_count() < n) {
        grow_step(rot, g, rng);
        g = PlanarGraph::build_from_rotation(rot);
    }
    return g;
}

PlanarGraph gen_triangle_free(int n, std::uint64_t seed, int subdivisions) {
    if (subdivisions < 0 || n - subdivisions < 4)
        throw Error(ErrorCode::precondition_violated, "bad generator size split");
    std::mt19937_64 rng(seed);
    auto rot = seed_rotation(rng, n - subdivisions);
    PlanarGraph g = PlanarGraph::build_from_rotation(rot);
    while (g.vertex_count() < n - subdivisions) {
        grow_step(rot, g, rng);
        g = PlanarGraph::build_from_rotation(rot);
    }
    for (int s = 0; s < subdivisions; ++s) {
        subdivide_step(rot, g, rng);
        g = PlanarGraph::build_from_rotation(rot);
    }
    return g;
}

} // namespace flexcolor
