#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "flexcolor/planar_graph.hpp"

namespace fx {

using flexcolor::PlanarGraph;

// Cycle 0-1-...-k-1.
inline PlanarGraph cycle_graph(int k) {
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
    return PlanarGraph::build_from_rotation(rot);
}

// Path 0-1-...-k-1.
inline PlanarGraph path_graph(int k) {
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i < k; ++i) {
        if (i > 0) rot[i].push_back(i - 1);
        if (i + 1 < k) rot[i].push_back(i + 1);
    }
    return PlanarGraph::build_from_rotation(rot);
}

// Star with center 0 and k leaves.
inline PlanarGraph star_graph(int k) {
    std::vector<std::vector<int>> rot(k + 1);
    for (int i = 1; i <= k; ++i) {
        rot[0].push_back(i);
        rot[i].push_back(0);
    }
    return PlanarGraph::build_from_rotation(rot);
}

// 3x3 grid, vertex (r,c) -> 3r+c, neighbors clockwise (up, right, down, left).
inline PlanarGraph grid3() {
    std::vector<std::vector<int>> rot(9);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int i = 3 * r + c;
            if (r > 0) rot[i].push_back(i - 3);
            if (c < 2) rot[i].push_back(i + 1);
            if (r < 2) rot[i].push_back(i + 3);
            if (c > 0) rot[i].push_back(i - 1);
        }
    return PlanarGraph::build_from_rotation(rot);
}

// Quadrangulation on two hubs and a 2k-ring: hub 0 joined to even ring
// vertices, hub 1 to odd ones. k=3 gives the cube.
inline PlanarGraph double_wheel(int k) {
    auto u = [&](int i) { return 2 + ((i % (2 * k)) + 2 * k) % (2 * k); };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < k; ++i) {
        faces.push_back({0, u(2 * i), u(2 * i + 1), u(2 * i + 2)});
        faces.push_back({1, u(2 * i + 3), u(2 * i + 2), u(2 * i + 1)});
    }
    return PlanarGraph::build_from_faces(2 + 2 * k, faces);
}

inline PlanarGraph cube() { return double_wheel(3); }

// Three nested squares x=0..3, y=4..7, z=8..11, consecutive rings joined by
// spokes; outer face is the x ring. The y ring is a non-facial 4-cycle.
inline PlanarGraph triple_ring() {
    auto x = [](int i) { return i % 4; };
    auto y = [](int i) { return 4 + i % 4; };
    auto z = [](int i) { return 8 + i % 4; };
    std::vector<std::vector<int>> faces;
    faces.push_back({x(0), x(1), x(2), x(3)});
    for (int i = 0; i < 4; ++i) faces.push_back({x(i), y(i), y(i + 1), x(i + 1)});
    for (int i = 0; i < 4; ++i) faces.push_back({y(i), z(i), z(i + 1), y(i + 1)});
    faces.push_back({z(3), z(2), z(1), z(0)});
    auto g = PlanarGraph::build_from_faces(12, faces);
    return g.with_outer_face(*g.find_face_of_cycle({0, 1, 2, 3}));
}

// Triangular prism: triangles 0-1-2 and 3-4-5, spokes i-(i+3).
inline PlanarGraph prism() {
    return PlanarGraph::build_from_rotation({
        {1, 3, 2}, {0, 2, 4}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}});
}

// Two squares 0-1-2-3 and 1-4-5-2 sharing the edge 1-2.
inline PlanarGraph two_squares() {
    return PlanarGraph::build_from_faces(
        6, {{0, 1, 2, 3}, {1, 4, 5, 2}, {0, 3, 2, 5, 4, 1}});
}

// Surface grid of an a x b x c box: the unit squares of the boundary of an
// a x b x c brick of unit cubes, embedded on the sphere. Corners have degree
// 3, everything else degree 4, every face is a quad. Degree-3 vertices are
// pairwise non-adjacent as long as all of a, b, c are at least 2.
inline PlanarGraph boxgrid(int a, int b, int c) {
    int dims[3] = {a, b, c};
    std::map<std::array<int, 3>, int> id;
    int next = 0;
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= b; ++y)
            for (int z = 0; z <= c; ++z)
                if (x == 0 || x == a || y == 0 || y == b || z == 0 || z == c)
                    id[{x, y, z}] = next++;
    std::vector<std::vector<int>> faces;
    for (int d = 0; d < 3; ++d)
        for (int side = 0; side < 2; ++side) {
            int e1 = (d + 1) % 3, e2 = (d + 2) % 3;
            for (int i = 0; i < dims[e1]; ++i)
                for (int j = 0; j < dims[e2]; ++j) {
                    auto pt = [&](int ii, int jj) {
                        std::array<int, 3> p;
                        p[d] = side ? dims[d] : 0;
                        p[e1] = ii;
                        p[e2] = jj;
                        return id.at(p);
                    };
                    if (side)
                        faces.push_back({pt(i, j), pt(i + 1, j), pt(i + 1, j + 1), pt(i, j + 1)});
                    else
                        faces.push_back({pt(i, j), pt(i, j + 1), pt(i + 1, j + 1), pt(i + 1, j)});
                }
        }
    return PlanarGraph::build_from_faces(next, faces);
}

// The next fixtures share one plan: a small interior structure with exact
// degrees, padded up by edges to a surrounding boundary ring which becomes
// the outer face. Consecutive ring vertices never see the same interior
// vertex twice without a spacer between them, so the graphs stay
// triangle-free.

// Degree-3 vertex 0 whose neighbors 1 and 2 root the largest stalk shape:
// paths 0-1-3-5 and 1-4-5 plus tips 6, 7 on vertex 5 (mirrored on the right
// with 2, 8, 9, 10, 11, 12). Both stalks have 7 vertices, so the reduced
// subgraph has 13.
inline PlanarGraph mainredu_f_gadget() {
    std::vector<std::vector<int>> rot(40);
    rot[0] = {20, 2, 1};
    rot[1] = {19, 0, 4, 3};
    rot[2] = {21, 8, 9, 0};
    rot[3] = {16, 18, 1, 5};
    rot[4] = {1, 34, 36, 5};
    rot[5] = {3, 4, 7, 6};
    rot[6] = {13, 15, 5};
    rot[7] = {5, 37, 39};
    rot[8] = {22, 24, 10, 2};
    rot[9] = {10, 31, 33, 2};
    rot[10] = {11, 12, 9, 8};
    rot[11] = {25, 27, 10};
    rot[12] = {28, 30, 10};
    // Ring 13..39; pads target the interior vertex listed per slot, -1 = spacer.
    int pad[27] = {6, -1, 6, 3, -1, 3,  1, 0,  2, 8, -1, 8,  11, -1,
                   11, 12, -1, 12, 9, -1, 9, 4, -1, 4, 7, -1, 7};
    for (int i = 0; i < 27; ++i) {
        int r = 13 + i;
        int succ = 13 + (i + 1) % 27;
        int pred = 13 + (i + 26) % 27;
        if (pad[i] >= 0)
            rot[r] = {succ, pad[i], pred};
        else
            rot[r] = {succ, pred};
    }
    auto g = PlanarGraph::build_from_rotation(rot);
    std::vector<int> ring(27);
    for (int i = 0; i < 27; ++i) ring[i] = 13 + i;
    return g.with_outer_face(*g.find_face_of_cycle(ring));
}

// Degree-5 vertex 0 on a quad face 0-1-2-3 with degrees 3, 4, 3, plus a
// degree-3 neighbor 4 of vertex 0 off the face. With `with_helper` the
// neighbor makes the face reducible; without it vertex 4 gets a fourth
// boundary edge and nothing qualifies.
inline PlanarGraph fiveredu_gadget(bool with_helper = true) {
    if (with_helper) {
        std::vector<std::vector<int>> rot(15);
        rot[0] = {5, 4, 9, 3, 1};
        rot[1] = {14, 0, 2};
        rot[2] = {1, 3, 11, 13};
        rot[3] = {0, 10, 2};
        rot[4] = {6, 8, 0};
        rot[5] = {6, 0, 14};
        rot[6] = {7, 4, 5};
        rot[7] = {8, 6};
        rot[8] = {9, 4, 7};
        rot[9] = {10, 0, 8};
        rot[10] = {11, 3, 9};
        rot[11] = {12, 2, 10};
        rot[12] = {13, 11};
        rot[13] = {14, 2, 12};
        rot[14] = {5, 1, 13};
        auto g = PlanarGraph::build_from_rotation(rot);
        return g.with_outer_face(*g.find_face_of_cycle({5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
    }
    std::vector<std::vector<int>> rot(17);
    rot[0] = {5, 4, 11, 3, 1};
    rot[1] = {16, 0, 2};
    rot[2] = {1, 3, 13, 15};
    rot[3] = {0, 12, 2};
    rot[4] = {6, 8, 10, 0};
    rot[5] = {6, 0, 16};
    rot[6] = {7, 4, 5};
    rot[7] = {8, 6};
    rot[8] = {9, 4, 7};
    rot[9] = {10, 8};
    rot[10] = {11, 4, 9};
    rot[11] = {12, 0, 10};
    rot[12] = {13, 3, 11};
    rot[13] = {14, 2, 12};
    rot[14] = {15, 13};
    rot[15] = {16, 2, 14};
    rot[16] = {5, 1, 15};
    auto g = PlanarGraph::build_from_rotation(rot);
    return g.with_outer_face(*g.find_face_of_cycle({5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}));
}

// Like fiveredu_gadget but the fourth neighbor of vertex 2 is an interior
// degree-4 vertex 5 instead of a second ring carrier, so 2 keeps only one
// degree-3 neighbor besides the quad.
inline PlanarGraph very_light_gadget() {
    std::vector<std::vector<int>> rot(19);
    rot[0] = {6, 4, 10, 3, 1};
    rot[1] = {18, 0, 2};
    rot[2] = {1, 3, 12, 5};
    rot[3] = {0, 11, 2};
    rot[4] = {7, 9, 0};
    rot[5] = {13, 15, 17, 2};
    int pad[13] = {0, 4, -1, 4, 0, 3, 2, 5, -1, 5, -1, 5, 1};
    for (int i = 0; i < 13; ++i) {
        int r = 6 + i;
        int succ = 6 + (i + 1) % 13;
        int pred = 6 + (i + 12) % 13;
        if (pad[i] >= 0)
            rot[r] = {succ, pad[i], pred};
        else
            rot[r] = {succ, pred};
    }
    auto g = PlanarGraph::build_from_rotation(rot);
    std::vector<int> ring(13);
    for (int i = 0; i < 13; ++i) ring[i] = 6 + i;
    return g.with_outer_face(*g.find_face_of_cycle(ring));
}

// Two quad faces 0-1-2-3 and 0-1-4-5 sharing the edge 0-1. All of 0, 1, 3,
// 4, 5 have degree 4. Without `deep` vertex 2 has degree 3; with it vertex 2
// has degree 4 and two degree-3 neighbors 6, 7 hanging off it.
inline PlanarGraph spec4_gadget(bool deep = false) {
    if (!deep) {
        std::vector<std::vector<int>> rot(18);
        rot[0] = {1, 3, 11, 5};
        rot[1] = {6, 2, 0, 4};
        rot[2] = {7, 3, 1};
        rot[3] = {2, 8, 10, 0};
        rot[4] = {17, 1, 5, 15};
        rot[5] = {4, 0, 12, 14};
        int pad[12] = {1, 2, 3, -1, 3, 0, 5, -1, 5, 4, -1, 4};
        for (int i = 0; i < 12; ++i) {
            int r = 6 + i;
            int succ = 6 + (i + 1) % 12;
            int pred = 6 + (i + 11) % 12;
            if (pad[i] >= 0)
                rot[r] = {succ, pad[i], pred};
            else
                rot[r] = {succ, pred};
        }
        auto g = PlanarGraph::build_from_rotation(rot);
        std::vector<int> ring(12);
        for (int i = 0; i < 12; ++i) ring[i] = 6 + i;
        return g.with_outer_face(*g.find_face_of_cycle(ring));
    }
    std::vector<std::vector<int>> rot(25);
    rot[0] = {1, 3, 18, 5};
    rot[1] = {8, 2, 0, 4};
    rot[2] = {6, 7, 3, 1};
    rot[3] = {2, 15, 17, 0};
    rot[4] = {24, 1, 5, 22};
    rot[5] = {4, 0, 19, 21};
    rot[6] = {9, 11, 2};
    rot[7] = {12, 14, 2};
    int pad[17] = {1, 6, -1, 6, 7, -1, 7, 3, -1, 3, 0, 5, -1, 5, 4, -1, 4};
    for (int i = 0; i < 17; ++i) {
        int r = 8 + i;
        int succ = 8 + (i + 1) % 17;
        int pred = 8 + (i + 16) % 17;
        if (pad[i] >= 0)
            rot[r] = {succ, pad[i], pred};
        else
            rot[r] = {succ, pred};
    }
    auto g = PlanarGraph::build_from_rotation(rot);
    std::vector<int> ring(17);
    for (int i = 0; i < 17; ++i) ring[i] = 8 + i;
    return g.with_outer_face(*g.find_face_of_cycle(ring));
}

// Central vertex 0 adjacent to 1, 2, 3 where 1 and 2 root only the cycle
// stalks 0-1-4-3 and 0-2-5-3, both closing through vertex 3. With
// `center_deg4` vertex 0 gets a fourth edge to the ring and needs three
// disjoint-tip stalks, which the shared vertex 3 makes impossible.
inline PlanarGraph same_bud_gadget(bool center_deg4) {
    if (center_deg4) {
        std::vector<std::vector<int>> rot(19);
        rot[0] = {6, 2, 3, 1};
        rot[1] = {0, 4, 16, 18};
        rot[2] = {7, 9, 5, 0};
        rot[3] = {0, 5, 4};
        rot[4] = {1, 3, 13, 15};
        rot[5] = {2, 10, 12, 3};
        int pad[13] = {0, 2, -1, 2, 5, -1, 5, 4, -1, 4, 1, -1, 1};
        for (int i = 0; i < 13; ++i) {
            int r = 6 + i;
            rot[r].push_back(6 + (i + 1) % 13);
            if (pad[i] >= 0) rot[r].push_back(pad[i]);
            rot[r].push_back(6 + (i + 12) % 13);
        }
        auto g = PlanarGraph::build_from_rotation(rot);
        std::vector<int> ring(13);
        for (int i = 0; i < 13; ++i) ring[i] = 6 + i;
        return g.with_outer_face(*g.find_face_of_cycle(ring));
    }
    std::vector<std::vector<int>> rot(18);
    rot[0] = {2, 3, 1};
    rot[1] = {0, 4, 15, 17};
    rot[2] = {6, 8, 5, 0};
    rot[3] = {0, 5, 4};
    rot[4] = {1, 3, 12, 14};
    rot[5] = {2, 9, 11, 3};
    int pad[12] = {2, -1, 2, 5, -1, 5, 4, -1, 4, 1, -1, 1};
    for (int i = 0; i < 12; ++i) {
        int r = 6 + i;
        rot[r].push_back(6 + (i + 1) % 12);
        if (pad[i] >= 0) rot[r].push_back(pad[i]);
        rot[r].push_back(6 + (i + 11) % 12);
    }
    auto g = PlanarGraph::build_from_rotation(rot);
    std::vector<int> ring(12);
    for (int i = 0; i < 12; ++i) ring[i] = 6 + i;
    return g.with_outer_face(*g.find_face_of_cycle(ring));
}

// Small trees / near-trees realizing each stalk shape from a degree-1 or
// degree-2 center 0, with leaf padding fixing the interior degrees.

// 0-1 with deg(1) = 3.
inline PlanarGraph stalk_shape_a() {
    return PlanarGraph::build_from_rotation({{1}, {0, 2, 3}, {1}, {1}});
}

// 0-1-2 with deg(1) = 4, deg(2) = 3.
inline PlanarGraph stalk_shape_b() {
    return PlanarGraph::build_from_rotation(
        {{1}, {0, 2, 3, 4}, {1, 5, 6}, {1}, {1}, {2}, {2}});
}

// Cycle 0-1-2-3 with deg(1) = deg(2) = 4, deg(3) = 3.
inline PlanarGraph stalk_shape_c() {
    return PlanarGraph::build_from_rotation(
        {{3, 1}, {0, 2, 4, 5}, {1, 3, 6, 7}, {2, 0, 8}, {1}, {1}, {2}, {2}, {3}});
}

// Path 0-1-2-3 plus 2-4 with deg(1) = deg(2) = 4, deg(3) = deg(4) = 3.
inline PlanarGraph stalk_shape_d() {
    return PlanarGraph::build_from_rotation({{1},
                                             {0, 2, 5, 6},
                                             {1, 3, 4, 7},
                                             {2, 8, 9},
                                             {2, 10, 11},
                                             {1},
                                             {1},
                                             {2},
                                             {3},
                                             {3},
                                             {4},
                                             {4}});
}

// Path 0-1-2-3 plus 1-4-3 with deg(1) = deg(2) = deg(4) = 4, deg(3) = 3.
inline PlanarGraph stalk_shape_e() {
    return PlanarGraph::build_from_rotation({{1},
                                             {2, 0, 5, 4},
                                             {1, 3, 6, 7},
                                             {2, 4, 10},
                                             {3, 1, 8, 9},
                                             {1},
                                             {2},
                                             {2},
                                             {4},
                                             {4},
                                             {3}});
}

// Path 0-1-2-3-4 plus 1-5-3 and 3-6, degrees 4, 4, 4, 4 at 1, 2, 5, 3 and
// 3 at 4 and 6.
inline PlanarGraph stalk_shape_f() {
    return PlanarGraph::build_from_rotation({{1},
                                             {5, 2, 0, 7},
                                             {1, 3, 8, 9},
                                             {2, 5, 4, 6},
                                             {3, 12, 13},
                                             {3, 1, 10, 11},
                                             {3, 14, 15},
                                             {1},
                                             {2},
                                             {2},
                                             {5},
                                             {5},
                                             {4},
                                             {4},
                                             {6},
                                             {6}});
}

// stalk_shape_c with leaf 4 upgraded to degree 3: the root 1 then carries
// both a 3-vertex path stalk and the 4-cycle stalk.
inline PlanarGraph stalk_shape_bc() {
    return PlanarGraph::build_from_rotation({{3, 1},
                                             {0, 2, 4, 5},
                                             {1, 3, 6, 7},
                                             {2, 0, 8},
                                             {1, 9, 10},
                                             {1},
                                             {2},
                                             {2},
                                             {3},
                                             {4},
                                             {4}});
}

// Path stalk 0-1-2 whose root 1 also sits on the 4-cycle 1-2-3-4 with
// deg(3) = deg(4) = 4: the far-cycle extension.
inline PlanarGraph stalk_far_cycle() {
    return PlanarGraph::build_from_rotation({{1},
                                             {4, 2, 0, 5},
                                             {1, 3, 6},
                                             {2, 4, 7, 8},
                                             {3, 1, 9, 10},
                                             {1},
                                             {2},
                                             {3},
                                             {3},
                                             {4},
                                             {4}});
}

// Root 1 with two path stalks 0-1-2 and 0-1-3: the pendant extension.
inline PlanarGraph stalk_pendant() {
    return PlanarGraph::build_from_rotation(
        {{1}, {0, 2, 3, 4}, {1, 5, 6}, {1, 7, 8}, {1}, {2}, {2}, {3}, {3}});
}

// Pentagonal prism: outer pentagon 0..4, inner pentagon 5..9, spokes
// i-(i+5). Every vertex has degree 3; the five side faces are quads.
inline PlanarGraph pentaprism() {
    std::vector<std::vector<int>> faces;
    faces.push_back({4, 3, 2, 1, 0});
    faces.push_back({5, 6, 7, 8, 9});
    for (int i = 0; i < 5; ++i)
        faces.push_back({i, (i + 1) % 5, (i + 1) % 5 + 5, i + 5});
    auto g = PlanarGraph::build_from_faces(10, faces);
    return g.with_outer_face(*g.find_face_of_cycle({0, 1, 2, 3, 4}));
}

// Cube with the ring edge 2-3 subdivided by vertex 8; the outer face is the
// resulting 5-cycle 0-2-8-3-4, so vertex 8 sits on it with degree 2.
inline PlanarGraph cube5() {
    auto base = cube();
    int n = base.vertex_count();
    std::vector<std::vector<int>> rot(n + 1);
    for (int v : base.vertices()) rot[v] = base.neighbors(v);
    std::replace(rot[2].begin(), rot[2].end(), 3, n);
    std::replace(rot[3].begin(), rot[3].end(), 2, n);
    rot[n] = {2, 3};
    auto g = PlanarGraph::build_from_rotation(rot);
    return g.with_outer_face(*g.find_face_of_cycle({0, 2, n, 3, 4}));
}

// Adds an outer square c0..c3 around a gadget whose outer ring alternates
// degree-2 spacers with pad carriers: each spacer gets one spoke to a square
// vertex, consecutive spacers to the same or the next one in cyclic order.
// Every old ring vertex ends with degree >= 3 and the result stays
// triangle-free because spacers are never adjacent to each other.
inline PlanarGraph wrap_in_square(const PlanarGraph& g) {
    const auto& ring = g.outer().walk;
    int len = int(ring.size());
    int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n + 4);
    for (int v : g.vertices()) rot[v] = g.neighbors(v);
    std::vector<int> spacers;
    for (int i = 0; i < len; ++i)
        if (g.degree(ring[i]) == 2) spacers.push_back(i);
    int s = int(spacers.size());
    std::vector<std::vector<int>> spokes(4);
    for (int i = 0; i < s; ++i) {
        int target = i * 4 / s;
        int v = ring[spacers[i]];
        int pred = ring[(spacers[i] + len - 1) % len];
        int succ = ring[(spacers[i] + 1) % len];
        rot[v] = {succ, pred, n + target};
        spokes[target].push_back(v);
    }
    for (int j = 0; j < 4; ++j) {
        rot[n + j].push_back(n + (j + 1) % 4);
        for (auto it = spokes[j].rbegin(); it != spokes[j].rend(); ++it)
            rot[n + j].push_back(*it);
        rot[n + j].push_back(n + (j + 3) % 4);
    }
    auto out = PlanarGraph::build_from_rotation(rot);
    return out.with_outer_face(*out.find_face_of_cycle({n, n + 1, n + 2, n + 3}));
}

}  // namespace fx
