#pragma once

#include <optional>
#include <vector>

namespace flexcolor {

// Facial walk of a combinatorial embedding. walk[i] -> walk[i+1] (cyclic) are
// the directed edges of the face; length == walk.size(). Walks may repeat
// vertices when the graph is not 2-connected.
struct Face {
    int id = -1;
    std::vector<int> walk;

    int length() const { return int(walk.size()); }
    // True when the walk visits |walk| distinct vertices, i.e. bounds a cycle.
    bool is_cycle() const;
};

// A (<=5)-cycle together with the faces and vertices drawn strictly inside
// the disk it bounds (the side away from the outer face).
struct DiskCycle {
    std::vector<int> cycle;
    std::vector<int> interior_faces;
    std::vector<int> interior_vertices;
};

// Immutable plane graph given by clockwise rotations. Vertex ids are
// nonnegative and need not be contiguous (induced subgraphs keep the ids of
// the parent graph). Faces are traced at construction; the face tracing rule
// is: after arriving at v along uv, leave along v's rotation successor of u.
class PlanarGraph {
public:
    PlanarGraph() = default;

    // rotation[i] lists the neighbors of vertex i in clockwise order. Throws
    // AsymmetricRotation / DuplicateNeighbor on malformed input, and checks
    // Euler's formula per connected component.
    static PlanarGraph build_from_rotation(const std::vector<std::vector<int>>& rotation);

    // Builds from facial walks: every directed edge must appear in exactly
    // one walk. Convenient for constructing quadrangulation fixtures.
    static PlanarGraph build_from_faces(int n, const std::vector<std::vector<int>>& walks);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_vertex(int v) const { return v >= 0 && v < int(rot_.size()) && present_[v]; }
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return int(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    // Face to the left of directed edge u->v under the tracing rule.
    int face_of(int u, int v) const;

    std::optional<int> outer_face() const { return outer_; }
    const Face& outer() const;
    // Copy with the given face designated as unbounded.
    PlanarGraph with_outer_face(int face_id) const;
    // Finds the face whose walk equals `cycle` up to rotation/reflection.
    std::optional<int> find_face_of_cycle(const std::vector<int>& cycle) const;

    bool is_triangle_free() const;
    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    // BFS distance; -1 if unreachable.
    int distance(int u, int v) const;
    bool is_d_independent(const std::vector<int>& set, int d) const;

    PlanarGraph induced_subgraph(const std::vector<int>& keep) const;

    // All simple cycles of length <= 5, each in canonical form (lexicographically
    // smallest rotation/reflection). Triangle-free inputs only have 4- and
    // 5-cycles but triangles are enumerated too.
    std::vector<std::vector<int>> short_cycles() const;
    bool cycle_bounds_face(const std::vector<int>& cycle) const;

    // Minimal (by interior face count, then lexicographic cycle) (<=5)-cycle
    // whose disk is not a single face; falls back to the outer cycle itself.
    // Requires: connected, triangle-free, min degree >= 3, outer face set and
    // bounded by a (<=5)-cycle.
    DiskCycle find_minimal_nonface_cycle() const;

    // Interior faces/vertices of a simple cycle (side not containing the
    // outer face). Requires outer face set.
    DiskCycle disk_of_cycle(const std::vector<int>& cycle) const;

    // Plane subgraph drawn in the closed disk of c, with c bounding the new
    // outer face.
    PlanarGraph subgraph_in_disk(const DiskCycle& c) const;

private:
    void trace_faces();
    void validate_euler() const;
    int rot_pos(int v, int nbr) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<char> present_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> verts_;
    std::vector<Face> faces_;
    // face_dir_[v] aligns with rot_[v]: face of directed edge v -> rot_[v][i].
    std::vector<std::vector<int>> face_dir_;
    std::optional<int> outer_;
};

// Canonical form of a cycle: lexicographically smallest among all rotations
// of both directions.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

} // namespace flexcolor
