#pragma once

#include "flexcolor/planar_graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flexcolor {

// The six degree-constrained subgraphs hanging off a base vertex v. Degrees
// are taken in the host graph, labeled vertices are pairwise distinct:
//   a: path v v1,             deg(v1)=3
//   b: path v v1 v2,          deg(v1)=4, deg(v2)=3
//   c: cycle v v1 v2 v3,      deg(v1)=deg(v2)=4, deg(v3)=3 (v3 is the bud)
//   d: path v v1 v2 v3 plus edge v2 u3,       deg(v1)=deg(v2)=4, deg(v3)=deg(u3)=3
//   e: path v v1 v2 v3 plus path v1 u2 v3,    deg(v1)=deg(v2)=deg(u2)=4, deg(v3)=3
//   f: path v v1 v2 v3 v4, path v1 u2 v3, edge v3 u4,
//                             deg(v1)=deg(v2)=deg(u2)=deg(v3)=4, deg(v4)=deg(u4)=3
enum class StalkKind { a, b, c, d, e, f };

char stalk_kind_letter(StalkKind k);

struct Stalk {
    StalkKind kind;
    int base = -1; // v
    // Labeled order: a {v,v1}; b {v,v1,v2}; c {v,v1,v2,v3}; d {v,v1,v2,v3,u3};
    // e {v,v1,v2,v3,u2}; f {v,v1,v2,v3,v4,u2,u4}.
    std::vector<int> vertices;
    int root = -1;          // v1
    std::optional<int> bud; // kind c only

    // Re-checks shape, degrees and distinctness against g.
    bool validate(const PlanarGraph& g) const;
};

// How a kind-b stalk upgrades to an excellent witness.
enum class ExtensionKind {
    none,       // stalk kind a/d/e/f already qualifies
    pendant,    // v1 has another degree-3 neighbor u2 off C
    far_cycle,  // 4-cycle v1 v2 w3 w2 with deg(w2)=deg(w3)=4, off C
    near_cycle, // 4-cycle v1 w2 w3 v with deg(w2)=4, deg(w3)=3, off C
};

struct ExtendedStalk {
    Stalk stalk;
    ExtensionKind extension = ExtensionKind::none;
    std::vector<int> extra; // vertices the extension adds

    std::vector<int> vertices() const; // stalk plus extras, sorted
};

enum class ConfigKind { small_deg2, small_33, mainredu, fiveredu, spec4 };

const char* config_kind_name(ConfigKind k);

struct Configuration {
    ConfigKind kind;
    std::vector<int> vertex_set;            // sorted, induces the subgraph H
    std::vector<Stalk> stalks;              // stalk witnesses where applicable
    std::vector<std::vector<int>> cycles;   // face-cycle witnesses where applicable
    int size_bound = 31;                    // claimed max size for this kind
    bool oracle_verified = false;           // set by callers that ran the checker
};

// Degree-<=2 vertex (preferred) or adjacent degree-3 pair; smallest ids win.
std::optional<Configuration> find_small(const PlanarGraph& g);

// Every v-stalk vertex-disjoint from c_vertices, deduplicated up to the
// symmetries of the shape (same kind, root, bud and vertex set).
std::vector<Stalk> find_stalks(const PlanarGraph& g, const std::vector<int>& c_vertices, int v);

// One entry per root that carries a stalk, with the canonical witness:
// kind priority a<b<c<d<e<f, then fewest vertices, then lexicographic.
std::vector<std::pair<int, Stalk>> good_neighbors(const PlanarGraph& g,
                                                  const std::vector<int>& c_vertices, int v);

// Extended stalk witnessing that neighbor x of v roots a stalk of kind
// a/d/e/f, or kind b with one of the three extension shapes; smallest witness
// first. Empty when x does not qualify.
std::optional<ExtendedStalk> is_excellent(const PlanarGraph& g, const std::vector<int>& c_vertices,
                                          int v, int x);

// The three disk searches. Each requires g to carry an outer face bounded by
// a cycle and every (<=5)-cycle of g to bound a face (PreconditionViolated
// otherwise); returned vertex sets are disjoint from the outer cycle.
std::optional<Configuration> find_mainredu(const PlanarGraph& g);
std::optional<Configuration> find_5redu(const PlanarGraph& g);
std::optional<Configuration> find_spec4(const PlanarGraph& g);

// Full pipeline: per connected component (ascending min id) try find_small,
// otherwise pick a (<=5)-cycle face as outer boundary, restrict to the
// minimal non-face disk and run the three searches in order. Throws
// NotTriangleFree on bad input, FaceBoundViolation if a component has no
// short face, and TheoremViolation with a diagnostic dump if nothing is
// found (which contradicts the guarantee the pipeline implements).
Configuration find_reducible(const PlanarGraph& g);

} // namespace flexcolor
