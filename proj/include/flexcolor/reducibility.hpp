#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexcolor/list_coloring.hpp"
#include "flexcolor/planar_graph.hpp"

namespace flexcolor {

// Per-vertex lower bound on list sizes (f = deg_H + delta and its variants).
struct DegreeBound {
    std::map<int, int> values;

    int at(int v) const;
    // Same bound with exactly one vertex pinned to 1.
    DegreeBound lowered_at(int v) const;
    // Bound minus the characteristic function of I.
    DegreeBound minus_one_on(const std::vector<int>& I) const;
    // Sum of positive parts; size of the color universe needed for exhaustive
    // assignment enumeration.
    int universe() const;
};

// v -> k - deg_G(v) on the given vertices.
DegreeBound delta(const PlanarGraph& g, const std::vector<int>& h_vertices, int k);

// deg_H + delta_{G,k} where H = G[h_vertices].
DegreeBound reducibility_bound(const PlanarGraph& g, const PlanarGraph& h, int k);

struct AssignmentCheck {
    bool ok = false;
    // Concrete assignment with |L(v)| = max(f(v), 0) admitting no coloring.
    std::optional<ListAssignment> witness;
};

// Decides whether h is L-colorable for every assignment with |L(v)| >= f(v).
// First kernelizes: both removal rules look only at list sizes, so reducing a
// synthetic assignment with sizes f shrinks h to the part whose colorability
// can depend on the lists, and a kernel counterexample extends back by giving
// removed vertices fresh disjoint colors. Then enumerates exact-size
// assignments over the kernel, canonicalized two ways that preserve the
// verdict: new colors appear in consecutive order (color-renaming symmetry),
// and every color's support is connected (a disconnected support part can be
// renamed to a fresh color without affecting colorability). Throws
// CapExceeded when h has more than cap vertices; a nonpositive bound yields
// false with an empty list.
AssignmentCheck colorable_for_all_assignments(const PlanarGraph& h, const DegreeBound& f,
                                              int cap = 12);

struct ReducibilityWitness {
    std::string condition;  // "FIX" or "FORB"
    std::vector<int> set;   // the pinned vertex, or the d-independent set I
    ListAssignment lists;
};

struct ConditionResult {
    bool ok = false;
    std::optional<ReducibilityWitness> witness;
};

// (FIX): for every v in H, every ((deg_H+delta) pinned at v)-assignment of
// H = G[h_vertices] is colorable.
ConditionResult check_fix(const PlanarGraph& g, const std::vector<int>& h_vertices, int k,
                          int cap = 12);

// (FORB): for every d-independent I in H (distances measured in H) with
// |I| <= k-2, including the empty set, every (deg_H+delta-1_I)-assignment is
// colorable. Fails fast when deg_H(v)+delta(v) < 2 for some v.
ConditionResult check_forb(const PlanarGraph& g, const std::vector<int>& h_vertices, int k,
                           int d, int cap = 12);

struct ReducibilityVerdict {
    bool reducible = false;
    std::optional<ReducibilityWitness> failing_witness;
};

// Conjunction of check_fix and check_forb, reporting the first failure.
ReducibilityVerdict is_reducible(const PlanarGraph& g, const std::vector<int>& h_vertices,
                                 int d, int k, int cap = 12);

}  // namespace flexcolor
