#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flexcolor/io.hpp"
#include "flexcolor/list_coloring.hpp"
#include "flexcolor/planar_graph.hpp"
#include "flexcolor/rational.hpp"

namespace flexcolor {

// Exact value of k^(-b(k-1)), kept as decimal digits of the denominator;
// the interesting instance 4^(-93) needs 56 digits, far beyond int64.
struct Epsilon {
    int k = 0;
    int b = 0;
    long long exponent = 0;    // b*(k-1)
    std::string denominator;   // decimal digits of k^exponent
    std::string str() const;   // "1/<denominator>"
};

// Requires k >= 3 and b >= 1.
Epsilon theoretical_epsilon(int k, int b);

// Random proper coloring from lists of size >= 4 on a triangle-free plane
// graph. Peels off a reducible subgraph Y (find_reducible), recursively
// colors g - Y, strips the colors of already-colored neighbors from the
// lists on Y, and picks one of the remaining colorings of g[Y] uniformly
// (rejection-free index sampling from a seeded mt19937_64; the recursion
// hands a freshly drawn seed to the subproblem). Deterministic function of
// (g, L, seed). Throws NotTriangleFree or PreconditionViolated on bad
// inputs, CapExceeded if a peeled subgraph exceeds the enumeration cap, and
// InternalNoColoring if a stripped list assignment admits no coloring.
Coloring sample_coloring(const PlanarGraph& g, const ListAssignment& L, std::uint64_t seed);

struct SampleStats {
    long long trials = 0;
    std::map<std::pair<int, int>, long long> counts; // (vertex, color) -> hits
    Rational min_empirical_prob;                     // over all v and c in L(v)
};

// Aggregates sample_coloring over seeds seed .. seed+trials-1.
SampleStats estimate_probabilities(const PlanarGraph& g, const ListAssignment& L,
                                   long long trials, std::uint64_t seed);

struct RequestOutcome {
    Coloring best;
    long long satisfied = 0; // requested vertices the best coloring honors
    Rational fraction;       // satisfied / |dom r|; 1 when nothing is requested
};

// Best of `trials` samples by number of honored requests (earliest seed wins
// ties). Requests must name existing vertices with listed colors, one entry
// per vertex.
RequestOutcome satisfy_request(const PlanarGraph& g, const ListAssignment& L, const Request& r,
                               long long trials, std::uint64_t seed);

struct WeightedOutcome {
    Coloring best;
    Rational value; // weight the best coloring collects
    Rational total; // sum of all weights
    Rational ratio; // value / total; 1 when total is zero
};

// Best of `trials` samples by collected weight. Entries must name existing
// vertices with listed colors and nonnegative weights, one entry per
// (vertex, color) pair; missing pairs weigh zero.
WeightedOutcome satisfy_weighted(const PlanarGraph& g, const ListAssignment& L,
                                 const WeightedRequest& w, long long trials, std::uint64_t seed);

struct CountingBound {
    unsigned long long count = 0;
    double bound = 0;   // 2^(n/b)
    bool holds = false; // count^b >= 2^n, compared in exact integers
};

// Exact count of L-colorings against the bound 2^(n/b). Throws CapExceeded
// above 31 vertices.
CountingBound check_counting_bound(const PlanarGraph& g, const ListAssignment& L, int b = 31);

// Fraction of `trials` sampled colorings that avoid `color` on every vertex
// of `verts`. Deep-audit helper for tiny graphs, not part of verification.
Rational audit_avoidance(const PlanarGraph& g, const ListAssignment& L,
                         const std::vector<int>& verts, int color, long long trials,
                         std::uint64_t seed);

} // namespace flexcolor
