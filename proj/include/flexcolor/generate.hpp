#pragma once

#include "flexcolor/planar_graph.hpp"

#include <cstdint>

namespace flexcolor {

// Random triangle-free plane graphs for fixtures and batch runs.
//
// gen_quadrangulation grows a plane quadrangulation from a small seed graph
// by repeatedly picking a face walk p-q-r and adding a new vertex adjacent to
// p and r inside that face (skipped when p and r are adjacent, which keeps
// the graph triangle-free). All faces stay 4-cycles.
//
// gen_triangle_free does the same and then subdivides `subdivisions` random
// edges, producing degree-2 vertices and 5-faces while staying triangle-free.
// Both are deterministic in (n, seed) and validate the embedding after every
// operation.
PlanarGraph gen_quadrangulation(int n, std::uint64_t seed);
PlanarGraph gen_triangle_free(int n, std::uint64_t seed, int subdivisions);

} // namespace flexcolor
