#pragma once

#include <vector>

#include "grest/graph.hpp"

namespace grest {

// f(v) = max(0, deg(v) - d): how many incident edges v must shed.
struct DegreeDemand {
    std::vector<int> demand;  // indexed by vertex id, 0 for dead ids
};

DegreeDemand degree_demand(const Graph& g, int d);

// Exact minimum edge deletion set enforcing max degree <= d, computed by
// complementation: a maximum b-matching with b(v) = min(d, deg(v)) is the
// largest surviving edge set; everything else is the edit.
EditSet bounded_degree_edge_edit(const Graph& g, int d);

// Brute-force route over edge subsets, usable as the oracle for small m.
EditSet bounded_degree_edge_edit_brute(const Graph& g, int d,
                                       int max_edges = 20);

// Ground set + forbidden occurrences (P4 / C3), each of size <= 4 in vertex
// mode and <= 3 in edge mode. Elements are indices into `vertices` of the
// host graph (vertex mode) or into `edges` (edge mode).
struct HittingInstance {
    bool vertex_mode = true;
    std::vector<std::vector<int>> sets;       // vertex ids
    std::vector<std::vector<Edge>> edge_sets; // edge mode occurrences
};

// Vertex mode: 3-sets forming a triangle and 4-sets spanned by a P4.
// Edge mode: triangle edge triples and edge-distinct P4 paths, each counted
// once (ordered scan canonicalized by endpoints).
HittingInstance star_forest_occurrences(const Graph& g, bool vertex_mode);

// Maximal-disjoint-family k-approximation for hitting set: scan occurrences
// lexicographically; whenever one is untouched, take all its elements.
EditSet star_forest_vertex_edit(const Graph& g);  // 4-approximation
EditSet star_forest_edge_edit(const Graph& g);    // 3-approximation

// true iff every component is a star (no P4 or C3 subgraph)
bool is_star_forest(const Graph& g);

// Star centers of a star forest; singleton components count themselves, a
// single-edge star takes its smaller endpoint.
std::vector<int> star_centers(const Graph& g);

}  // namespace grest
