#pragma once

#include <vector>

#include "grest/graph.hpp"

namespace grest {

// Maximum cardinality matching (Edmonds blossom). Returns matched edges.
std::vector<Edge> maximum_matching(const Graph& g);

// Maximum simple b-matching via the vertex-splitting reduction to maximum
// matching: each vertex v becomes cap[v] copies, each edge a two-vertex
// gadget. Returns a maximum set of edges with every vertex v incident to at
// most cap[v] of them.
std::vector<Edge> maximum_b_matching(const Graph& g,
                                     const std::vector<int>& cap);

}  // namespace grest
