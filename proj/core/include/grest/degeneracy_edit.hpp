#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grest/graph.hpp"
#include "grest/lp.hpp"
#include "grest/rational.hpp"

namespace grest {

enum class LocalRatioBranch { base_empty, low_degree, zero_weight, decompose };

// Per-recursion record of the weight decomposition: at a decompose step the
// weights split as w = w1 + w2 with w1(u) = eps * deg(u) over the current
// graph, and w2 stays nonnegative.
struct LocalRatioStep {
    LocalRatioBranch branch;
    int vertex = -1;            // for low_degree / zero_weight
    Rational epsilon = 0;       // for decompose
    std::map<int, Rational> w;  // weights entering the step (live vertices)
    std::map<int, Rational> w1;
    std::map<int, Rational> w2;
};

using LocalRatioTrace = std::vector<LocalRatioStep>;

// Local-ratio editor: degeneracy(g \ X) <= beta*r, X minimal, and
// w(X) <= ((4m - beta*r*n) / (m - r*n)) * OPT_r whenever m > r*n.
EditSet local_ratio_vertex_edit(const Graph& g, int r, const Rational& beta,
                                LocalRatioTrace* trace = nullptr);

struct DegenLpResult {
    EditSet edits;
    Orientation orientation;  // of the surviving elements
    LinearProgram model;
    LpSolution solution;
    double out_degree_bound = 0.0;  // 2r/(1-2eps) resp. 2r/(1-eps)
};

// DegenVertexEdit-LP + threshold rounding: delete y >= eps, orient surviving
// edges at x >= (1-2eps)/2 (deleted endpoints force their arcs to zero
// first; a double hit keeps the arc out of the smaller endpoint).
DegenLpResult lp_vertex_edit(const Graph& g, int r, const Rational& eps,
                             double lp_tol = 1e-7);

// DegenEdgeEdit-LP, two-phase rounding: z >= eps deletes, then arcs at
// x >= (1-eps)/2 on the survivors.
DegenLpResult lp_edge_edit(const Graph& g, int r, const Rational& eps,
                           double lp_tol = 1e-7);

// Ordering, the vertices of forward degree exactly r, and their forward
// edges (the marked edges).
struct MarkState {
    VertexOrdering ordering;
    std::vector<int> marked_vertices;
    std::vector<Edge> marked_edges;
};

MarkState marked_edges(const Graph& g, const VertexOrdering& L, int r);

struct ByOneTrace {
    long m0 = 0;                       // initial marked-edge count
    std::vector<MarkState> states;     // per iteration, before the edit
    std::vector<long> resolved;        // marked edges resolved per iteration
    bool monotone = true;              // no unmarked edge ever became marked
};

// Greedy reducer: picks the edit resolving the most marked edges until the
// min-degree ordering witnesses degeneracy r-1. |X| <= OPT ln(m0) + 1.
EditSet degen_reduce_by_one(const Graph& g, EditKind mode,
                            ByOneTrace* trace = nullptr);

EditSet degen_reduce_by_d(const Graph& g, int d, EditKind mode);

enum class DegenBaseEditor { local_ratio, lp_vertex, lp_edge };

// Bicriteria stage with the chosen base editor, then by-one stages walking
// the degeneracy down to r.
EditSet degen_reduce_to_r(const Graph& g, int r, DegenBaseEditor base,
                          EditKind mode);

}  // namespace grest
