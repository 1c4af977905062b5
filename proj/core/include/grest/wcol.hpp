#pragma once

#include <optional>
#include <vector>

#include "grest/graph.hpp"
#include "grest/lp.hpp"
#include "grest/rational.hpp"

namespace grest {

// Weak reachability, standard reading: v is weakly c-reachable from u under
// L iff L(v) <= L(u) and some u-v path of length <= c (edges) has every
// vertex w with L(w) >= L(v). Sets include the source itself, which makes
// wcol_1 = degeneracy + 1 exactly.
struct WcolScore {
    int radius = 1;
    std::vector<int> reach_size;           // per vertex id, 0 for dead ids
    std::vector<std::vector<int>> reach;   // the sets themselves
    int score = 0;                         // max over vertices
};

WcolScore wcol_score(const Graph& g, const VertexOrdering& L, int c);

// Exact minimum over all orderings, via DFS over "choose the first vertex"
// with monotone-count pruning. Budgeted: throws budget_error past max_n.
int wcol_exact(const Graph& g, int c, int max_n = 9);

// Decision version with the same semantics; much faster when a cheap witness
// ordering exists (the min-degree ordering is tried first).
bool wcol_at_most(const Graph& g, int c, int k, int max_n = 9);

struct WcEditConfig {
    int path_cap = 4;       // max radius the catalog will enumerate
    double lp_tol = 1e-7;
};

// The LP model for weak-coloring editing plus the index maps the rounding
// and the tests need. Orientation variables x are indexed over ordered pairs
// of distinct live vertices; paths are simple, of length <= c edges,
// canonicalized by endpoint order. Reachability is budgeted per source with
// the self pair folded into the right-hand side.
struct WcLp {
    LinearProgram lp;
    std::vector<int> verts;
    std::vector<std::vector<int>> paths;      // vertex sequences
    std::vector<std::vector<int>> x_var;      // [ui][vi] -> var or -1
    std::vector<std::vector<int>> y_var;      // [path][pos in path]
    std::vector<int> z_var;                   // per edge (edge mode) ...
    std::vector<Edge> z_edges;
    std::vector<int> z_vertex_var;            // ... or per vertex
    std::vector<std::vector<int>> p_var;      // [ui][vi] -> var or -1
    int radius = 1;
    int target = 1;
    bool edge_mode = true;
};

WcLp build_wc_lp(const Graph& g, int c, int k, bool edge_mode,
                 const WcEditConfig& cfg = {});

// Rounded tuple after the three-step scheme: z up at > eps, x/y at >= 1/c,
// P by alive-path witness, z down. Carries everything the feasibility and
// cost checks inspect.
struct WcRounded {
    std::vector<std::vector<char>> x_hat;
    std::vector<std::vector<char>> p_hat;
    std::vector<char> y_hat;      // indexed like flattened y vars
    std::vector<char> z_hat;      // per edge or per vertex, model order
    EditSet edits;
    double lp_objective = 0.0;
    Rational rounded_cost = 0;
    // ordering extracted from x_hat: sort by number of successors, desc
    VertexOrdering extracted_order;
};

struct WcEditResult {
    EditSet edits;
    WcLp model;
    LpSolution lp_solution;
    WcRounded rounded;
    double beta = 0.0;  // 1/(1/c - c*eps)
};

// LP-rounding editor for weak c-coloring: wcol_c(g \ X) <= k * beta and
// cost(X) <= (1/eps) * OPT. Requires c*eps < 1/c.
WcEditResult wc_edit(const Graph& g, int c, int k, const Rational& eps,
                     EditKind mode, const WcEditConfig& cfg = {});

// beta-feasibility of the rounded tuple: pair constraints, path-last
// constraints, path cover, hop constraints, and the per-source reachability
// budget within factor beta.
bool wc_rounded_beta_feasible(const WcLp& model, const WcRounded& r,
                              double beta, std::string* why = nullptr);

}  // namespace grest
