#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grest/graph.hpp"
#include "grest/problems.hpp"
#include "grest/width_edit.hpp"

namespace grest {

struct OracleBudget {
    int max_vertices = 14;
    int max_edges = 24;
    long max_subsets = 50'000'000;
    double wall_clock_seconds = 120.0;
};

enum class EditPredicate { degeneracy_le, maxdeg_le, star_forest, tw_le,
                           wcol_le };

struct EditTarget {
    EditPredicate predicate = EditPredicate::degeneracy_le;
    int value = 0;   // r, d, w, or k (ignored for star_forest)
    int radius = 1;  // c for wcol_le
};

bool satisfies(const Graph& g, const EditTarget& t);

// Minimum edit set by enumeration in increasing size, lexicographic within a
// size, early exit at the first hit (so the witness is reproducible). With
// non-uniform weights the scan keeps going and returns the cheapest set.
EditSet exact_min_edit(const Graph& g, const EditTarget& target,
                       EditKind kind, const OracleBudget& budget = {});

// Convenience: the optimum value only.
long exact_min_edit_size(const Graph& g, const EditTarget& target,
                         EditKind kind, const OracleBudget& budget = {});

// Exact treewidth via the elimination-ordering subset DP (n <= 14 by
// default); the permutation route below n = 9 is exposed for cross-checks.
int exact_treewidth(const Graph& g, const OracleBudget& budget = {});
int exact_treewidth_permutations(const Graph& g,
                                 const OracleBudget& budget = {});

// Width-optimal decomposition reconstructed from the DP's elimination order.
TreeDecomposition exact_tree_decomposition(const Graph& g,
                                           const OracleBudget& budget = {});

int exact_clique_number(const Graph& g, const OracleBudget& budget = {});

// Thin forwarding wrapper so all ground truth lives behind one façade.
int exact_wcol(const Graph& g, int c, const OracleBudget& budget = {});

// Exact optimum of a registered problem by exhaustive search.
struct ExactOpt {
    long cost = 0;
    Solution witness;
};

ExactOpt exact_opt(ProblemId id, const Graph& g,
                   const AnnotatedInstance* ann = nullptr,
                   const OracleBudget& budget = {});

struct SetCoverInstance;  // defined in instances.hpp

std::vector<int> exact_set_cover(const SetCoverInstance& sc,
                                 const OracleBudget& budget = {});

// Minimum hitting set over explicit occurrence sets (indices into a ground
// set of size ground_size).
std::vector<int> exact_hitting_set(const std::vector<std::vector<int>>& sets,
                                   int ground_size,
                                   const OracleBudget& budget = {});

// Exact minimum vertex c-separator of W (exhaustive, increasing size).
std::vector<int> exact_min_separator(const Graph& g, const std::vector<int>& W,
                                     const Rational& c,
                                     const OracleBudget& budget = {});

// max over W of the minimum c-separator size (the graph parameter sep_c)
int exact_sep_number(const Graph& g, const Rational& c,
                     const OracleBudget& budget = {});

}  // namespace grest
