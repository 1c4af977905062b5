#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grest/graph.hpp"
#include "grest/rational.hpp"

namespace grest {

// Bags over vertex ids plus a tree over bag indices. Width is max bag size
// minus one; height counts bags on the longest root-to-leaf path.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree;  // edges over bag indices
    int root = 0;

    int width() const;
    int height() const;
    std::vector<std::vector<int>> bag_adjacency() const;
};

struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // in path order

    int width() const;
};

// The three defining properties, machine-checked: every vertex in a bag,
// every edge inside a bag, and per-vertex bag sets connected in the tree.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td,
                            std::string* why = nullptr);
bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd,
                                 std::string* why = nullptr);

struct SeparatorResult {
    std::vector<int> separator;
    std::vector<std::vector<int>> components;
    Rational balance = Rational(3, 4);
    Rational achieved_fraction = 0;  // max component share of W
    bool exact = false;              // minimal among c-separators
    bool fell_back = false;          // exact budget exceeded, heuristic used
};

struct WidthEditConfig {
    Rational c1 = 1;          // scales the editor's stopping threshold
    int exact_separator_max_n = 18;
    int exact_treewidth_max_n = 12;
    Rational balance = Rational(3, 4);
};

// Minimum vertex c-separator of W by exhaustive search when the subgraph is
// small enough, else a BFS-layer greedy heuristic (flagged in the result).
SeparatorResult balanced_separator(const Graph& g, const std::vector<int>& W,
                                   const Rational& c,
                                   int exact_max_n = 18);

// Validity check used by tests: every component holds <= c\|W\| W-vertices.
bool is_valid_separator(const Graph& g, const std::vector<int>& W,
                        const Rational& c, const std::vector<int>& S);

// Recursive builder: carries (Z, W), emits the bag W ∪ S ∪ T and recurses on
// the components; base case emits the single bag Z ∪ W. Child Z-sets shrink
// by 3/4, asserted, which caps the height at log_{4/3} n + 1.
struct BuilderStats {
    int max_depth = 0;
    bool shrink_held = true;       // every child had |Z_i| <= (3/4)|Z|
    int shrink_repairs = 0;        // times T was augmented to enforce it
};

TreeDecomposition tree_decomposition(const Graph& g,
                                     const WidthEditConfig& cfg = {},
                                     BuilderStats* stats = nullptr);

// Recursion trace of the editor: the top-level partition it induced
// (separator + components), for the lower-bound harness.
struct TwEditResult {
    EditSet edits;
    TreeDecomposition certificate;  // of g \ X, width <= threshold
    double threshold = 0.0;         // 32 * c1 * w * sqrt(max(1, log2 w))
    std::vector<std::vector<int>> partition;  // leaf components + separators
};

double tw_edit_threshold(const Rational& c1, int w);

TwEditResult treewidth_node_edit(const Graph& g, int w,
                                 const WidthEditConfig& cfg = {});

// Root-to-leaf bag unions in DFS leaf order; width+1 <= (width+1) * height.
PathDecomposition tree_to_path(const Graph& g, const TreeDecomposition& td);

struct PwEditResult {
    EditSet edits;
    PathDecomposition certificate;
    TwEditResult tw_stage;
};

PwEditResult pathwidth_node_edit(const Graph& g, int w,
                                 const WidthEditConfig& cfg = {});

}  // namespace grest
