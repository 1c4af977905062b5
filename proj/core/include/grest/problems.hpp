#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grest/graph.hpp"

namespace grest {

enum class ProblemId { IS, VC, FVS, MMM, CRN, DS, ADS, EDS, MaxCut };

std::string problem_name(ProblemId id);
std::optional<ProblemId> problem_from_name(const std::string& name);

// vertex* deletion prunes the annotated set by the deleted ball, which is
// what makes annotated domination stable.
enum class EditOp { vertex_deletion, edge_deletion, vertex_star_deletion };

std::string edit_op_name(EditOp op);

// B ⊆ V must be dominated within distance ell.
struct AnnotatedInstance {
    std::vector<int> annotated;  // sorted vertex ids
    int ell = 1;
};

// One container for every problem's solutions: vertex sets (IS, VC, FVS,
// DS, ADS, MaxCut sides), edge sets (MMM, EDS), colorings (CRN).
struct Solution {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::map<int, int> coloring;
};

struct ProblemSpec {
    ProblemId id;
    bool maximize = false;
    // stability c' and lifting c per supported edit operation
    std::map<EditOp, std::pair<int, int>> constants;  // op -> (c', c)
};

// Constants follow the structural-rounding table rows for each problem.
const ProblemSpec& problem_spec(ProblemId id);

// Feasibility on g (with the annotation for ADS; ell also serves DS/EDS
// radius variants). On failure, *witness names the violated constraint.
bool is_feasible(ProblemId id, const Graph& g, const Solution& s,
                 const AnnotatedInstance* ann = nullptr,
                 std::string* witness = nullptr);

// Solution cost: cardinality for set problems, number of colors for CRN,
// crossing edges for MaxCut.
long solution_cost(ProblemId id, const Graph& g, const Solution& s);

// All vertices within distance ell of X, including X itself.
std::vector<int> closed_neighborhood(const Graph& g, const std::vector<int>& X,
                                     int ell);

}  // namespace grest
