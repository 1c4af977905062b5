#pragma once

#include <functional>
#include <optional>
#include <string>

#include "grest/graph.hpp"
#include "grest/oracles.hpp"
#include "grest/problems.hpp"
#include "grest/width_edit.hpp"

namespace grest {

// Transport a solution of g \ X back to g. The per-problem rules follow the
// lifting lemmas; the cost moves by at most c|X| in the lemma's direction.
// An infeasible input solution is rejected with the violated constraint.
Solution lift(ProblemId id, EditOp op, const Solution& edited_solution,
              const EditSet& x, const Graph& g,
              const AnnotatedInstance* ann = nullptr);

enum class SolverKind { tree_dp, degeneracy_greedy, brute_force };

struct SolveConfig {
    int dp_width_cap = 8;
    OracleBudget brute_budget;
};

// IS/VC/DS exactly by dynamic programming over a nice decomposition; IS
// 1/(r+1)-approximately by greedy coloring along a degeneracy ordering;
// everything else brute force within budget.
Solution solve_on_class(ProblemId id, const Graph& g, SolverKind kind,
                        const TreeDecomposition* td = nullptr,
                        const VertexOrdering* degeneracy_order = nullptr,
                        const AnnotatedInstance* ann = nullptr,
                        const SolveConfig& cfg = {});

// rho + (c + c'rho) * alphadelta for minimization,
// rho - (c + c'rho) * alphadelta for maximization
double rounding_factor(bool maximize, double rho, int c, int cprime,
                       double alphadelta);

struct RoundingReport {
    EditSet edits;
    Solution edited_solution;
    Solution lifted_solution;
    long edited_cost = 0;
    long lifted_cost = 0;
    bool cost_relation_holds = false;  // lifted vs edited with the exact c
    double rho = 1.0;
    int c = 0;
    int cprime = 0;
    // measured against oracles when they fit the budget
    std::optional<long> opt_edit;       // optimum edit cost
    std::optional<double> alpha_hat;    // |X| / opt_edit
    std::optional<long> opt_problem;    // optimum of the problem on g
    std::optional<double> alphadelta_hat;  // |X| / opt_problem
    std::optional<double> implied_factor;
    bool factor_conditional = true;  // true when alpha/delta are unmeasured
};

using Editor = std::function<EditSet(const Graph&)>;

struct PipelineConfig {
    SolverKind solver = SolverKind::brute_force;
    SolveConfig solve;
    double rho = 1.0;
    bool measure_against_oracles = false;
    std::optional<EditTarget> edit_target;  // for the edit-optimum oracle
    OracleBudget oracle_budget;
};

// edit -> solve on the edited graph -> lift, with the cost relation checked
// exactly; for ADS the annotated set shrinks to B \ N_ell[X] before solving.
RoundingReport structural_round(const Graph& g, const Editor& editor,
                                ProblemId problem, EditOp op,
                                const AnnotatedInstance* ann = nullptr,
                                const PipelineConfig& cfg = {});

}  // namespace grest
