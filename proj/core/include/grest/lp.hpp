#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "grest/errors.hpp"

namespace grest {

enum class Relation { ge, le, eq };

struct LpConstraint {
    std::map<int, double> coeffs;
    Relation rel = Relation::ge;
    double rhs = 0.0;
};

enum class LpDirection { minimize, maximize };

struct LinearProgram {
    int variable_count = 0;
    std::vector<double> lower;  // default 0
    std::vector<double> upper;  // default +inf
    std::vector<LpConstraint> constraints;
    LpDirection direction = LpDirection::minimize;
    std::map<int, double> objective;

    int add_variable(double lo = 0.0,
                     double hi = std::numeric_limits<double>::infinity());
    void add_constraint(std::map<int, double> coeffs, Relation rel,
                        double rhs);
    void set_objective(LpDirection dir, std::map<int, double> coeffs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    std::vector<double> values;
    double objective = 0.0;

    double operator[](int var) const { return values[var]; }
};

// Dense two-phase simplex with Bland's anti-cycling rule. Deterministic:
// re-solving the same model reproduces the result bit for bit. Equality
// constraints are compiled to a >=/<= pair. Throws lp_error on numerical
// failure (this is distinct from an infeasible status).
LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-7);

// Model dump for external cross-checks. Grammar (one item per line):
//   min:|max: <term> [+ <term>]* ;
//   r<k>: <term> [+ <term>]* (>=|<=|=) <number> ;
//   bounds: <number> <= x<i> <= <number|inf> ;
// where <term> is <coefficient> x<index>.
std::string to_lp_text(const LinearProgram& lp);

}  // namespace grest
