#include "grest/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace grest {

int LinearProgram::add_variable(double lo, double hi) {
    lower.push_back(lo);
    upper.push_back(hi);
    return variable_count++;
}

void LinearProgram::add_constraint(std::map<int, double> coeffs, Relation rel,
                                   double rhs) {
    for (auto& [i, c] : coeffs) {
        if (i < 0 || i >= variable_count)
            throw input_error("constraint references unknown variable");
        if (!std::isfinite(c)) throw input_error("non-finite coefficient");
    }
    if (!std::isfinite(rhs)) throw input_error("non-finite rhs");
    constraints.push_back({std::move(coeffs), rel, rhs});
}

void LinearProgram::set_objective(LpDirection dir,
                                  std::map<int, double> coeffs) {
    for (auto& [i, c] : coeffs)
        if (i < 0 || i >= variable_count)
            throw input_error("objective references unknown variable");
    direction = dir;
    objective = std::move(coeffs);
}

namespace {

constexpr double kPivotTol = 1e-9;

// Tableau simplex over rows: columns = structural + slack/surplus +
// artificial + rhs. Basis tracked per row. Bland's rule throughout.
struct Tableau {
    std::vector<std::vector<double>> a;  // m x (ncols+1), last col rhs
    std::vector<int> basis;              // column basic in each row
    int ncols = 0;

    double& rhs(int r) { return a[r][ncols]; }

    void pivot(int r, int c) {
        double p = a[r][c];
        if (std::fabs(p) < kPivotTol) throw lp_error("tiny pivot element");
        double inv = 1.0 / p;
        for (int j = 0; j <= ncols; ++j) a[r][j] *= inv;
        a[r][c] = 1.0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            double f = a[i][c];
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) a[i][j] -= f * a[r][j];
            a[i][c] = 0.0;
        }
        basis[r] = c;
    }

    // Minimize cost over the current tableau. Returns false on unbounded.
    // Bland: entering = smallest column index with negative reduced cost;
    // leaving = smallest basic variable index among min-ratio rows.
    bool run(std::vector<double>& cost, double& value, long max_iters) {
        int m = static_cast<int>(a.size());
        // express cost in terms of nonbasic variables
        for (int r = 0; r < m; ++r) {
            double f = cost[basis[r]];
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * a[r][j];
        }
        long iters = 0;
        while (true) {
            if (++iters > max_iters)
                throw lp_error("simplex failed to converge (iteration cap)");
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (cost[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
            if (enter < 0) break;
            int leave = -1;
            double best = 0.0;
            for (int r = 0; r < m; ++r) {
                if (a[r][enter] <= kPivotTol) continue;
                double ratio = rhs(r) / a[r][enter];
                if (leave < 0 || ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
            double f = cost[enter];
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * a[leave][j];
            cost[enter] = 0.0;
        }
        value = -cost[ncols];
        return true;
    }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol) {
    const int n = lp.variable_count;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(lp.lower[i]))
            throw input_error("solve_lp: lower bounds must be finite");
        if (lp.upper[i] < lp.lower[i]) {
            LpSolution s;
            s.status = LpStatus::infeasible;
            return s;
        }
    }

    // Shift x = y + lower so y >= 0; finite uppers become <= rows; equalities
    // become a >=/<= pair.
    struct Row {
        std::map<int, double> coeffs;
        bool ge;
        double rhs;
    };
    std::vector<Row> rows;
    auto push = [&](const std::map<int, double>& coeffs, bool ge, double rhs) {
        double shift = 0.0;
        for (auto& [i, c] : coeffs) shift += c * lp.lower[i];
        rows.push_back({coeffs, ge, rhs - shift});
    };
    for (const auto& cst : lp.constraints) {
        if (cst.rel == Relation::ge || cst.rel == Relation::eq)
            push(cst.coeffs, true, cst.rhs);
        if (cst.rel == Relation::le || cst.rel == Relation::eq)
            push(cst.coeffs, false, cst.rhs);
    }
    for (int i = 0; i < n; ++i)
        if (std::isfinite(lp.upper[i]))
            push({{i, 1.0}}, false, lp.upper[i]);

    const int m = static_cast<int>(rows.size());
    // columns: 0..n-1 structural, then one slack per row, then artificials
    int ncols = n + m;
    std::vector<int> artificial_of(m, -1);
    for (int r = 0; r < m; ++r) {
        double rhs = rows[r].rhs;
        bool ge = rows[r].ge;
        // after sign normalization the row needs an artificial iff the slack
        // cannot start basic (surplus rows, i.e. >= with rhs >= 0)
        bool flip = rhs < 0;
        bool needs_art = flip ? !ge : ge;
        if (needs_art) artificial_of[r] = ncols++;
    }

    Tableau t;
    t.ncols = ncols;
    t.basis.assign(m, -1);
    t.a.assign(m, std::vector<double>(ncols + 1, 0.0));
    for (int r = 0; r < m; ++r) {
        double sign = rows[r].rhs < 0 ? -1.0 : 1.0;
        for (auto& [i, c] : rows[r].coeffs) t.a[r][i] = sign * c;
        // slack: +1 for <=, -1 for >= (pre-normalization), then sign-flipped
        double slack = rows[r].ge ? -1.0 : 1.0;
        t.a[r][n + r] = sign * slack;
        t.a[r][ncols] = sign * rows[r].rhs;
        if (artificial_of[r] >= 0) {
            t.a[r][artificial_of[r]] = 1.0;
            t.basis[r] = artificial_of[r];
        } else {
            t.basis[r] = n + r;
        }
    }

    const long max_iters = 50000L + 30L * (ncols + m);

    // Phase 1
    bool any_art = false;
    for (int r = 0; r < m; ++r) any_art |= artificial_of[r] >= 0;
    if (any_art) {
        std::vector<double> cost(ncols + 1, 0.0);
        for (int r = 0; r < m; ++r)
            if (artificial_of[r] >= 0) cost[artificial_of[r]] = 1.0;
        double v1 = 0.0;
        if (!t.run(cost, v1, max_iters))
            throw lp_error("phase-1 unbounded (should be impossible)");
        if (v1 > tol) {
            LpSolution s;
            s.status = LpStatus::infeasible;
            return s;
        }
        // drive remaining artificials out of the basis
        for (int r = 0; r < m; ++r) {
            if (t.basis[r] < n + m) continue;
            bool pivoted = false;
            for (int j = 0; j < n + m && !pivoted; ++j)
                if (std::fabs(t.a[r][j]) > kPivotTol) {
                    t.pivot(r, j);
                    pivoted = true;
                }
            // a redundant all-zero row keeps its artificial at value 0
        }
    }

    // Phase 2
    std::vector<double> cost(ncols + 1, 0.0);
    double dir = lp.direction == LpDirection::minimize ? 1.0 : -1.0;
    for (auto& [i, c] : lp.objective) cost[i] = dir * c;
    // forbid re-entering artificials
    for (int r = 0; r < m; ++r)
        if (artificial_of[r] >= 0 && t.basis[r] != artificial_of[r])
            for (auto& row : t.a) row[artificial_of[r]] = 0.0;
    double v2 = 0.0;
    if (!t.run(cost, v2, max_iters)) {
        LpSolution s;
        s.status = LpStatus::unbounded;
        return s;
    }

    LpSolution s;
    s.status = LpStatus::optimal;
    s.values.assign(n, 0.0);
    for (int r = 0; r < m; ++r)
        if (t.basis[r] < n) s.values[t.basis[r]] = t.a[r][ncols];
    double obj = 0.0;
    for (int i = 0; i < n; ++i) {
        s.values[i] += lp.lower[i];
        if (auto it = lp.objective.find(i); it != lp.objective.end())
            obj += it->second * s.values[i];
    }
    s.objective = obj;

    // feasibility audit within tol
    for (const auto& cst : lp.constraints) {
        double lhs = 0.0;
        for (auto& [i, c] : cst.coeffs) lhs += c * s.values[i];
        bool ok = true;
        if (cst.rel == Relation::ge) ok = lhs >= cst.rhs - tol;
        if (cst.rel == Relation::le) ok = lhs <= cst.rhs + tol;
        if (cst.rel == Relation::eq) ok = std::fabs(lhs - cst.rhs) <= tol;
        if (!ok) throw lp_error("optimal point fails feasibility audit");
    }
    for (int i = 0; i < n; ++i)
        if (s.values[i] < lp.lower[i] - tol || s.values[i] > lp.upper[i] + tol)
            throw lp_error("optimal point violates variable bounds");
    return s;
}

std::string to_lp_text(const LinearProgram& lp) {
    std::ostringstream os;
    os.precision(17);
    auto terms = [&](const std::map<int, double>& coeffs) {
        bool first = true;
        for (auto& [i, c] : coeffs) {
            if (!first) os << " + ";
            os << c << " x" << i;
            first = false;
        }
        if (first) os << "0 x0";
    };
    os << (lp.direction == LpDirection::minimize ? "min: " : "max: ");
    terms(lp.objective);
    os << ";\n";
    for (size_t k = 0; k < lp.constraints.size(); ++k) {
        const auto& c = lp.constraints[k];
        os << "r" << k << ": ";
        terms(c.coeffs);
        os << (c.rel == Relation::ge ? " >= "
                                     : c.rel == Relation::le ? " <= " : " = ");
        os << c.rhs << ";\n";
    }
    for (int i = 0; i < lp.variable_count; ++i) {
        os << "bounds: " << lp.lower[i] << " <= x" << i << " <= ";
        if (std::isfinite(lp.upper[i]))
            os << lp.upper[i];
        else
            os << "inf";
        os << ";\n";
    }
    return os.str();
}

}  // namespace grest
