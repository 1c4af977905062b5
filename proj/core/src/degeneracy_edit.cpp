#include "grest/degeneracy_edit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grest {

namespace {

bool feasible(const Graph& g, const Rational& beta_r) {
    return Rational(degeneracy(g).degeneracy) <= beta_r;
}

// drop removable vertices until the edit set is minimal
std::set<int> minimal_solution(const Graph& g, std::set<int> X,
                               const Rational& beta_r) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(X.begin(), X.end())) {
            std::vector<int> rest;
            for (int u : X)
                if (u != v) rest.push_back(u);
            if (feasible(g.delete_vertices(rest), beta_r)) {
                X.erase(v);
                changed = true;
                break;
            }
        }
    }
    return X;
}

std::set<int> local_ratio_recurse(const Graph& g,
                                  std::map<int, Rational> w, int r,
                                  const Rational& beta,
                                  LocalRatioTrace* trace) {
    const Rational beta_r = beta * r;
    if (g.num_vertices() == 0) {
        if (trace) trace->push_back({LocalRatioBranch::base_empty, -1, 0,
                                     w, {}, {}});
        return {};
    }
    // a vertex of degree <= beta*r never needs deleting
    for (int v : g.vertices()) {
        if (Rational(g.degree(v)) <= beta_r) {
            if (trace) trace->push_back({LocalRatioBranch::low_degree, v, 0,
                                         w, {}, {}});
            auto w2 = w;
            w2.erase(v);
            return local_ratio_recurse(g.delete_vertices({v}), std::move(w2),
                                       r, beta, trace);
        }
    }
    // zero-weight vertices are free; take them only if needed, then prune
    for (int v : g.vertices()) {
        if (w.at(v) == 0) {
            if (trace) trace->push_back({LocalRatioBranch::zero_weight, v, 0,
                                         w, {}, {}});
            auto w2 = w;
            w2.erase(v);
            auto X = local_ratio_recurse(g.delete_vertices({v}),
                                         std::move(w2), r, beta, trace);
            if (feasible(g.delete_vertices({X.begin(), X.end()}), beta_r))
                return X;
            X.insert(v);
            return minimal_solution(g, std::move(X), beta_r);
        }
    }
    // weight decomposition: w1(u) = eps * deg(u), eps = min w(v)/deg(v)
    std::optional<Rational> eps;
    for (int v : g.vertices()) {
        Rational q = w.at(v) / g.degree(v);
        if (!eps || q < *eps) eps = q;
    }
    std::map<int, Rational> w1, w2;
    for (int v : g.vertices()) {
        w1[v] = *eps * g.degree(v);
        w2[v] = w.at(v) - w1[v];
        if (w2[v] < 0)
            throw std::logic_error("weight decomposition went negative");
    }
    if (trace)
        trace->push_back({LocalRatioBranch::decompose, -1, *eps, w, w1, w2});
    return local_ratio_recurse(g, std::move(w2), r, beta, trace);
}

}  // namespace

EditSet local_ratio_vertex_edit(const Graph& g, int r, const Rational& beta,
                                LocalRatioTrace* trace) {
    if (r < 1) throw input_error("local_ratio_vertex_edit: r must be >= 1");
    if (beta < 1) throw input_error("local_ratio_vertex_edit: beta >= 1");
    std::map<int, Rational> w;
    for (int v : g.vertices()) w[v] = g.vertex_weight(v);
    auto X = local_ratio_recurse(g, std::move(w), r, beta, trace);
    return make_vertex_edit(g, {X.begin(), X.end()});
}

namespace {

// keep the arc out of the smaller endpoint when both directions round to 1
void push_arc(std::vector<Edge>& arcs, int u, int v, bool u_to_v,
              bool v_to_u) {
    if (u_to_v && v_to_u)
        arcs.emplace_back(std::min(u, v), std::max(u, v));
    else if (u_to_v)
        arcs.emplace_back(u, v);
    else
        arcs.emplace_back(v, u);
}

}  // namespace

DegenLpResult lp_vertex_edit(const Graph& g, int r, const Rational& eps,
                             double lp_tol) {
    if (!(eps > 0 && eps < Rational(1, 2)))
        throw input_error("lp_vertex_edit: need 0 < eps < 1/2");
    if (r < 0) throw input_error("lp_vertex_edit: r must be >= 0");
    DegenLpResult res;
    auto& lp = res.model;
    auto edges = g.edges();
    auto verts = g.vertices();
    std::map<Edge, std::pair<int, int>> x;  // edge -> (u->v, v->u) vars
    for (auto e : edges)
        x[e] = {lp.add_variable(), lp.add_variable()};
    std::map<int, int> y;
    std::map<int, double> obj;
    for (int v : verts) {
        y[v] = lp.add_variable();
        obj[y[v]] = to_double(g.vertex_weight(v));
    }
    lp.set_objective(LpDirection::minimize, obj);
    for (auto e : edges) {
        auto [fw, bw] = x[e];
        lp.add_constraint({{fw, 1.0}, {bw, 1.0}, {y[e.first], 1.0},
                           {y[e.second], 1.0}},
                          Relation::ge, 1.0);
    }
    for (int v : verts) {
        std::map<int, double> row;
        for (int u : g.neighbors(v)) {
            auto [fw, bw] = x[make_edge(v, u)];
            row[v < u ? fw : bw] = 1.0;  // the arc leaving v
        }
        if (!row.empty())
            lp.add_constraint(row, Relation::le, static_cast<double>(r));
    }
    res.solution = solve_lp(lp, lp_tol);
    if (res.solution.status != LpStatus::optimal)
        throw lp_error("DegenVertexEdit-LP did not solve (deleting all "
                       "vertices is always feasible)");

    double e = to_double(eps);
    std::vector<int> del;
    std::vector<char> dead(g.id_bound(), 0);
    for (int v : verts)
        if (res.solution[y[v]] >= e) {
            del.push_back(v);
            dead[v] = 1;
        }
    double thresh = (1.0 - 2.0 * e) / 2.0;
    for (auto ed : edges) {
        auto [u, v] = ed;
        if (dead[u] || dead[v]) continue;  // deleted arcs forced to zero
        auto [fw, bw] = x[ed];
        bool f = res.solution[fw] >= thresh;
        bool b = res.solution[bw] >= thresh;
        if (!f && !b)
            throw lp_error("rounding invariant failed: no direction reaches "
                           "(1-2eps)/2 on a surviving edge");
        push_arc(res.orientation.arcs, u, v, f, b);
    }
    std::sort(res.orientation.arcs.begin(), res.orientation.arcs.end());
    res.edits = make_vertex_edit(g, del);
    res.out_degree_bound = 2.0 * r / (1.0 - 2.0 * e);
    return res;
}

DegenLpResult lp_edge_edit(const Graph& g, int r, const Rational& eps,
                           double lp_tol) {
    if (!(eps > 0 && eps < 1))
        throw input_error("lp_edge_edit: need 0 < eps < 1");
    if (r < 0) throw input_error("lp_edge_edit: r must be >= 0");
    DegenLpResult res;
    auto& lp = res.model;
    auto edges = g.edges();
    std::map<Edge, std::pair<int, int>> x;
    std::map<Edge, int> z;
    std::map<int, double> obj;
    for (auto e : edges) {
        x[e] = {lp.add_variable(), lp.add_variable()};
        z[e] = lp.add_variable();
        obj[z[e]] = to_double(g.edge_weight(e.first, e.second));
    }
    lp.set_objective(LpDirection::minimize, obj);
    for (auto e : edges) {
        auto [fw, bw] = x[e];
        lp.add_constraint({{fw, 1.0}, {bw, 1.0}, {z[e], 1.0}}, Relation::ge,
                          1.0);
    }
    for (int v : g.vertices()) {
        std::map<int, double> row;
        for (int u : g.neighbors(v)) {
            auto [fw, bw] = x[make_edge(v, u)];
            row[v < u ? fw : bw] = 1.0;
        }
        if (!row.empty())
            lp.add_constraint(row, Relation::le, static_cast<double>(r));
    }
    res.solution = solve_lp(lp, lp_tol);
    if (res.solution.status != LpStatus::optimal)
        throw lp_error("DegenEdgeEdit-LP did not solve (deleting all edges "
                       "is always feasible)");

    double e = to_double(eps);
    std::vector<Edge> del;
    std::set<Edge> dead;
    for (auto ed : edges)
        if (res.solution[z[ed]] >= e) {
            del.push_back(ed);
            dead.insert(ed);
        }
    double thresh = (1.0 - e) / 2.0;
    for (auto ed : edges) {
        if (dead.count(ed)) continue;
        auto [u, v] = ed;
        auto [fw, bw] = x[ed];
        bool f = res.solution[fw] >= thresh;
        bool b = res.solution[bw] >= thresh;
        if (!f && !b)
            throw lp_error("rounding invariant failed: no direction reaches "
                           "(1-eps)/2 on a surviving edge");
        push_arc(res.orientation.arcs, u, v, f, b);
    }
    std::sort(res.orientation.arcs.begin(), res.orientation.arcs.end());
    res.edits = make_edge_edit(g, del);
    res.out_degree_bound = 2.0 * r / (1.0 - e);
    return res;
}

MarkState marked_edges(const Graph& g, const VertexOrdering& L, int r) {
    MarkState ms;
    ms.ordering = L;
    auto fd = forward_degrees(g, L);
    for (int v : g.vertices()) {
        if (fd[v] != r) continue;
        ms.marked_vertices.push_back(v);
        for (int u : g.neighbors(v))
            if (L.position[u] > L.position[v])
                ms.marked_edges.push_back(make_edge(v, u));
    }
    std::sort(ms.marked_edges.begin(), ms.marked_edges.end());
    return ms;
}

namespace {

long count_resolved(const std::vector<Edge>& before,
                    const std::vector<Edge>& after) {
    long resolved = 0;
    std::set<Edge> after_set(after.begin(), after.end());
    for (auto e : before) resolved += !after_set.count(e);
    return resolved;
}

}  // namespace

EditSet degen_reduce_by_one(const Graph& g, EditKind mode, ByOneTrace* trace) {
    auto first = degeneracy(g);
    const int r = first.degeneracy;
    if (r == 0)
        throw input_error("degen_reduce_by_one: already edgeless-degenerate");

    Graph cur = g;
    VertexOrdering prev = first.order;
    std::vector<int> del_v;
    std::vector<Edge> del_e;
    std::set<Edge> ever_unmarked;

    for (long iter = 0;; ++iter) {
        auto now = degeneracy(cur, &prev);
        if (now.degeneracy <= r - 1) break;  // ordering witnesses r-1
        MarkState ms = marked_edges(cur, now.order, r);
        // the first min-degree ordering must witness r with a marked vertex
        if (ms.marked_edges.empty())
            throw std::logic_error(
                "min-degree ordering witnessed r without a marked vertex");
        if (iter == 0 && trace) trace->m0 = ms.marked_edges.size();
        if (trace) {
            // an edge unmarked once must stay unmarked
            std::set<Edge> marked_now(ms.marked_edges.begin(),
                                      ms.marked_edges.end());
            for (auto e : ever_unmarked)
                if (marked_now.count(e)) trace->monotone = false;
            for (auto e : cur.edges())
                if (!marked_now.count(e)) ever_unmarked.insert(e);
            trace->states.push_back(ms);
        }

        long best_resolved = -1;
        int best_vertex = -1;
        Edge best_edge{-1, -1};
        auto consider = [&](const Graph& next, int v, Edge e) {
            auto next_order = degeneracy(next, &now.order);
            auto next_marks = marked_edges(next, next_order.order, r);
            long res = count_resolved(ms.marked_edges, next_marks.marked_edges);
            if (res > best_resolved) {
                best_resolved = res;
                best_vertex = v;
                best_edge = e;
            }
        };
        if (mode == EditKind::vertex) {
            for (int v : cur.vertices())
                consider(cur.delete_vertices({v}), v, {-1, -1});
        } else {
            for (auto e : cur.edges())
                consider(cur.delete_edges({e}), -1, e);
        }
        if (trace) trace->resolved.push_back(best_resolved);
        if (mode == EditKind::vertex) {
            del_v.push_back(best_vertex);
            cur = cur.delete_vertices({best_vertex});
        } else {
            del_e.push_back(best_edge);
            cur = cur.delete_edges({best_edge});
        }
        prev = now.order;
    }
    return mode == EditKind::vertex ? make_vertex_edit(g, del_v)
                                    : make_edge_edit(g, del_e);
}

EditSet degen_reduce_by_d(const Graph& g, int d, EditKind mode) {
    int r = degeneracy(g).degeneracy;
    if (d < 0 || d > r)
        throw input_error("degen_reduce_by_d: need 0 <= d <= degeneracy");
    Graph cur = g;
    std::vector<int> del_v;
    std::vector<Edge> del_e;
    for (int stage = 0; stage < d; ++stage) {
        auto x = degen_reduce_by_one(cur, mode);
        del_v.insert(del_v.end(), x.vertices.begin(), x.vertices.end());
        del_e.insert(del_e.end(), x.edges.begin(), x.edges.end());
        cur = apply_edits(cur, x);
    }
    return mode == EditKind::vertex ? make_vertex_edit(g, del_v)
                                    : make_edge_edit(g, del_e);
}

EditSet degen_reduce_to_r(const Graph& g, int r, DegenBaseEditor base,
                          EditKind mode) {
    if (r < 1) throw input_error("degen_reduce_to_r: r must be >= 1");
    Graph cur = g;
    std::vector<int> del_v;
    std::vector<Edge> del_e;
    auto absorb = [&](const EditSet& x) {
        del_v.insert(del_v.end(), x.vertices.begin(), x.vertices.end());
        del_e.insert(del_e.end(), x.edges.begin(), x.edges.end());
        cur = apply_edits(cur, x);
    };
    switch (base) {
        case DegenBaseEditor::local_ratio:
            if (mode != EditKind::vertex)
                throw input_error("local-ratio base edits vertices only");
            absorb(local_ratio_vertex_edit(cur, r, 4));
            break;
        case DegenBaseEditor::lp_vertex:
            if (mode != EditKind::vertex)
                throw input_error("lp-vertex base edits vertices only");
            absorb(lp_vertex_edit(cur, r, Rational(1, 6)).edits);
            break;
        case DegenBaseEditor::lp_edge:
            if (mode != EditKind::edge)
                throw input_error("lp-edge base edits edges only");
            absorb(lp_edge_edit(cur, r, Rational(1, 5)).edits);
            break;
    }
    while (degeneracy(cur).degeneracy > r)
        absorb(degen_reduce_by_one(cur, mode));
    return mode == EditKind::vertex ? make_vertex_edit(g, del_v)
                                    : make_edge_edit(g, del_e);
}

}  // namespace grest
