#include "grest/rounding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grest {

namespace {

// ---- nice tree decomposition -------------------------------------------

struct NiceNode {
    enum Kind { leaf, introduce, forget, join } kind = leaf;
    int vertex = -1;
    std::vector<int> bag;  // sorted
    int left = -1, right = -1;
};

struct NiceTree {
    std::vector<NiceNode> nodes;
    int root = -1;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

// forgets for vertices of `from` \ `to`, then introduces up to `to`;
// returns the top node index with bag == to
int transform_chain(NiceTree& t, int below, std::vector<int> from,
                    const std::vector<int>& to) {
    std::vector<int> drop, add;
    for (int v : from)
        if (!std::binary_search(to.begin(), to.end(), v)) drop.push_back(v);
    for (int v : to)
        if (!std::binary_search(from.begin(), from.end(), v)) add.push_back(v);
    int cur = below;
    std::vector<int> bag = from;
    for (int v : drop) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        NiceNode n;
        n.kind = NiceNode::forget;
        n.vertex = v;
        n.bag = bag;
        n.left = cur;
        cur = t.add(n);
    }
    for (int v : add) {
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        NiceNode n;
        n.kind = NiceNode::introduce;
        n.vertex = v;
        n.bag = bag;
        n.left = cur;
        cur = t.add(n);
    }
    return cur;
}

NiceTree make_nice(const Graph& g, const TreeDecomposition& td) {
    std::string why;
    if (!validate_decomposition(g, td, &why))
        throw input_error("nice conversion: invalid decomposition: " + why);
    NiceTree t;
    auto adj = td.bag_adjacency();
    auto build = [&](auto&& self, int b, int parent) -> int {
        std::vector<int> bag = td.bags[b];
        std::sort(bag.begin(), bag.end());
        std::vector<int> tops;
        for (int c : adj[b]) {
            if (c == parent) continue;
            int sub = self(self, c, b);
            std::vector<int> cbag = td.bags[c];
            std::sort(cbag.begin(), cbag.end());
            tops.push_back(transform_chain(t, sub, cbag, bag));
        }
        if (tops.empty()) {
            NiceNode lf;
            lf.kind = NiceNode::leaf;
            int cur = t.add(lf);
            return transform_chain(t, cur, {}, bag);
        }
        int cur = tops[0];
        for (size_t i = 1; i < tops.size(); ++i) {
            NiceNode j;
            j.kind = NiceNode::join;
            j.bag = bag;
            j.left = cur;
            j.right = static_cast<int>(tops[i]);
            cur = t.add(j);
        }
        return cur;
    };
    int top = build(build, td.root, -1);
    std::vector<int> rbag = td.bags[td.root];
    std::sort(rbag.begin(), rbag.end());
    t.root = transform_chain(t, top, rbag, {});

    // re-validate the nice tree as a decomposition of g
    TreeDecomposition check;
    check.bags.reserve(t.nodes.size());
    for (auto& n : t.nodes) check.bags.push_back(n.bag);
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        if (t.nodes[i].left >= 0)
            check.tree.push_back({static_cast<int>(i), t.nodes[i].left});
        if (t.nodes[i].right >= 0)
            check.tree.push_back({static_cast<int>(i), t.nodes[i].right});
    }
    check.root = t.root;
    if (!validate_decomposition(g, check, &why))
        throw std::logic_error("nice conversion broke the decomposition: " +
                               why);
    return t;
}

// ---- DP solvers over the nice tree --------------------------------------

using StateTable = std::map<unsigned, std::pair<long, std::set<int>>>;

void relax_max(StateTable& t, unsigned key, long val, std::set<int> sol) {
    auto it = t.find(key);
    if (it == t.end() || val > it->second.first)
        t[key] = {val, std::move(sol)};
}

void relax_min(StateTable& t, unsigned key, long val, std::set<int> sol) {
    auto it = t.find(key);
    if (it == t.end() || val < it->second.first)
        t[key] = {val, std::move(sol)};
}

int position_in(const std::vector<int>& bag, int v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    return it != bag.end() && *it == v ? static_cast<int>(it - bag.begin())
                                       : -1;
}

unsigned ipow3(int p) {
    static const unsigned table[16] = {1,      3,       9,       27,
                                       81,     243,     729,     2187,
                                       6561,   19683,   59049,   177147,
                                       531441, 1594323, 4782969, 14348907};
    return table[p];
}

StateTable dp_is(const Graph& g, const NiceTree& t, int node) {
    const NiceNode& n = t.nodes[node];
    StateTable out;
    switch (n.kind) {
        case NiceNode::leaf:
            out[0] = {0, {}};
            return out;
        case NiceNode::introduce: {
            auto below = dp_is(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            int vp = position_in(n.bag, n.vertex);
            for (auto& [key, entry] : below) {
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    if (key & (1u << i))
                        base |= 1u << position_in(n.bag, old_bag[i]);
                relax_max(out, base, entry.first, entry.second);
                bool ok = true;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    if ((key & (1u << i)) && g.has_edge(n.vertex, old_bag[i]))
                        ok = false;
                if (ok) {
                    auto sol = entry.second;
                    sol.insert(n.vertex);
                    relax_max(out, base | (1u << vp), entry.first + 1,
                              std::move(sol));
                }
            }
            return out;
        }
        case NiceNode::forget: {
            auto below = dp_is(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            for (auto& [key, entry] : below) {
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i) {
                    if (old_bag[i] == n.vertex) continue;
                    if (key & (1u << i))
                        base |= 1u << position_in(n.bag, old_bag[i]);
                }
                relax_max(out, base, entry.first, entry.second);
            }
            return out;
        }
        case NiceNode::join: {
            auto a = dp_is(g, t, n.left);
            auto b = dp_is(g, t, n.right);
            for (auto& [ka, ea] : a) {
                auto it = b.find(ka);
                if (it == b.end()) continue;
                std::set<int> sol = ea.second;
                sol.insert(it->second.second.begin(),
                           it->second.second.end());
                long size = static_cast<long>(sol.size());
                relax_max(out, ka, size, std::move(sol));
            }
            return out;
        }
    }
    return out;
}

StateTable dp_vc(const Graph& g, const NiceTree& t, int node) {
    const NiceNode& n = t.nodes[node];
    StateTable out;
    switch (n.kind) {
        case NiceNode::leaf:
            out[0] = {0, {}};
            return out;
        case NiceNode::introduce: {
            auto below = dp_vc(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            int vp = position_in(n.bag, n.vertex);
            for (auto& [key, entry] : below) {
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    if (key & (1u << i))
                        base |= 1u << position_in(n.bag, old_bag[i]);
                // v outside the cover: all its bag edges need the other end
                bool ok = true;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    if (g.has_edge(n.vertex, old_bag[i]) && !(key & (1u << i)))
                        ok = false;
                if (ok) relax_min(out, base, entry.first, entry.second);
                auto sol = entry.second;
                sol.insert(n.vertex);
                relax_min(out, base | (1u << vp), entry.first + 1,
                          std::move(sol));
            }
            return out;
        }
        case NiceNode::forget: {
            auto below = dp_vc(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            for (auto& [key, entry] : below) {
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i) {
                    if (old_bag[i] == n.vertex) continue;
                    if (key & (1u << i))
                        base |= 1u << position_in(n.bag, old_bag[i]);
                }
                relax_min(out, base, entry.first, entry.second);
            }
            return out;
        }
        case NiceNode::join: {
            auto a = dp_vc(g, t, n.left);
            auto b = dp_vc(g, t, n.right);
            for (auto& [ka, ea] : a) {
                auto it = b.find(ka);
                if (it == b.end()) continue;
                std::set<int> sol = ea.second;
                sol.insert(it->second.second.begin(),
                           it->second.second.end());
                long size = static_cast<long>(sol.size());
                relax_min(out, ka, size, std::move(sol));
            }
            return out;
        }
    }
    return out;
}

// DS states per bag vertex: 0 = in the set, 1 = dominated, 2 = not yet
StateTable dp_ds(const Graph& g, const NiceTree& t, int node) {
    const NiceNode& n = t.nodes[node];
    StateTable out;
    auto get = [](unsigned key, int pos) { return (key / ipow3(pos)) % 3; };
    switch (n.kind) {
        case NiceNode::leaf:
            out[0] = {0, {}};
            return out;
        case NiceNode::introduce: {
            auto below = dp_ds(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            int vp = position_in(n.bag, n.vertex);
            for (auto& [key, entry] : below) {
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    base += get(key, static_cast<int>(i)) *
                            ipow3(position_in(n.bag, old_bag[i]));
                // v joins the set: undominated bag neighbors become dominated
                {
                    unsigned k2 = base;
                    for (size_t i = 0; i < old_bag.size(); ++i) {
                        if (!g.has_edge(n.vertex, old_bag[i])) continue;
                        int p = position_in(n.bag, old_bag[i]);
                        if (get(k2, p) == 2) k2 -= ipow3(p);  // 2 -> 1
                    }
                    auto sol = entry.second;
                    sol.insert(n.vertex);
                    relax_min(out, k2, entry.first + 1, std::move(sol));
                }
                // v dominated now: needs a bag neighbor already in the set
                bool has_dominator = false;
                for (size_t i = 0; i < old_bag.size(); ++i)
                    if (g.has_edge(n.vertex, old_bag[i]) &&
                        get(key, static_cast<int>(i)) == 0)
                        has_dominator = true;
                if (has_dominator)
                    relax_min(out, base + 1 * ipow3(vp), entry.first,
                              entry.second);
                // v undecided
                relax_min(out, base + 2 * ipow3(vp), entry.first,
                          entry.second);
            }
            return out;
        }
        case NiceNode::forget: {
            auto below = dp_ds(g, t, n.left);
            const auto& old_bag = t.nodes[n.left].bag;
            int vp = position_in(old_bag, n.vertex);
            for (auto& [key, entry] : below) {
                if (get(key, vp) == 2) continue;  // cannot abandon it
                unsigned base = 0;
                for (size_t i = 0; i < old_bag.size(); ++i) {
                    if (static_cast<int>(i) == vp) continue;
                    base += get(key, static_cast<int>(i)) *
                            ipow3(position_in(n.bag, old_bag[i]));
                }
                relax_min(out, base, entry.first, entry.second);
            }
            return out;
        }
        case NiceNode::join: {
            auto a = dp_ds(g, t, n.left);
            auto b = dp_ds(g, t, n.right);
            const int w = static_cast<int>(n.bag.size());
            for (auto& [ka, ea] : a) {
                for (auto& [kb, eb] : b) {
                    unsigned key = 0;
                    bool ok = true;
                    for (int p = 0; p < w; ++p) {
                        unsigned sa = get(ka, p), sb = get(kb, p);
                        if ((sa == 0) != (sb == 0)) {
                            ok = false;
                            break;
                        }
                        unsigned s = sa == 0 ? 0
                                     : (sa == 1 || sb == 1) ? 1
                                                            : 2;
                        key += s * ipow3(p);
                    }
                    if (!ok) continue;
                    std::set<int> sol = ea.second;
                    sol.insert(eb.second.begin(), eb.second.end());
                    long size = static_cast<long>(sol.size());
                    relax_min(out, key, size, std::move(sol));
                }
            }
            return out;
        }
    }
    return out;
}

Solution greedy_is(const Graph& g, const VertexOrdering& order) {
    // color in reverse peeling order: each vertex sees only its forward
    // neighbors colored, so r+1 colors suffice; take the largest class
    std::map<int, int> color;
    int max_color = 0;
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
        int v = *it;
        std::set<int> used;
        for (int u : g.neighbors(v)) {
            auto cu = color.find(u);
            if (cu != color.end()) used.insert(cu->second);
        }
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
        max_color = std::max(max_color, c);
    }
    std::vector<std::vector<int>> classes(max_color + 1);
    for (auto& [v, c] : color) classes[c].push_back(v);
    Solution s;
    for (auto& cls : classes)
        if (cls.size() > s.vertices.size()) s.vertices = cls;
    std::sort(s.vertices.begin(), s.vertices.end());
    return s;
}

AnnotatedInstance prune_annotation(const Graph& g, const AnnotatedInstance& ann,
                                   const EditSet& x) {
    AnnotatedInstance pruned = ann;
    auto ball = closed_neighborhood(g, x.vertices, ann.ell);
    std::set<int> dead(ball.begin(), ball.end());
    std::vector<int> keep;
    for (int b : ann.annotated)
        if (!dead.count(b)) keep.push_back(b);
    pruned.annotated = keep;
    return pruned;
}

}  // namespace

Solution solve_on_class(ProblemId id, const Graph& g, SolverKind kind,
                        const TreeDecomposition* td,
                        const VertexOrdering* degeneracy_order,
                        const AnnotatedInstance* ann, const SolveConfig& cfg) {
    switch (kind) {
        case SolverKind::tree_dp: {
            if (!td) throw input_error("tree_dp needs a decomposition");
            if (id != ProblemId::IS && id != ProblemId::VC &&
                id != ProblemId::DS)
                throw input_error("tree_dp supports IS, VC and DS");
            if (id == ProblemId::DS && ann && ann->ell != 1)
                throw input_error("tree_dp supports DS at radius 1 only");
            if (td->width() + 1 > cfg.dp_width_cap)
                throw budget_error(
                    "dp_width_cap",
                    "decomposition width " + std::to_string(td->width()) +
                        " exceeds cap " + std::to_string(cfg.dp_width_cap));
            if (g.num_vertices() == 0) return {};
            NiceTree t = make_nice(g, *td);
            Solution s;
            if (id == ProblemId::IS) {
                auto table = dp_is(g, t, t.root);
                s.vertices = {table.at(0).second.begin(),
                              table.at(0).second.end()};
            } else if (id == ProblemId::VC) {
                auto table = dp_vc(g, t, t.root);
                s.vertices = {table.at(0).second.begin(),
                              table.at(0).second.end()};
            } else {
                auto table = dp_ds(g, t, t.root);
                s.vertices = {table.at(0).second.begin(),
                              table.at(0).second.end()};
            }
            std::string why;
            if (!is_feasible(id, g, s, ann, &why))
                throw std::logic_error(
                    "tree DP produced an infeasible solution: " + why);
            return s;
        }
        case SolverKind::degeneracy_greedy: {
            if (id != ProblemId::IS)
                throw input_error("the degeneracy greedy solves IS only");
            if (!degeneracy_order)
                throw input_error("degeneracy greedy needs an ordering");
            return greedy_is(g, *degeneracy_order);
        }
        case SolverKind::brute_force:
            return exact_opt(id, g, ann, cfg.brute_budget).witness;
    }
    throw input_error("unknown solver");
}

Solution lift(ProblemId id, EditOp op, const Solution& edited_solution,
              const EditSet& x, const Graph& g,
              const AnnotatedInstance* ann) {
    Graph edited = apply_edits(g, x);
    {
        std::string why;
        if (id == ProblemId::ADS) {
            if (!ann) throw input_error("ADS lift needs the annotation");
            AnnotatedInstance pruned = prune_annotation(g, *ann, x);
            if (!is_feasible(id, edited, edited_solution, &pruned, &why))
                throw input_error("lift: infeasible input solution: " + why);
        } else if (!is_feasible(id, edited, edited_solution, ann, &why)) {
            throw input_error("lift: infeasible input solution: " + why);
        }
    }
    Solution s = edited_solution;
    switch (id) {
        case ProblemId::IS:
            if (op == EditOp::vertex_deletion) break;  // identity
            if (op == EditOp::edge_deletion) {
                // drop the larger endpoint of every restored conflict edge
                std::set<int> in(s.vertices.begin(), s.vertices.end());
                for (auto [u, v] : x.edges)
                    if (in.count(u) && in.count(v)) in.erase(std::max(u, v));
                s.vertices = {in.begin(), in.end()};
                break;
            }
            throw input_error("IS lift: unsupported edit operation");
        case ProblemId::VC:
        case ProblemId::FVS: {
            if (op != EditOp::vertex_deletion)
                throw input_error("lift: unsupported edit operation");
            std::set<int> in(s.vertices.begin(), s.vertices.end());
            in.insert(x.vertices.begin(), x.vertices.end());
            s.vertices = {in.begin(), in.end()};
            break;
        }
        case ProblemId::MMM: {
            if (op != EditOp::vertex_deletion)
                throw input_error("lift: unsupported edit operation");
            // extend greedily until maximal; additions touch X only
            std::set<int> matched;
            for (auto [u, v] : s.edges) {
                matched.insert(u);
                matched.insert(v);
            }
            for (auto [u, v] : g.edges())
                if (!matched.count(u) && !matched.count(v)) {
                    s.edges.push_back({u, v});
                    matched.insert(u);
                    matched.insert(v);
                }
            std::sort(s.edges.begin(), s.edges.end());
            break;
        }
        case ProblemId::CRN: {
            if (op != EditOp::vertex_deletion)
                throw input_error("lift: unsupported edit operation");
            int fresh = 0;
            for (auto& [v, c] : s.coloring) fresh = std::max(fresh, c + 1);
            for (int v : x.vertices) s.coloring[v] = fresh++;
            break;
        }
        case ProblemId::DS:
            if (op != EditOp::edge_deletion)
                throw input_error("lift: unsupported edit operation");
            break;  // a dominating set of g minus edges dominates g
        case ProblemId::ADS: {
            if (op != EditOp::vertex_star_deletion)
                throw input_error("lift: unsupported edit operation");
            std::set<int> in(s.vertices.begin(), s.vertices.end());
            in.insert(x.vertices.begin(), x.vertices.end());
            s.vertices = {in.begin(), in.end()};
            break;
        }
        case ProblemId::EDS: {
            if (op != EditOp::edge_deletion)
                throw input_error("lift: unsupported edit operation");
            std::set<Edge> in(s.edges.begin(), s.edges.end());
            in.insert(x.edges.begin(), x.edges.end());
            s.edges = {in.begin(), in.end()};
            break;
        }
        case ProblemId::MaxCut:
            if (op != EditOp::edge_deletion)
                throw input_error("lift: unsupported edit operation");
            break;  // the same side set cuts at least as many edges in g
    }
    std::string why;
    if (!is_feasible(id, g, s, ann, &why))
        throw std::logic_error("lift produced an infeasible solution: " + why);
    return s;
}

double rounding_factor(bool maximize, double rho, int c, int cprime,
                       double alphadelta) {
    double shift = (c + cprime * rho) * alphadelta;
    return maximize ? rho - shift : rho + shift;
}

RoundingReport structural_round(const Graph& g, const Editor& editor,
                                ProblemId problem, EditOp op,
                                const AnnotatedInstance* ann,
                                const PipelineConfig& cfg) {
    const auto& spec = problem_spec(problem);
    auto cit = spec.constants.find(op);
    if (cit == spec.constants.end())
        throw input_error(problem_name(problem) + " is not registered for " +
                          edit_op_name(op) + " deletion");
    RoundingReport rep;
    rep.cprime = cit->second.first;
    rep.c = cit->second.second;
    rep.rho = cfg.rho;

    EditSet x;
    try {
        x = editor(g);
    } catch (const budget_error&) {
        throw;
    } catch (const std::exception& e) {
        throw input_error(std::string("edit stage failed: ") + e.what());
    }
    bool expect_edges = op == EditOp::edge_deletion;
    if (expect_edges != (x.kind == EditKind::edge))
        throw input_error("editor produced the wrong edit kind");
    rep.edits = x;
    Graph edited = apply_edits(g, x);

    AnnotatedInstance pruned;
    const AnnotatedInstance* solve_ann = ann;
    if (problem == ProblemId::ADS) {
        if (!ann) throw input_error("ADS pipeline needs the annotation");
        pruned = prune_annotation(g, *ann, x);
        solve_ann = &pruned;
    }

    std::optional<TreeDecomposition> td;
    std::optional<VertexOrdering> order;
    const TreeDecomposition* tdp = nullptr;
    const VertexOrdering* orderp = nullptr;
    if (cfg.solver == SolverKind::tree_dp) {
        td = edited.num_vertices() <= cfg.oracle_budget.max_vertices
                 ? exact_tree_decomposition(edited, cfg.oracle_budget)
                 : tree_decomposition(edited);
        tdp = &*td;
    }
    if (cfg.solver == SolverKind::degeneracy_greedy) {
        order = degeneracy(edited).order;
        orderp = &*order;
    }
    Solution sprime;
    try {
        sprime = solve_on_class(problem, edited, cfg.solver, tdp, orderp,
                                solve_ann, cfg.solve);
    } catch (const budget_error&) {
        throw;
    } catch (const std::exception& e) {
        throw input_error(std::string("solve stage failed: ") + e.what());
    }
    rep.edited_solution = sprime;
    rep.edited_cost = solution_cost(problem, edited, sprime);

    rep.lifted_solution = lift(problem, op, sprime, x, g, ann);
    rep.lifted_cost = solution_cost(problem, g, rep.lifted_solution);

    long slack = rep.c * static_cast<long>(x.size());
    rep.cost_relation_holds = spec.maximize
                                  ? rep.lifted_cost >= rep.edited_cost - slack
                                  : rep.lifted_cost <= rep.edited_cost + slack;

    if (cfg.measure_against_oracles) {
        try {
            if (cfg.edit_target) {
                auto kind = expect_edges ? EditKind::edge : EditKind::vertex;
                rep.opt_edit = exact_min_edit_size(g, *cfg.edit_target, kind,
                                                   cfg.oracle_budget);
                if (*rep.opt_edit > 0)
                    rep.alpha_hat = static_cast<double>(x.size()) /
                                    static_cast<double>(*rep.opt_edit);
            }
            rep.opt_problem =
                exact_opt(problem, g, ann, cfg.oracle_budget).cost;
            if (*rep.opt_problem > 0) {
                rep.alphadelta_hat = static_cast<double>(x.size()) /
                                     static_cast<double>(*rep.opt_problem);
                rep.implied_factor = rounding_factor(
                    spec.maximize, rep.rho, rep.c, rep.cprime,
                    *rep.alphadelta_hat);
                rep.factor_conditional = false;
            }
        } catch (const budget_error&) {
            // past the oracle range the factor stays conditional
        }
    }
    return rep;
}

}  // namespace grest
