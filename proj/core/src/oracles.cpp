#include "grest/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "grest/combinatorial_edit.hpp"
#include "grest/instances.hpp"
#include "grest/wcol.hpp"

namespace grest {

namespace {

// next k-combination of indices in lexicographic order
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SubsetCounter {
    long used = 0;
    long cap;
    explicit SubsetCounter(long c) : cap(c) {}
    void tick(const char* who) {
        if (++used > cap) throw budget_error("max_subsets", who);
    }
};

}  // namespace

bool satisfies(const Graph& g, const EditTarget& t) {
    switch (t.predicate) {
        case EditPredicate::degeneracy_le:
            return degeneracy(g).degeneracy <= t.value;
        case EditPredicate::maxdeg_le:
            return g.max_degree() <= t.value;
        case EditPredicate::star_forest:
            return is_star_forest(g);
        case EditPredicate::tw_le:
            return exact_treewidth(g) <= t.value;
        case EditPredicate::wcol_le:
            return wcol_at_most(g, t.radius, t.value, 10);
    }
    return false;
}

EditSet exact_min_edit(const Graph& g, const EditTarget& target, EditKind kind,
                       const OracleBudget& budget) {
    if (kind == EditKind::vertex && g.num_vertices() > budget.max_vertices)
        throw budget_error("max_vertices", "exact_min_edit vertex mode");
    if (kind == EditKind::edge && g.num_edges() > budget.max_edges &&
        target.predicate != EditPredicate::degeneracy_le)
        throw budget_error("max_edges", "exact_min_edit edge mode");

    SubsetCounter counter(budget.max_subsets);
    const bool vertex = kind == EditKind::vertex;
    std::vector<int> vs = g.vertices();
    std::vector<Edge> es = g.edges();
    const int N = vertex ? static_cast<int>(vs.size())
                         : static_cast<int>(es.size());

    bool uniform = true;
    {
        std::optional<Rational> w0;
        for (int i = 0; i < N; ++i) {
            Rational w = vertex ? g.vertex_weight(vs[i])
                                : g.edge_weight(es[i].first, es[i].second);
            if (!w0)
                w0 = w;
            else if (w != *w0)
                uniform = false;
        }
    }

    auto try_subset = [&](const std::vector<int>& idx) {
        counter.tick("exact_min_edit");
        EditSet e;
        if (vertex) {
            std::vector<int> del;
            for (int i : idx) del.push_back(vs[i]);
            e = make_vertex_edit(g, del);
        } else {
            std::vector<Edge> del;
            for (int i : idx) del.push_back(es[i]);
            e = make_edge_edit(g, del);
        }
        return std::make_pair(satisfies(apply_edits(g, e), target), e);
    };

    std::optional<EditSet> best;
    for (int k = 0; k <= N; ++k) {
        if (best && uniform) break;  // first hit is optimal under unit weights
        if (best && !uniform) {
            // cheapest possible k-subset cannot beat the incumbent
            std::vector<Rational> ws;
            for (int i = 0; i < N; ++i)
                ws.push_back(vertex ? g.vertex_weight(vs[i])
                                    : g.edge_weight(es[i].first,
                                                    es[i].second));
            std::sort(ws.begin(), ws.end());
            Rational low = 0;
            for (int i = 0; i < k; ++i) low += ws[i];
            if (low >= best->total_weight) break;
        }
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            auto [ok, e] = try_subset(idx);
            if (ok && (!best || e.total_weight < best->total_weight)) {
                best = e;
                if (uniform) break;
            }
            if (k == 0 || !next_combination(idx, N)) break;
        }
    }
    if (!best)
        throw input_error("exact_min_edit: no feasible edit set exists");
    return *best;
}

long exact_min_edit_size(const Graph& g, const EditTarget& target,
                         EditKind kind, const OracleBudget& budget) {
    return static_cast<long>(exact_min_edit(g, target, kind, budget).size());
}

namespace {

struct EliminationContext {
    const Graph& g;
    std::vector<int> verts;
    std::vector<int> index;  // id -> compact index

    explicit EliminationContext(const Graph& g_) : g(g_), verts(g_.vertices()) {
        index.assign(g.id_bound(), -1);
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    }

    // number of vertices outside S∪{v} reachable from v through S only
    int reach(unsigned mask, int vi) const {
        const int n = static_cast<int>(verts.size());
        std::vector<char> seen(n, 0);
        std::vector<int> stack{vi};
        seen[vi] = 1;
        int count = 0;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(verts[a])) {
                int b = index[u];
                if (seen[b]) continue;
                seen[b] = 1;
                if (mask & (1u << b))
                    stack.push_back(b);  // pass through eliminated vertices
                else
                    ++count;
            }
        }
        return count;
    }
};

}  // namespace

int exact_treewidth(const Graph& g, const OracleBudget& budget) {
    EliminationContext ctx(g);
    const int n = static_cast<int>(ctx.verts.size());
    if (n > budget.max_vertices)
        throw budget_error("max_vertices",
                           "exact_treewidth on n=" + std::to_string(n));
    if (n == 0) return 0;
    std::vector<int> dp(1u << n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int best = 1 << 20;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            unsigned prev = mask ^ (1u << v);
            int w = std::max(dp[prev], ctx.reach(prev, v));
            best = std::min(best, w);
        }
        dp[mask] = best;
    }
    return dp[(1u << n) - 1];
}

int exact_treewidth_permutations(const Graph& g, const OracleBudget& budget) {
    EliminationContext ctx(g);
    const int n = static_cast<int>(ctx.verts.size());
    if (n > 8)
        throw budget_error("max_vertices",
                           "permutation treewidth on n=" + std::to_string(n));
    if (n == 0) return 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n - 1;
    do {
        unsigned mask = 0;
        int width = 0;
        for (int i = 0; i < n && width < best; ++i) {
            width = std::max(width, ctx.reach(mask, perm[i]));
            mask |= 1u << perm[i];
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TreeDecomposition exact_tree_decomposition(const Graph& g,
                                           const OracleBudget& budget) {
    const auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > budget.max_vertices)
        throw budget_error("max_vertices", "exact_tree_decomposition");
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    // DP identical to exact_treewidth, with choices recorded
    EliminationContext ctx(g);
    std::vector<int> dp(1u << n, 0);
    std::vector<int> choice(1u << n, -1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int best = 1 << 20;
        int who = -1;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            unsigned prev = mask ^ (1u << v);
            int w = std::max(dp[prev], ctx.reach(prev, v));
            if (w < best) {
                best = w;
                who = v;
            }
        }
        dp[mask] = best;
        choice[mask] = who;
    }
    // elimination order: position i = i-th eliminated
    std::vector<int> order(n);
    unsigned mask = (1u << n) - 1;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[mask];
        mask ^= 1u << choice[mask];
    }
    // simulate elimination on the fill graph
    std::vector<std::set<int>> fill(n);
    std::vector<int> index(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    for (auto [u, v] : g.edges()) {
        fill[index[u]].insert(index[v]);
        fill[index[v]].insert(index[u]);
    }
    std::vector<int> elim_pos(n);
    for (int i = 0; i < n; ++i) elim_pos[order[i]] = i;
    std::vector<std::vector<int>> higher(n);  // fill neighbors after v
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        for (int u : fill[v])
            if (elim_pos[u] > i) higher[v].push_back(u);
        for (int a : higher[v])
            for (int b : higher[v])
                if (a != b) fill[a].insert(b);
    }
    // clique-tree construction: bag(v) = {v} ∪ higher(v); parent = bag of
    // the earliest-eliminated member of higher(v)
    td.bags.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        td.bags[i].push_back(verts[v]);
        for (int u : higher[v]) td.bags[i].push_back(verts[u]);
        std::sort(td.bags[i].begin(), td.bags[i].end());
    }
    td.root = n - 1;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (higher[v].empty()) {
            if (i != n - 1) td.tree.push_back({i, n - 1});
            continue;
        }
        int parent = n;
        for (int u : higher[v]) parent = std::min(parent, elim_pos[u]);
        td.tree.push_back({i, parent});
    }
    return td;
}

int exact_clique_number(const Graph& g, const OracleBudget& budget) {
    auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 30)
        throw budget_error("max_vertices",
                           "exact_clique_number on n=" + std::to_string(n));
    if (n == 0) return 0;
    std::vector<unsigned long long> adj(n, 0);
    std::vector<int> index(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    for (auto [u, v] : g.edges()) {
        adj[index[u]] |= 1ull << index[v];
        adj[index[v]] |= 1ull << index[u];
    }
    int best = 0;
    // branch on candidates in id order, greedy bound
    auto dfs = [&](auto&& self, unsigned long long cand, int size) -> void {
        if (size + __builtin_popcountll(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = __builtin_ctzll(cand);
        // branch: take v
        self(self, cand & adj[v], size + 1);
        // or skip v
        self(self, cand & ~(1ull << v), size);
    };
    dfs(dfs, (1ull << n) - 1, 0);
    return best;
}

int exact_wcol(const Graph& g, int c, const OracleBudget& budget) {
    return wcol_exact(g, c, std::min(budget.max_vertices, 10));
}

ExactOpt exact_opt(ProblemId id, const Graph& g, const AnnotatedInstance* ann,
                   const OracleBudget& budget) {
    auto verts = g.vertices();
    auto es = g.edges();
    const int n = static_cast<int>(verts.size());
    const int m = static_cast<int>(es.size());
    ExactOpt out;
    bool maximize = problem_spec(id).maximize;

    auto vertex_subset_scan = [&]() {
        if (n > budget.max_vertices)
            throw budget_error("max_vertices", "exact_opt(" +
                                                   problem_name(id) + ")");
        std::optional<long> best;
        Solution best_sol;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Solution s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.vertices.push_back(verts[i]);
            if (!is_feasible(id, g, s, ann)) continue;
            long c = solution_cost(id, g, s);
            if (!best || (maximize ? c > *best : c < *best)) {
                best = c;
                best_sol = s;
            }
        }
        if (!best) throw input_error("exact_opt: no feasible solution");
        out.cost = *best;
        out.witness = best_sol;
    };

    switch (id) {
        case ProblemId::IS:
        case ProblemId::VC:
        case ProblemId::FVS:
        case ProblemId::DS:
        case ProblemId::ADS:
        case ProblemId::MaxCut:
            vertex_subset_scan();
            return out;
        case ProblemId::MMM:
        case ProblemId::EDS: {
            if (m > budget.max_edges)
                throw budget_error("max_edges", "exact_opt(" +
                                                    problem_name(id) + ")");
            // minimum problems: ascending size, first feasible wins
            for (int k = 0; k <= m; ++k) {
                std::vector<int> idx(k);
                std::iota(idx.begin(), idx.end(), 0);
                bool more = true;
                while (more) {
                    Solution s;
                    for (int i : idx) s.edges.push_back(es[i]);
                    if (is_feasible(id, g, s, ann)) {
                        out.cost = k;
                        out.witness = s;
                        return out;
                    }
                    if (k == 0) break;
                    more = next_combination(idx, m);
                }
            }
            throw input_error("exact_opt: no feasible solution");
        }
        case ProblemId::CRN: {
            if (n > budget.max_vertices)
                throw budget_error("max_vertices", "exact_opt(CRN)");
            if (n == 0) {
                out.cost = 0;
                return out;
            }
            for (int k = 1; k <= n; ++k) {
                std::map<int, int> coloring;
                auto color = [&](auto&& self, size_t i) -> bool {
                    if (i == verts.size()) return true;
                    int v = verts[i];
                    for (int c = 0; c < k; ++c) {
                        bool ok = true;
                        for (int u : g.neighbors(v)) {
                            auto it = coloring.find(u);
                            if (it != coloring.end() && it->second == c)
                                ok = false;
                        }
                        if (!ok) continue;
                        coloring[v] = c;
                        if (self(self, i + 1)) return true;
                        coloring.erase(v);
                    }
                    return false;
                };
                if (color(color, 0)) {
                    out.cost = k;
                    out.witness.coloring = coloring;
                    return out;
                }
            }
            throw input_error("exact_opt: coloring search failed");
        }
    }
    throw input_error("exact_opt: unhandled problem");
}

std::vector<int> exact_set_cover(const SetCoverInstance& sc,
                                 const OracleBudget& budget) {
    sc.validate();
    const int f = static_cast<int>(sc.sets.size());
    if (f > 22) throw budget_error("max_subsets", "exact_set_cover");
    SubsetCounter counter(budget.max_subsets);
    for (int k = 0; k <= f; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more) {
            counter.tick("exact_set_cover");
            if (sc.covers(idx)) return idx;
            if (k == 0) break;
            more = next_combination(idx, f);
        }
    }
    throw input_error("set cover instance has no cover");
}

std::vector<int> exact_hitting_set(const std::vector<std::vector<int>>& sets,
                                   int ground_size,
                                   const OracleBudget& budget) {
    SubsetCounter counter(budget.max_subsets);
    for (int k = 0; k <= ground_size; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more) {
            counter.tick("exact_hitting_set");
            std::vector<char> in(ground_size, 0);
            for (int i : idx) in[i] = 1;
            bool ok = true;
            for (const auto& s : sets) {
                bool hit = false;
                for (int e : s) hit |= in[e];
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (ok) return idx;
            if (k == 0) break;
            more = next_combination(idx, ground_size);
        }
    }
    throw input_error("hitting set instance has an empty occurrence");
}

std::vector<int> exact_min_separator(const Graph& g, const std::vector<int>& W,
                                     const Rational& c,
                                     const OracleBudget& budget) {
    SubsetCounter counter(budget.max_subsets);
    auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more) {
            counter.tick("exact_min_separator");
            std::vector<int> S;
            for (int i : idx) S.push_back(verts[i]);
            if (is_valid_separator(g, W, c, S)) return S;
            if (k == 0) break;
            more = next_combination(idx, n);
        }
    }
    throw input_error("no separator found (impossible: V always works)");
}

int exact_sep_number(const Graph& g, const Rational& c,
                     const OracleBudget& budget) {
    auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 8) throw budget_error("max_vertices", "exact_sep_number");
    int worst = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> W;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) W.push_back(verts[i]);
        worst = std::max(
            worst,
            static_cast<int>(exact_min_separator(g, W, c, budget).size()));
    }
    return worst;
}

}  // namespace grest
