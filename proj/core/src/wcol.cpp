#include "grest/wcol.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace grest {

namespace {

// BFS from source, depth <= c, restricted to vertices with allowed[v] != 0.
std::vector<int> bounded_reach(const Graph& g, int source, int c,
                               const std::vector<char>& allowed) {
    std::vector<int> dist(g.id_bound(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    std::vector<int> out{source};
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == c) continue;
        for (int u : g.neighbors(v)) {
            if (!allowed[u] || dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            q.push(u);
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace

WcolScore wcol_score(const Graph& g, const VertexOrdering& L, int c) {
    if (c < 1) throw input_error("wcol_score: c must be >= 1");
    WcolScore s;
    s.radius = c;
    s.reach_size.assign(g.id_bound(), 0);
    s.reach.assign(g.id_bound(), {});
    std::vector<char> allowed(g.id_bound(), 0);
    for (int v : g.vertices()) {
        if (L.position[v] < 0)
            throw input_error("wcol_score: ordering misses vertex " +
                              std::to_string(v));
    }
    for (int v : g.vertices()) {
        // vertices allowed on a path witnessing reach of v: rank >= rank(v)
        for (int u : g.vertices()) allowed[u] = L.position[u] >= L.position[v];
        for (int u : bounded_reach(g, v, c, allowed)) {
            s.reach[u].push_back(v);
            ++s.reach_size[u];
        }
    }
    for (int v : g.vertices()) {
        std::sort(s.reach[v].begin(), s.reach[v].end());
        s.score = std::max(s.score, s.reach_size[v]);
    }
    return s;
}

namespace {

// DFS over "pick the first remaining vertex". When v is placed first of the
// remaining set R, it lands in the weak-reach set of every u in R within
// distance c inside G[R]; those counts never decrease afterwards.
struct WcolSearch {
    const Graph& g;
    int c;
    int bound;  // prune when any count would exceed this
    std::vector<char> remaining;
    std::vector<int> count;
    int best = -1;  // best completed score (exact mode)
    bool decision = false;
    bool found = false;

    WcolSearch(const Graph& g_, int c_) : g(g_), c(c_) {}

    void dfs(int left, int running_max) {
        if (decision && found) return;
        if (left == 0) {
            if (decision)
                found = true;
            else if (best < 0 || running_max < best)
                best = running_max;
            return;
        }
        for (int v = 0; v < g.id_bound(); ++v) {
            if (!remaining[v]) continue;
            auto reached = bounded_reach(g, v, c, remaining);
            bool ok = true;
            for (int u : reached)
                if (count[u] + 1 > bound) {
                    ok = false;
                    break;
                }
            int new_max = running_max;
            if (ok) {
                for (int u : reached) new_max = std::max(new_max, ++count[u]);
                if (!decision && best >= 0 && new_max >= best)
                    ok = false;  // cannot improve the minimum
                if (ok) {
                    remaining[v] = 0;
                    dfs(left - 1, new_max);
                    remaining[v] = 1;
                }
                for (int u : reached) --count[u];
            }
            if (decision && found) return;
        }
    }
};

}  // namespace

int wcol_exact(const Graph& g, int c, int max_n) {
    if (c < 1) throw input_error("wcol_exact: c must be >= 1");
    if (g.num_vertices() > max_n)
        throw budget_error("max_n", "wcol_exact on n=" +
                                        std::to_string(g.num_vertices()));
    if (g.num_vertices() == 0) return 0;
    // any ordering is an upper bound; start from the degeneracy ordering
    int ub = wcol_score(g, degeneracy(g).order, c).score;
    WcolSearch s(g, c);
    s.remaining.assign(g.id_bound(), 0);
    for (int v : g.vertices()) s.remaining[v] = 1;
    s.count.assign(g.id_bound(), 0);
    s.best = ub;
    s.bound = ub;  // minima above the witness are irrelevant
    s.dfs(g.num_vertices(), 0);
    return s.best;
}

bool wcol_at_most(const Graph& g, int c, int k, int max_n) {
    if (c < 1) throw input_error("wcol_at_most: c must be >= 1");
    if (g.num_vertices() > max_n)
        throw budget_error("max_n", "wcol_at_most on n=" +
                                        std::to_string(g.num_vertices()));
    if (g.num_vertices() == 0) return true;
    if (k < 1) return false;  // reach sets always include the vertex itself
    if (wcol_score(g, degeneracy(g).order, c).score <= k) return true;
    WcolSearch s(g, c);
    s.decision = true;
    s.bound = k;
    s.remaining.assign(g.id_bound(), 0);
    for (int v : g.vertices()) s.remaining[v] = 1;
    s.count.assign(g.id_bound(), 0);
    s.dfs(g.num_vertices(), 0);
    return s.found;
}

namespace {

std::vector<std::vector<int>> enumerate_paths(const Graph& g, int c) {
    // simple paths with 1..c edges, canonicalized front() < back()
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(g.id_bound(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (cur.size() >= 2 && cur.front() < cur.back())
            out.push_back(cur);
        if (static_cast<int>(cur.size()) == c + 1) return;
        for (int u : g.neighbors(v)) {
            if (used[u]) continue;
            used[u] = 1;
            cur.push_back(u);
            self(self, u);
            cur.pop_back();
            used[u] = 0;
        }
    };
    for (int s : g.vertices()) {
        used[s] = 1;
        cur = {s};
        dfs(dfs, s);
        used[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WcLp build_wc_lp(const Graph& g, int c, int k, bool edge_mode,
                 const WcEditConfig& cfg) {
    if (c < 1) throw input_error("build_wc_lp: c must be >= 1");
    if (c > cfg.path_cap)
        throw budget_error("path_cap",
                           "radius " + std::to_string(c) + " exceeds cap " +
                               std::to_string(cfg.path_cap));
    if (k < 1) throw input_error("build_wc_lp: k must be >= 1");

    WcLp M;
    M.radius = c;
    M.target = k;
    M.edge_mode = edge_mode;
    M.verts = g.vertices();
    const int n = static_cast<int>(M.verts.size());
    std::vector<int> vi(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) vi[M.verts[i]] = i;

    auto& lp = M.lp;
    M.x_var.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) M.x_var[a][b] = lp.add_variable();
    M.p_var.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) M.p_var[a][b] = lp.add_variable();

    M.paths = enumerate_paths(g, c);
    M.y_var.resize(M.paths.size());
    for (size_t t = 0; t < M.paths.size(); ++t) {
        M.y_var[t].resize(M.paths[t].size());
        for (size_t j = 0; j < M.paths[t].size(); ++j)
            M.y_var[t][j] = lp.add_variable();
    }

    std::map<int, double> objective;
    if (edge_mode) {
        M.z_edges = g.edges();
        for (auto e : M.z_edges) {
            int z = lp.add_variable(0.0, 1.0);
            M.z_var.push_back(z);
            objective[z] = to_double(g.edge_weight(e.first, e.second));
        }
    } else {
        M.z_vertex_var.assign(g.id_bound(), -1);
        for (int v : M.verts) {
            int z = lp.add_variable(0.0, 1.0);
            M.z_vertex_var[v] = z;
            objective[z] = to_double(g.vertex_weight(v));
        }
    }
    lp.set_objective(LpDirection::minimize, objective);

    // (1) a vertex cannot appear both before and after another
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            lp.add_constraint({{M.x_var[a][b], 1.0}, {M.x_var[b][a], 1.0}},
                              Relation::ge, 1.0);
    // (2) transitivity, relaxed (forward cycles may appear after rounding)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                if (a == b || b == d || a == d) continue;
                lp.add_constraint({{M.x_var[a][d], 1.0},
                                   {M.x_var[a][b], -1.0},
                                   {M.x_var[b][d], -1.0}},
                                  Relation::le, 0.0);
            }
    // (3) a path vertex ordered before another cannot be the path's last
    // (4) some path vertex is last
    for (size_t t = 0; t < M.paths.size(); ++t) {
        const auto& T = M.paths[t];
        std::map<int, double> cover;
        for (size_t j = 0; j < T.size(); ++j) {
            cover[M.y_var[t][j]] = 1.0;
            for (size_t i = 0; i < T.size(); ++i) {
                if (i == j) continue;
                lp.add_constraint({{M.y_var[t][j], 1.0},
                                   {M.x_var[vi[T[i]]][vi[T[j]]], -1.0}},
                                  Relation::le, 0.0);
            }
        }
        lp.add_constraint(cover, Relation::ge, 1.0);
    }
    // (5) an alive last-of-path witness forces reachability
    std::map<Edge, int> edge_z;
    for (size_t e = 0; e < M.z_edges.size(); ++e)
        edge_z[M.z_edges[e]] = M.z_var[e];
    for (size_t t = 0; t < M.paths.size(); ++t) {
        const auto& T = M.paths[t];
        int u = T.front(), v = T.back();
        std::map<int, double> base;
        if (edge_mode) {
            for (size_t j = 0; j + 1 < T.size(); ++j)
                base[edge_z[make_edge(T[j], T[j + 1])]] += 1.0;
        } else {
            for (int p : T) base[M.z_vertex_var[p]] += 1.0;
        }
        for (int side = 0; side < 2; ++side) {
            int from = side == 0 ? u : v;
            int last = side == 0 ? v : u;
            size_t last_pos = side == 0 ? T.size() - 1 : 0;
            std::map<int, double> row = base;
            row[M.p_var[vi[from]][vi[last]]] += 1.0;
            row[M.y_var[t][last_pos]] += -1.0;
            lp.add_constraint(row, Relation::ge, 0.0);
        }
    }
    // (6) per-source reachability budget; the self pair is folded into the
    // right-hand side so the convention matches wcol's self-inclusive sets
    for (int a = 0; a < n; ++a) {
        std::map<int, double> row;
        for (int b = 0; b < n; ++b)
            if (a != b) row[M.p_var[a][b]] = 1.0;
        lp.add_constraint(row, Relation::le, static_cast<double>(k - 1));
    }
    return M;
}

namespace {

WcRounded round_wc(const WcLp& M, const LpSolution& sol, const Graph& g,
                   double eps) {
    const int n = static_cast<int>(M.verts.size());
    // slack absorbs solver tolerance so a y at the threshold never loses
    // its supporting x to the last floating-point bit
    double thresh = 1.0 / M.radius - 1e-6;
    WcRounded r;
    r.lp_objective = sol.objective;

    // step 1 + step 3: z up above eps, down otherwise
    std::vector<char> z_hat;
    if (M.edge_mode) {
        for (size_t e = 0; e < M.z_edges.size(); ++e)
            z_hat.push_back(sol[M.z_var[e]] > eps ? 1 : 0);
    } else {
        for (int v : M.verts)
            z_hat.push_back(sol[M.z_vertex_var[v]] > eps ? 1 : 0);
    }
    r.z_hat = z_hat;

    // step 2: x, y at the 1/c threshold
    r.x_hat.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) r.x_hat[a][b] = sol[M.x_var[a][b]] >= thresh ? 1 : 0;

    // edit set and its exact cost
    if (M.edge_mode) {
        std::vector<Edge> del;
        for (size_t e = 0; e < M.z_edges.size(); ++e)
            if (z_hat[e]) del.push_back(M.z_edges[e]);
        r.edits = make_edge_edit(g, del);
    } else {
        std::vector<int> del;
        for (int i = 0; i < n; ++i)
            if (z_hat[i]) del.push_back(M.verts[i]);
        r.edits = make_vertex_edit(g, del);
    }
    r.rounded_cost = r.edits.total_weight;

    // ordering over the survivors: most successors first, id tie-break
    Graph after = apply_edits(g, r.edits);
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int a = 0; a < n; ++a) {
        if (!after.is_live(M.verts[a])) continue;
        int succ = 0;
        for (int b = 0; b < n; ++b) succ += a != b && r.x_hat[a][b];
        keyed.push_back({{-succ, M.verts[a]}, M.verts[a]});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order;
    for (auto& kv : keyed) order.push_back(kv.second);
    r.extracted_order = make_ordering(after, order);

    // y: the 1/c threshold, plus each path's latest surviving vertex in the
    // extracted ordering. The threshold alone cannot cover a length-c path
    // (its cover mass can sit at 1/(c+1) on every vertex, and that point is
    // a convex combination of integral orderings, so no valid cut removes
    // it); marking the realized last vertex keeps the cover constraint and
    // the reachability over-count intact. Its orientation arcs are forced
    // along, so the path-last constraints stay satisfied.
    std::vector<int> vi(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) vi[M.verts[i]] = i;
    std::map<Edge, char> edge_dead;
    std::vector<char> vertex_dead(g.id_bound(), 0);
    if (M.edge_mode) {
        for (size_t e = 0; e < M.z_edges.size(); ++e)
            edge_dead[M.z_edges[e]] = z_hat[e];
    } else {
        for (int i = 0; i < n; ++i) vertex_dead[M.verts[i]] = z_hat[i];
    }
    auto alive_path = [&](const std::vector<int>& T) {
        if (M.edge_mode) {
            for (size_t j = 0; j + 1 < T.size(); ++j)
                if (edge_dead[make_edge(T[j], T[j + 1])]) return false;
            return true;
        }
        for (int p : T)
            if (vertex_dead[p]) return false;
        return true;
    };
    r.y_hat.assign([&] {
        size_t total = 0;
        for (const auto& T : M.paths) total += T.size();
        return total;
    }(), 0);
    size_t y_flat = 0;
    std::vector<size_t> path_base(M.paths.size());
    for (size_t t = 0; t < M.paths.size(); ++t) {
        path_base[t] = y_flat;
        const auto& T = M.paths[t];
        for (size_t j = 0; j < T.size(); ++j, ++y_flat)
            if (sol[M.y_var[t][j]] >= thresh) r.y_hat[y_flat] = 1;
        // every path, dead or alive, marks its realized last vertex (dead
        // vertices rank lowest; ties fall to the larger id)
        size_t last_j = 0;
        std::pair<int, int> best{-2, -1};
        for (size_t j = 0; j < T.size(); ++j) {
            std::pair<int, int> key{r.extracted_order.position[T[j]], T[j]};
            if (key > best) {
                best = key;
                last_j = j;
            }
        }
        r.y_hat[path_base[t] + last_j] = 1;
        for (size_t i = 0; i < T.size(); ++i)
            if (i != last_j) r.x_hat[vi[T[i]]][vi[T[last_j]]] = 1;
    }

    // P by alive witness paths
    r.p_hat.assign(n, std::vector<char>(n, 0));
    for (size_t t = 0; t < M.paths.size(); ++t) {
        const auto& T = M.paths[t];
        if (!alive_path(T)) continue;
        for (size_t j = 0; j < T.size(); ++j) {
            if (!r.y_hat[path_base[t] + j]) continue;
            bool endpoint = j == 0 || j + 1 == T.size();
            if (!endpoint) continue;
            int last = T[j];
            int other = j == 0 ? T.back() : T.front();
            r.p_hat[vi[other]][vi[last]] = 1;
        }
    }
    return r;
}

}  // namespace

WcEditResult wc_edit(const Graph& g, int c, int k, const Rational& eps,
                     EditKind mode, const WcEditConfig& cfg) {
    if (!(Rational(c) * eps < Rational(1, c)))
        throw input_error("wc_edit requires c*eps < 1/c");
    if (eps <= 0) throw input_error("wc_edit: eps must be positive");
    WcEditResult res;
    res.model = build_wc_lp(g, c, k, mode == EditKind::edge, cfg);
    res.lp_solution = solve_lp(res.model.lp, cfg.lp_tol);
    if (res.lp_solution.status != LpStatus::optimal)
        throw lp_error("weak-coloring LP did not solve to optimality");
    res.rounded = round_wc(res.model, res.lp_solution, g, to_double(eps));
    res.edits = res.rounded.edits;
    res.beta = 1.0 / (1.0 / c - c * to_double(eps));
    return res;
}

bool wc_rounded_beta_feasible(const WcLp& M, const WcRounded& r, double beta,
                              std::string* why) {
    const int n = static_cast<int>(M.verts.size());
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r.x_hat[a][b] + r.x_hat[b][a] < 1)
                return fail("pair constraint broken");
    // path-last and cover constraints
    size_t y_flat = 0;
    int maxid = 0;
    for (int v : M.verts) maxid = std::max(maxid, v);
    std::vector<int> vidx(maxid + 1, -1);
    for (int i = 0; i < n; ++i) vidx[M.verts[i]] = i;
    for (size_t t = 0; t < M.paths.size(); ++t) {
        const auto& T = M.paths[t];
        int covered = 0;
        for (size_t j = 0; j < T.size(); ++j, ++y_flat) {
            covered += r.y_hat[y_flat];
            if (!r.y_hat[y_flat]) continue;
            for (size_t i = 0; i < T.size(); ++i) {
                if (i == j) continue;
                if (!r.x_hat[vidx[T[i]]][vidx[T[j]]])
                    return fail("path-last constraint broken");
            }
        }
        if (covered < 1) return fail("path cover constraint broken");
    }
    // hop constraints on integral values: alive path with a last-witness at
    // an endpoint must have P set
    y_flat = 0;
    for (size_t t = 0; t < M.paths.size(); ++t) {
        const auto& T = M.paths[t];
        bool alive = true;
        if (M.edge_mode) {
            std::map<Edge, char> dead;
            for (size_t e = 0; e < M.z_edges.size(); ++e)
                dead[M.z_edges[e]] = r.z_hat[e];
            for (size_t j = 0; j + 1 < T.size() && alive; ++j)
                alive = !dead[make_edge(T[j], T[j + 1])];
        } else {
            for (size_t i = 0; i < M.verts.size(); ++i)
                if (r.z_hat[i] &&
                    std::find(T.begin(), T.end(), M.verts[i]) != T.end())
                    alive = false;
        }
        for (size_t j = 0; j < T.size(); ++j, ++y_flat) {
            if (!alive || !r.y_hat[y_flat]) continue;
            if (j != 0 && j + 1 != T.size()) continue;
            int last = T[j];
            int other = j == 0 ? T.back() : T.front();
            if (!r.p_hat[vidx[other]][vidx[last]])
                return fail("hop constraint broken");
        }
    }
    // budget within beta (self pair folded into the bound)
    for (int a = 0; a < n; ++a) {
        int total = 0;
        for (int b = 0; b < n; ++b) total += a != b && r.p_hat[a][b];
        if (total > beta * (M.target - 1) + 1e-6)
            return fail("reachability budget exceeded");
    }
    return true;
}

}  // namespace grest
