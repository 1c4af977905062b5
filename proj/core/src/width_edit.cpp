#include "grest/width_edit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "grest/oracles.hpp"

namespace grest {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::bag_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

int TreeDecomposition::height() const {
    if (bags.empty()) return 0;
    auto adj = bag_adjacency();
    std::vector<int> depth(bags.size(), -1);
    std::queue<int> q;
    depth[root] = 1;
    q.push(root);
    int h = 1;
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        h = std::max(h, depth[b]);
        for (int c : adj[b])
            if (depth[c] < 0) {
                depth[c] = depth[b] + 1;
                q.push(c);
            }
    }
    return h;
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td,
                            std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (td.bags.empty()) return fail("no bags");
    const int nb = static_cast<int>(td.bags.size());
    if (td.root < 0 || td.root >= nb) return fail("root out of range");
    for (auto [a, b] : td.tree)
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            return fail("tree edge out of range");
    // the tree must be connected and acyclic over the bags
    if (static_cast<int>(td.tree.size()) != nb - 1)
        return fail("bag tree is not a tree");
    {
        auto adj = td.bag_adjacency();
        std::vector<char> seen(nb, 0);
        std::queue<int> q;
        q.push(td.root);
        seen[td.root] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++cnt;
            for (int c : adj[b])
                if (!seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
        }
        if (cnt != nb) return fail("bag tree disconnected");
    }
    // (1) vertex coverage
    std::vector<char> covered(g.id_bound(), 0);
    for (const auto& b : td.bags)
        for (int v : b) {
            if (!g.is_live(v)) return fail("bag holds a dead vertex");
            covered[v] = 1;
        }
    for (int v : g.vertices())
        if (!covered[v])
            return fail("vertex " + std::to_string(v) + " in no bag");
    // (2) edge coverage
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& b : td.bags) {
            bool fu = false, fv = false;
            for (int x : b) {
                fu |= x == u;
                fv |= x == v;
            }
            if (fu && fv) {
                ok = true;
                break;
            }
        }
        if (!ok)
            return fail("edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") in no bag");
    }
    // (3) per-vertex bag sets connected
    auto adj = td.bag_adjacency();
    for (int v : g.vertices()) {
        std::vector<int> holds;
        for (int b = 0; b < nb; ++b)
            if (std::find(td.bags[b].begin(), td.bags[b].end(), v) !=
                td.bags[b].end())
                holds.push_back(b);
        if (holds.empty()) continue;
        std::set<int> want(holds.begin(), holds.end());
        std::queue<int> q;
        std::set<int> seen;
        q.push(holds[0]);
        seen.insert(holds[0]);
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int c : adj[b])
                if (want.count(c) && !seen.count(c)) {
                    seen.insert(c);
                    q.push(c);
                }
        }
        if (seen.size() != want.size())
            return fail("bags containing " + std::to_string(v) +
                        " are disconnected");
    }
    return true;
}

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd,
                                 std::string* why) {
    TreeDecomposition td;
    td.bags = pd.bags;
    for (int i = 0; i + 1 < static_cast<int>(pd.bags.size()); ++i)
        td.tree.push_back({i, i + 1});
    td.root = 0;
    return validate_decomposition(g, td, why);
}

bool is_valid_separator(const Graph& g, const std::vector<int>& W,
                        const Rational& c, const std::vector<int>& S) {
    Graph h = g.delete_vertices(S);
    std::vector<char> inW(g.id_bound(), 0);
    for (int w : W) inW[w] = 1;
    long wsize = static_cast<long>(W.size());
    for (const auto& comp : h.connected_components()) {
        long count = 0;
        for (int v : comp) count += inW[v];
        // count <= c * |W| exactly, in rationals
        if (Rational(count) > c * wsize) return false;
    }
    return true;
}

namespace {

std::vector<int> heuristic_separator(const Graph& g, const std::vector<int>& W,
                                     const Rational& c) {
    std::vector<char> inW(g.id_bound(), 0);
    for (int w : W) inW[w] = 1;
    std::vector<int> S;
    Graph h = g;
    while (!is_valid_separator(g, W, c, S)) {
        // find the worst component and peel its BFS-median layer vertex
        auto comps = h.connected_components();
        long wsize = static_cast<long>(W.size());
        const std::vector<int>* worst = nullptr;
        long worst_count = -1;
        for (const auto& comp : comps) {
            long count = 0;
            for (int v : comp) count += inW[v];
            if (Rational(count) > c * wsize && count > worst_count) {
                worst_count = count;
                worst = &comp;
            }
        }
        if (!worst) break;
        // BFS from the component's first W vertex (or first vertex) and cut
        // at the layer holding the median W vertex
        int src = (*worst)[0];
        for (int v : *worst)
            if (inW[v]) {
                src = v;
                break;
            }
        std::vector<int> dist(h.id_bound(), -1);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        std::vector<std::pair<int, int>> wdepth;  // (depth, vertex) for W
        int maxd = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            maxd = std::max(maxd, dist[v]);
            if (inW[v]) wdepth.push_back({dist[v], v});
            for (int u : h.neighbors(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        std::sort(wdepth.begin(), wdepth.end());
        int cut_depth = wdepth.empty() ? maxd / 2
                                       : wdepth[wdepth.size() / 2].first;
        // remove the smallest layer at or next to the median depth
        std::vector<int> layer;
        for (int d = cut_depth; d <= maxd && layer.empty(); ++d)
            for (int v : *worst)
                if (dist[v] == d) layer.push_back(v);
        if (layer.empty()) layer.push_back(src);
        for (int v : layer) S.push_back(v);
        h = h.delete_vertices(layer);
    }
    std::sort(S.begin(), S.end());
    return S;
}

}  // namespace

SeparatorResult balanced_separator(const Graph& g, const std::vector<int>& W,
                                   const Rational& c, int exact_max_n) {
    if (c <= 0 || c >= 1)
        throw input_error("balanced_separator: need 0 < c < 1");
    for (int w : W)
        if (!g.is_live(w))
            throw input_error("balanced_separator: W vertex not in graph");
    SeparatorResult res;
    res.balance = c;
    if (g.num_vertices() <= exact_max_n) {
        try {
            res.separator = exact_min_separator(g, W, c);
            res.exact = true;
        } catch (const budget_error&) {
            res.separator = heuristic_separator(g, W, c);
            res.fell_back = true;
        }
    } else {
        res.separator = heuristic_separator(g, W, c);
    }
    Graph h = g.delete_vertices(res.separator);
    res.components = h.connected_components();
    std::vector<char> inW(g.id_bound(), 0);
    for (int w : W) inW[w] = 1;
    long wsize = static_cast<long>(W.size());
    for (const auto& comp : res.components) {
        long count = 0;
        for (int v : comp) count += inW[v];
        if (wsize > 0)
            res.achieved_fraction =
                std::max(res.achieved_fraction, Rational(count, wsize));
    }
    return res;
}

namespace {

struct Builder {
    const Graph& g;
    const WidthEditConfig& cfg;
    BuilderStats* stats;
    TreeDecomposition td;

    // returns the bag index of this call's root; depth is in bags
    int build(std::vector<int> Z, std::vector<int> W, int depth) {
        if (stats) stats->max_depth = std::max(stats->max_depth, depth);
        if (8 * static_cast<long>(Z.size()) <=
            static_cast<long>(W.size())) {
            std::vector<int> bag = Z;
            bag.insert(bag.end(), W.begin(), W.end());
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(bag);
            return static_cast<int>(td.bags.size()) - 1;
        }
        std::vector<int> zw = Z;
        zw.insert(zw.end(), W.begin(), W.end());
        std::sort(zw.begin(), zw.end());
        Graph sub = g.induced(zw);
        auto S = balanced_separator(sub, W, cfg.balance,
                                    cfg.exact_separator_max_n)
                     .separator;
        auto T = balanced_separator(sub, zw, cfg.balance,
                                    cfg.exact_separator_max_n)
                     .separator;
        std::set<int> cut(S.begin(), S.end());
        cut.insert(T.begin(), T.end());

        auto children_of = [&](const std::set<int>& removed) {
            Graph rest = sub.delete_vertices(
                std::vector<int>(removed.begin(), removed.end()));
            return rest.connected_components();
        };
        std::vector<std::vector<int>> comps = children_of(cut);

        // enforce the 3/4 shrink of Z: the separator of Z∪W alone does not
        // imply it, so augment with a separator of Z when a child is too big
        std::vector<char> inZ(g.id_bound(), 0);
        for (int v : Z) inZ[v] = 1;
        auto z_count = [&](const std::vector<int>& comp) {
            long c = 0;
            for (int v : comp) c += inZ[v];
            return c;
        };
        bool violated = false;
        for (const auto& comp : comps)
            violated |= 4 * z_count(comp) > 3 * static_cast<long>(Z.size());
        if (violated) {
            auto TZ = balanced_separator(sub, Z, cfg.balance,
                                         cfg.exact_separator_max_n)
                          .separator;
            cut.insert(TZ.begin(), TZ.end());
            comps = children_of(cut);
            if (stats) ++stats->shrink_repairs;
        }
        for (const auto& comp : comps) {
            if (4 * z_count(comp) > 3 * static_cast<long>(Z.size())) {
                if (stats) stats->shrink_held = false;
                throw std::logic_error("builder: Z did not shrink by 3/4");
            }
        }

        std::vector<int> bag = W;
        bag.insert(bag.end(), cut.begin(), cut.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        td.bags.push_back(bag);
        int me = static_cast<int>(td.bags.size()) - 1;

        for (const auto& comp : comps) {
            std::vector<int> Zi, Wi;
            std::vector<char> incomp(g.id_bound(), 0);
            for (int v : comp) incomp[v] = 1;
            for (int v : Z)
                if (incomp[v]) Zi.push_back(v);
            for (int v : W)
                if (incomp[v]) Wi.push_back(v);
            Wi.insert(Wi.end(), cut.begin(), cut.end());
            std::sort(Wi.begin(), Wi.end());
            Wi.erase(std::unique(Wi.begin(), Wi.end()), Wi.end());
            int child = build(std::move(Zi), std::move(Wi), depth + 1);
            td.tree.push_back({me, child});
        }
        return me;
    }
};

}  // namespace

TreeDecomposition tree_decomposition(const Graph& g,
                                     const WidthEditConfig& cfg,
                                     BuilderStats* stats) {
    Builder b{g, cfg, stats, {}};
    b.td.root = b.build(g.vertices(), {}, 1);
    return b.td;
}

double tw_edit_threshold(const Rational& c1, int w) {
    double logw = std::max(1.0, std::log2(static_cast<double>(w)));
    return 32.0 * to_double(c1) * w * std::sqrt(logw);
}

namespace {

// exact width when the component is small, else the builder's certificate
std::pair<int, TreeDecomposition> width_estimate(const Graph& comp,
                                                 const WidthEditConfig& cfg) {
    if (comp.num_vertices() <= cfg.exact_treewidth_max_n) {
        OracleBudget b;
        b.max_vertices = cfg.exact_treewidth_max_n;
        auto td = exact_tree_decomposition(comp, b);
        return {td.width(), td};
    }
    auto td = tree_decomposition(comp, cfg);
    return {td.width(), td};
}

TreeDecomposition glue(const std::vector<TreeDecomposition>& parts) {
    TreeDecomposition out;
    if (parts.empty()) {
        out.bags.push_back({});
        return out;
    }
    std::vector<int> roots;
    for (const auto& td : parts) {
        int off = static_cast<int>(out.bags.size());
        for (const auto& b : td.bags) out.bags.push_back(b);
        for (auto [a, b] : td.tree) out.tree.push_back({a + off, b + off});
        roots.push_back(td.root + off);
    }
    out.root = roots[0];
    for (size_t i = 1; i < roots.size(); ++i)
        out.tree.push_back({roots[i - 1], roots[i]});
    return out;
}

}  // namespace

TwEditResult treewidth_node_edit(const Graph& g, int w,
                                 const WidthEditConfig& cfg) {
    if (w < 1) throw input_error("treewidth_node_edit: w must be >= 1");
    if (cfg.c1 <= 0) throw input_error("treewidth_node_edit: c1 must be > 0");
    TwEditResult res;
    res.threshold = tw_edit_threshold(cfg.c1, w);

    std::vector<int> removed;
    std::vector<TreeDecomposition> certs;
    std::function<void(const Graph&)> recurse = [&](const Graph& comp) {
        if (comp.num_vertices() == 0) return;
        auto [t, td] = width_estimate(comp, cfg);
        if (t <= res.threshold + 1e-9) {
            res.partition.push_back(comp.vertices());
            certs.push_back(td);
            return;
        }
        auto sep = balanced_separator(comp, comp.vertices(), cfg.balance,
                                      cfg.exact_separator_max_n)
                       .separator;
        if (sep.empty())
            throw std::logic_error("empty separator on a wide component");
        res.partition.push_back(sep);
        removed.insert(removed.end(), sep.begin(), sep.end());
        Graph rest = comp.delete_vertices(sep);
        for (const auto& cc : rest.connected_components())
            recurse(rest.induced(cc));
    };
    recurse(g);
    res.edits = make_vertex_edit(g, removed);
    res.certificate = glue(certs);
    std::string why;
    if (!validate_decomposition(apply_edits(g, res.edits), res.certificate,
                                &why))
        throw std::logic_error("editor produced an invalid certificate: " +
                               why);
    return res;
}

PathDecomposition tree_to_path(const Graph& g, const TreeDecomposition& td) {
    std::string why;
    if (!validate_decomposition(g, td, &why))
        throw input_error("tree_to_path: invalid decomposition: " + why);
    PathDecomposition pd;
    if (td.bags.size() == 1) {
        pd.bags.push_back(td.bags[0]);
        return pd;
    }
    auto adj = td.bag_adjacency();
    // DFS; one path bag per leaf = union of bags on the root-to-leaf path
    std::vector<int> stack_path;
    std::function<void(int, int)> dfs = [&](int b, int parent) {
        stack_path.push_back(b);
        bool leaf = true;
        for (int c : adj[b])
            if (c != parent) {
                leaf = false;
                dfs(c, b);
            }
        if (leaf) {
            std::set<int> uni;
            for (int x : stack_path)
                uni.insert(td.bags[x].begin(), td.bags[x].end());
            pd.bags.push_back({uni.begin(), uni.end()});
        }
        stack_path.pop_back();
    };
    dfs(td.root, -1);
    return pd;
}

PwEditResult pathwidth_node_edit(const Graph& g, int w,
                                 const WidthEditConfig& cfg) {
    PwEditResult res;
    res.tw_stage = treewidth_node_edit(g, w, cfg);
    res.edits = res.tw_stage.edits;
    Graph edited = apply_edits(g, res.edits);
    res.certificate = tree_to_path(edited, res.tw_stage.certificate);
    std::string why;
    if (!validate_path_decomposition(edited, res.certificate, &why))
        throw std::logic_error("invalid path decomposition: " + why);
    return res;
}

}  // namespace grest
