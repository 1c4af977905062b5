#include "grest/combinatorial_edit.hpp"

#include <algorithm>
#include <set>

#include "grest/matching.hpp"

namespace grest {

DegreeDemand degree_demand(const Graph& g, int d) {
    DegreeDemand dd;
    dd.demand.assign(g.id_bound(), 0);
    for (int v : g.vertices()) dd.demand[v] = std::max(0, g.degree(v) - d);
    return dd;
}

EditSet bounded_degree_edge_edit(const Graph& g, int d) {
    if (d < 0) throw input_error("bounded_degree_edge_edit: d must be >= 0");
    std::vector<int> cap(g.id_bound(), 0);
    for (int v : g.vertices()) cap[v] = d;
    auto keep = maximum_b_matching(g, cap);
    std::set<Edge> keep_set(keep.begin(), keep.end());
    std::vector<Edge> del;
    for (auto e : g.edges())
        if (!keep_set.count(e)) del.push_back(e);
    return make_edge_edit(g, del);
}

EditSet bounded_degree_edge_edit_brute(const Graph& g, int d, int max_edges) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > max_edges)
        throw budget_error("max_edges", "brute-force BDD-E on m=" +
                                            std::to_string(m));
    // maximize kept edges subject to all degrees <= d
    int best_kept = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> deg(g.id_bound(), 0);
        int kept = 0;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            if (mask & (1u << e)) {
                ++kept;
                if (++deg[edges[e].first] > d || ++deg[edges[e].second] > d)
                    ok = false;
            }
        if (ok && kept > best_kept) {
            best_kept = kept;
            best_mask = mask;
        }
    }
    std::vector<Edge> del;
    for (int e = 0; e < m; ++e)
        if (!(best_mask & (1u << e))) del.push_back(edges[e]);
    return make_edge_edit(g, del);
}

bool is_star_forest(const Graph& g) {
    for (const auto& comp : g.connected_components()) {
        long edges = 0;
        int maxdeg = 0;
        for (int v : comp) {
            edges += g.degree(v);
            maxdeg = std::max(maxdeg, g.degree(v));
        }
        edges /= 2;
        int nc = static_cast<int>(comp.size());
        if (edges != nc - 1) return false;          // must be a tree
        if (nc >= 2 && maxdeg != nc - 1) return false;  // with one center
    }
    return true;
}

std::vector<int> star_centers(const Graph& g) {
    std::vector<int> centers;
    for (const auto& comp : g.connected_components()) {
        if (comp.size() == 1) {
            centers.push_back(comp[0]);
            continue;
        }
        int center = -1;
        for (int v : comp)
            if (g.degree(v) == static_cast<int>(comp.size()) - 1) {
                center = v;
                break;  // smallest id wins for the two-vertex star
            }
        if (center < 0) throw input_error("star_centers: not a star forest");
        centers.push_back(center);
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

HittingInstance star_forest_occurrences(const Graph& g, bool vertex_mode) {
    HittingInstance hi;
    hi.vertex_mode = vertex_mode;
    auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());

    if (vertex_mode) {
        // triangles over vertex 3-sets
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (!g.has_edge(verts[a], verts[b])) continue;
                for (int c = b + 1; c < n; ++c)
                    if (g.has_edge(verts[a], verts[c]) &&
                        g.has_edge(verts[b], verts[c]))
                        hi.sets.push_back({verts[a], verts[b], verts[c]});
            }
        // 4-sets spanned by a P4 (a Hamiltonian path of the induced 4-set)
        auto spans_p4 = [&](int w, int x, int y, int z) {
            int vs[4] = {w, x, y, z};
            std::sort(vs, vs + 4);
            do {
                if (g.has_edge(vs[0], vs[1]) && g.has_edge(vs[1], vs[2]) &&
                    g.has_edge(vs[2], vs[3]))
                    return true;
            } while (std::next_permutation(vs, vs + 4));
            return false;
        };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d)
                        if (spans_p4(verts[a], verts[b], verts[c], verts[d]))
                            hi.sets.push_back(
                                {verts[a], verts[b], verts[c], verts[d]});
        std::sort(hi.sets.begin(), hi.sets.end());
        return hi;
    }

    // edge mode: triangle triples
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(verts[a], verts[b])) continue;
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(verts[a], verts[c]) &&
                    g.has_edge(verts[b], verts[c]))
                    hi.edge_sets.push_back({make_edge(verts[a], verts[b]),
                                            make_edge(verts[a], verts[c]),
                                            make_edge(verts[b], verts[c])});
        }
    // edge-distinct P4 paths a-b-c-d, counted once via a < d
    for (int b : verts)
        for (int c : g.neighbors(b)) {
            for (int a : g.neighbors(b)) {
                if (a == c) continue;
                for (int d : g.neighbors(c)) {
                    if (d == b || d == a) continue;
                    if (a < d)
                        hi.edge_sets.push_back({make_edge(a, b),
                                                make_edge(b, c),
                                                make_edge(c, d)});
                }
            }
        }
    for (auto& s : hi.edge_sets) std::sort(s.begin(), s.end());
    std::sort(hi.edge_sets.begin(), hi.edge_sets.end());
    hi.edge_sets.erase(std::unique(hi.edge_sets.begin(), hi.edge_sets.end()),
                       hi.edge_sets.end());
    return hi;
}

EditSet star_forest_vertex_edit(const Graph& g) {
    auto hi = star_forest_occurrences(g, true);
    std::set<int> chosen;
    for (const auto& s : hi.sets) {
        bool hit = false;
        for (int v : s) hit |= chosen.count(v) > 0;
        if (!hit)
            for (int v : s) chosen.insert(v);
    }
    return make_vertex_edit(g, {chosen.begin(), chosen.end()});
}

EditSet star_forest_edge_edit(const Graph& g) {
    auto hi = star_forest_occurrences(g, false);
    std::set<Edge> chosen;
    for (const auto& s : hi.edge_sets) {
        bool hit = false;
        for (auto e : s) hit |= chosen.count(e) > 0;
        if (!hit)
            for (auto e : s) chosen.insert(e);
    }
    return make_edge_edit(g, {chosen.begin(), chosen.end()});
}

}  // namespace grest
