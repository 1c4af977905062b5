#include "grest/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <map>

namespace grest {

namespace {
using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

std::vector<int> boost_matching(const BoostGraph& bg) {
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
        boost::num_vertices(bg));
    bool ok =
        boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (!ok) throw std::logic_error("matching verification failed");
    std::vector<int> out(mate.size());
    auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
    for (size_t v = 0; v < mate.size(); ++v)
        out[v] = mate[v] == null_v ? -1 : static_cast<int>(mate[v]);
    return out;
}
}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
    std::vector<int> verts = g.vertices();
    std::map<int, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;
    BoostGraph bg(verts.size());
    for (auto [u, v] : g.edges()) boost::add_edge(idx[u], idx[v], bg);
    auto mate = boost_matching(bg);
    std::vector<Edge> out;
    for (size_t i = 0; i < mate.size(); ++i)
        if (mate[i] >= 0 && static_cast<int>(i) < mate[i])
            out.push_back(make_edge(verts[i], verts[mate[i]]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> maximum_b_matching(const Graph& g,
                                     const std::vector<int>& cap) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    // layout: two gadget nodes per edge first, then vertex copies
    int next = 2 * m;
    std::vector<std::vector<int>> copies(g.id_bound());
    for (int v : g.vertices()) {
        int b = std::min(cap[v], g.degree(v));
        for (int i = 0; i < b; ++i) copies[v].push_back(next++);
    }
    BoostGraph bg(next);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        int eu = 2 * e, ev = 2 * e + 1;
        boost::add_edge(eu, ev, bg);
        for (int cu : copies[u]) boost::add_edge(cu, eu, bg);
        for (int cv : copies[v]) boost::add_edge(cv, ev, bg);
    }
    auto mate = boost_matching(bg);
    // edge e joins the b-matching iff both its gadget nodes matched outward
    std::vector<Edge> out;
    for (int e = 0; e < m; ++e) {
        int eu = 2 * e, ev = 2 * e + 1;
        if (mate[eu] >= 2 * m && mate[ev] >= 2 * m) out.push_back(edges[e]);
    }
    return out;
}

}  // namespace grest
