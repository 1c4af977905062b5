#include "grest/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace grest {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return Rational(text);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg) digits = digits.substr(1);
        if (digits.empty()) throw input_error("bad rational literal: " + text);
        BigInt num(digits);
        BigInt den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational q(num, den);
        return neg ? -q : q;
    } catch (const std::exception&) {
        throw input_error("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Graph::Graph(int n) {
    if (n < 0) throw input_error("negative vertex count");
    live_.assign(n, 1);
    adj_.assign(n, {});
    vweight_.assign(n, Rational(1));
    live_count_ = n;
}

void Graph::check_vertex(int v, const char* who) const {
    if (!is_live(v))
        throw input_error(std::string(who) + ": vertex " + std::to_string(v) +
                          " not in graph");
}

bool Graph::has_edge(int u, int v) const {
    if (!is_live(u) || !is_live(v) || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v, const Rational& w) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw input_error("self-loop rejected");
    if (has_edge(u, v)) throw input_error("parallel edge rejected");
    if (w < 0) throw input_error("negative edge weight");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    eweight_[make_edge(u, v)] = w;
    ++edge_count_;
}

void Graph::set_vertex_weight(int v, const Rational& w) {
    check_vertex(v, "set_vertex_weight");
    if (w < 0) throw input_error("negative vertex weight");
    vweight_[v] = w;
}

void Graph::set_edge_weight(int u, int v, const Rational& w) {
    if (!has_edge(u, v))
        throw input_error("set_edge_weight: no such edge");
    if (w < 0) throw input_error("negative edge weight");
    eweight_[make_edge(u, v)] = w;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(live_count_);
    for (int v = 0; v < id_bound(); ++v)
        if (live_[v]) out.push_back(v);
    return out;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v : vertices()) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < id_bound(); ++u) {
        if (!live_[u]) continue;
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    }
    return out;
}

const Rational& Graph::vertex_weight(int v) const {
    check_vertex(v, "vertex_weight");
    return vweight_[v];
}

const Rational& Graph::edge_weight(int u, int v) const {
    auto it = eweight_.find(make_edge(u, v));
    if (it == eweight_.end() || !has_edge(u, v))
        throw input_error("edge_weight: no such edge");
    return it->second;
}

Graph Graph::delete_vertices(const std::vector<int>& xs) const {
    Graph g = *this;
    for (int v : xs) {
        g.check_vertex(v, "delete_vertices");
        for (int u : g.adj_[v]) {
            auto& a = g.adj_[u];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
            g.eweight_.erase(make_edge(u, v));
            --g.edge_count_;
        }
        g.adj_[v].clear();
        g.live_[v] = 0;
        --g.live_count_;
    }
    return g;
}

Graph Graph::delete_edges(const std::vector<Edge>& xs) const {
    Graph g = *this;
    for (auto [u, v] : xs) {
        if (!g.has_edge(u, v))
            throw input_error("delete_edges: edge (" + std::to_string(u) +
                              "," + std::to_string(v) + ") not in graph");
        auto& au = g.adj_[u];
        au.erase(std::lower_bound(au.begin(), au.end(), v));
        auto& av = g.adj_[v];
        av.erase(std::lower_bound(av.begin(), av.end(), u));
        g.eweight_.erase(make_edge(u, v));
        --g.edge_count_;
    }
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<char> in(id_bound(), 0);
    for (int v : keep)
        if (is_live(v)) in[v] = 1;
    std::vector<int> drop;
    for (int v = 0; v < id_bound(); ++v)
        if (live_[v] && !in[v]) drop.push_back(v);
    return delete_vertices(drop);
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(id_bound(), 0);
    for (int s = 0; s < id_bound(); ++s) {
        if (!live_[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::operator==(const Graph& o) const {
    return live_ == o.live_ && adj_ == o.adj_ && vweight_ == o.vweight_ &&
           eweight_ == o.eweight_;
}

VertexOrdering make_ordering(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.num_vertices())
        throw input_error("ordering does not cover the live vertices");
    VertexOrdering L;
    L.order = order;
    L.position.assign(g.id_bound(), -1);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (!g.is_live(v) || L.position[v] != -1)
            throw input_error("ordering is not a bijection over the vertices");
        L.position[v] = static_cast<int>(i);
    }
    return L;
}

std::vector<int> Orientation::out_degrees(const Graph& g) const {
    std::vector<int> out(g.id_bound(), 0);
    for (auto [u, v] : arcs) ++out[u];
    return out;
}

int Orientation::max_out_degree(const Graph& g) const {
    auto od = out_degrees(g);
    int m = 0;
    for (int d : od) m = std::max(m, d);
    return m;
}

bool Orientation::covers(const Graph& g) const {
    std::set<Edge> seen;
    for (auto [u, v] : arcs) {
        if (!g.has_edge(u, v)) return false;
        if (!seen.insert(make_edge(u, v)).second) return false;
    }
    return static_cast<long>(seen.size()) == g.num_edges();
}

EditSet make_vertex_edit(const Graph& g, std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    EditSet e;
    e.kind = EditKind::vertex;
    e.vertices = std::move(xs);
    for (int v : e.vertices) {
        if (!g.is_live(v))
            throw input_error("edit set: vertex " + std::to_string(v) +
                              " not in graph");
        e.total_weight += g.vertex_weight(v);
    }
    return e;
}

EditSet make_edge_edit(const Graph& g, std::vector<Edge> xs) {
    for (auto& e : xs) e = make_edge(e.first, e.second);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    EditSet e;
    e.kind = EditKind::edge;
    e.edges = std::move(xs);
    for (auto [u, v] : e.edges) {
        if (!g.has_edge(u, v))
            throw input_error("edit set: edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") not in graph");
        e.total_weight += g.edge_weight(u, v);
    }
    return e;
}

Graph apply_edits(const Graph& g, const EditSet& x) {
    if (x.kind == EditKind::vertex) {
        for (int v : x.vertices)
            if (!g.is_live(v))
                throw input_error("apply_edits: vertex " + std::to_string(v) +
                                  " not in graph");
        return g.delete_vertices(x.vertices);
    }
    return g.delete_edges(x.edges);  // delete_edges names missing edges
}

DegeneracyResult degeneracy(const Graph& g, const VertexOrdering* tie_break) {
    // key = (current degree, tie key); tie key is the previous ordering's
    // position when supplied, else the vertex id.
    auto key_of = [&](int v) {
        return tie_break ? tie_break->position[v] : v;
    };
    std::vector<int> deg(g.id_bound(), 0);
    std::set<std::pair<std::pair<int, int>, int>> pq;  // ((deg,key),v)
    for (int v : g.vertices()) {
        deg[v] = g.degree(v);
        pq.insert({{deg[v], key_of(v)}, v});
    }
    std::vector<char> removed(g.id_bound(), 0);
    DegeneracyResult res;
    res.order.position.assign(g.id_bound(), -1);
    while (!pq.empty()) {
        auto it = pq.begin();
        int v = it->second;
        int d = it->first.first;
        pq.erase(it);
        res.degeneracy = std::max(res.degeneracy, d);
        res.order.position[v] = static_cast<int>(res.order.order.size());
        res.order.order.push_back(v);
        removed[v] = 1;
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            pq.erase({{deg[u], key_of(u)}, u});
            --deg[u];
            pq.insert({{deg[u], key_of(u)}, u});
        }
    }
    return res;
}

Graph k_core(const Graph& g, int k) {
    if (k < 0) throw input_error("k_core: k must be >= 0");
    Graph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> drop;
        for (int v : h.vertices())
            if (h.degree(v) < k) drop.push_back(v);
        if (!drop.empty()) {
            h = h.delete_vertices(drop);
            changed = true;
        }
    }
    return h;
}

Orientation orient_by_ordering(const Graph& g, const VertexOrdering& L) {
    Orientation o;
    for (auto [u, v] : g.edges()) {
        if (L.position[u] < 0 || L.position[v] < 0)
            throw input_error("orient_by_ordering: ordering misses a vertex");
        if (L.position[u] < L.position[v])
            o.arcs.emplace_back(u, v);
        else
            o.arcs.emplace_back(v, u);
    }
    std::sort(o.arcs.begin(), o.arcs.end());
    return o;
}

std::vector<int> forward_degrees(const Graph& g, const VertexOrdering& L) {
    std::vector<int> fd(g.id_bound(), 0);
    for (int v : g.vertices())
        for (int u : g.neighbors(v))
            if (L.position[u] > L.position[v]) ++fd[v];
    return fd;
}

int max_forward_degree(const Graph& g, const VertexOrdering& L) {
    auto fd = forward_degrees(g, L);
    int m = 0;
    for (int v : g.vertices()) m = std::max(m, fd[v]);
    return m;
}

}  // namespace grest
