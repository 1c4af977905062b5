#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grest/errors.hpp"
#include "grest/rational.hpp"

namespace grest {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Undirected simple weighted graph over a fixed id space 0..id_bound()-1.
// Vertex deletion keeps the id space and flips a live mask, so edit sets and
// certificates always refer to the original ids. Values are immutable once
// built; every algorithm takes a const Graph& and returns new data.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int id_bound() const { return static_cast<int>(live_.size()); }
    int num_vertices() const { return live_count_; }
    long num_edges() const { return edge_count_; }

    bool is_live(int v) const { return v >= 0 && v < id_bound() && live_[v]; }
    bool has_edge(int u, int v) const;

    void add_edge(int u, int v, const Rational& w = Rational(1));
    void set_vertex_weight(int v, const Rational& w);
    void set_edge_weight(int u, int v, const Rational& w);

    std::vector<int> vertices() const;  // live ids, ascending
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    std::vector<Edge> edges() const;  // normalized, lexicographic

    const Rational& vertex_weight(int v) const;
    const Rational& edge_weight(int u, int v) const;

    Graph delete_vertices(const std::vector<int>& xs) const;
    Graph delete_edges(const std::vector<Edge>& xs) const;
    Graph induced(const std::vector<int>& keep) const;  // live ∩ keep

    std::vector<std::vector<int>> connected_components() const;

    bool operator==(const Graph& o) const;

private:
    void check_vertex(int v, const char* who) const;

    std::vector<char> live_;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<Rational> vweight_;
    std::map<Edge, Rational> eweight_;
    int live_count_ = 0;
    long edge_count_ = 0;
};

// position[v] = rank of v (0-based, dense over live vertices), order[i] = the
// vertex at rank i. Dead vertices carry position -1.
struct VertexOrdering {
    std::vector<int> position;
    std::vector<int> order;

    int rank(int v) const { return position[v]; }
    int size() const { return static_cast<int>(order.size()); }
};

VertexOrdering make_ordering(const Graph& g, const std::vector<int>& order);

// Each edge directed exactly once.
struct Orientation {
    std::vector<Edge> arcs;  // (from, to), sorted

    std::vector<int> out_degrees(const Graph& g) const;
    int max_out_degree(const Graph& g) const;
    // true iff arcs cover exactly the live edges of g, each once
    bool covers(const Graph& g) const;
};

enum class EditKind { vertex, edge };

struct EditSet {
    EditKind kind = EditKind::vertex;
    std::vector<int> vertices;  // sorted, unique
    std::vector<Edge> edges;    // normalized, sorted, unique
    Rational total_weight = 0;

    size_t size() const {
        return kind == EditKind::vertex ? vertices.size() : edges.size();
    }
    bool empty() const { return size() == 0; }
};

EditSet make_vertex_edit(const Graph& g, std::vector<int> xs);
EditSet make_edge_edit(const Graph& g, std::vector<Edge> xs);

// Vertex kind: induced subgraph on the complement (incident edges removed).
// Edge kind: edges removed, isolated vertices retained. Elements that do not
// exist in g are rejected with the offending element named.
Graph apply_edits(const Graph& g, const EditSet& x);

struct DegeneracyResult {
    int degeneracy = 0;
    VertexOrdering order;  // removal order of the min-degree peeling
};

// Matula–Beck peeling. Ties break by smallest vertex id unless tie_break is
// given, in which case ties break by smaller tie_break position.
DegeneracyResult degeneracy(const Graph& g,
                            const VertexOrdering* tie_break = nullptr);

// Maximal subgraph with minimum degree >= k (empty iff degeneracy(g) < k).
Graph k_core(const Graph& g, int k);

// Every edge points from the lower-rank endpoint to the higher-rank one.
Orientation orient_by_ordering(const Graph& g, const VertexOrdering& L);

// forward degree of v = neighbors ranked after v
std::vector<int> forward_degrees(const Graph& g, const VertexOrdering& L);
int max_forward_degree(const Graph& g, const VertexOrdering& L);

}  // namespace grest
