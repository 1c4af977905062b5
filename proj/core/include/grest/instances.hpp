#pragma once

#include <map>
#include <string>
#include <vector>

#include "grest/graph.hpp"

namespace grest {

struct SetCoverInstance {
    int universe = 0;                    // elements 0..universe-1
    std::vector<std::vector<int>> sets;  // each sorted

    int frequency(int element) const;
    int max_frequency() const;
    int max_set_size() const;
    // no empty set, every element covered at least once
    void validate() const;
    bool covers(const std::vector<int>& chosen) const;
};

// A generated hard instance: graph, role labels partitioning its vertices,
// the target parameter, and whatever ids the back-map needs.
struct GadgetArtifact {
    std::string kind;
    Graph graph;
    std::map<std::string, std::vector<int>> roles;
    std::string target_param;
    long target_value = 0;

    // gadget-specific handles
    std::vector<int> set_vertices;            // one id per set where defined
    std::vector<Edge> set_witness_edges;      // canonical per-set edge
    std::vector<std::vector<int>> set_territory;  // per set: its vertex block
    std::vector<std::vector<int>> element_territory;  // per element

    void check_roles_partition() const;
};

// Overlapping-cliques instance: central clique of set vertices, one outer
// clique per element (its sets' central vertices plus dummies). Treewidth
// |F|-1, clique number |F|.
GadgetArtifact gen_tw_gadget(const SetCoverInstance& sc);
std::vector<int> map_tw_solution(const GadgetArtifact& a, const EditSet& y);

// Bipartite set/element graph with element degrees padded to d+1 by pendant
// dummies, d = max(max set size, max frequency).
GadgetArtifact gen_bdd_gadget(const SetCoverInstance& sc);
std::vector<int> map_bdd_solution(const GadgetArtifact& a, const EditSet& y);

// Degeneracy gadget: per-set path/W/split structure, per-element cycle
// blocks, split trees carrying the incidences. Degeneracy exactly r+1 and
// n <= 10 r |U| |F|. Requires r >= 2 and every element frequency >= 2.
GadgetArtifact gen_de_gadget(const SetCoverInstance& sc, int r);
std::vector<int> map_de_solution(const GadgetArtifact& a, const EditSet& y);

// Subdivide every edge once and hang 2n+1 pendants on each inherited vertex;
// vertex-cover optima transfer to star-forest vertex deletion exactly.
GadgetArtifact gen_sf_vertex_gadget(const Graph& g);

// Star-forest edge deletion vs domination on the same graph: star centers of
// g minus the edit set dominate g and satisfy |D| = n - m + |edit|.
struct SfEdgeIdentity {
    long n = 0;
    long m = 0;
    std::vector<int> dominating_set;
    long edit_size = 0;
    bool identity_holds = false;
};
SfEdgeIdentity sf_edge_identity(const Graph& g, const EditSet& y);
// reverse direction: a dominating set yields an edit set of size m - n + |D|
EditSet sf_edit_from_dominating(const Graph& g, const std::vector<int>& dom);

// Weak-coloring gadget for radius c >= 3: per-set double cliques joined by
// the (v_S^1, v_S^2) edge, per-element clique blocks linked through length-l
// paths, l = floor(c/2), k minimal with k >= 4 f_max and k >= l + 3 f_max - 2.
GadgetArtifact gen_wcn_gadget(const SetCoverInstance& sc, int c);
long wcn_expected_size(const SetCoverInstance& sc, int c);
int wcn_target_k(const SetCoverInstance& sc, int c);
// the prescribed ordering that certifies canonical edits
VertexOrdering wcn_canonical_ordering(const GadgetArtifact& a,
                                      const Graph& edited);
EditSet wcn_canonical_edit(const GadgetArtifact& a,
                           const std::vector<int>& cover, EditKind kind);

// K_{2n} with target degeneracy n-2: both degeneracy LPs have O(1)/O(n)
// fractional optima while integral solutions need n+1 vertices / n^2/4 edges.
struct IntegralityGapInstance {
    Graph graph;
    int r = 0;
    int n_param = 0;
};
IntegralityGapInstance gen_integrality_gap(int n);

// closed-form exact optima on complete graphs
long complete_graph_vertex_opt(int N, int r);  // vertices to reach deg. <= r
long complete_graph_edge_opt(int N, int r);    // edges to reach deg. <= r

enum class PlantedClass { forest, degenerate, ktree };

struct PlantedInstance {
    Graph graph;
    EditSet planted;  // upper bound on the optimum
    int param = 0;    // r or k of the base class
};

// Base graph inside the class plus gamma noise elements, deterministic in
// the seed. Noise kind matches `kind`.
PlantedInstance gen_planted(PlantedClass cls, int n, int param, int gamma,
                            EditKind kind, unsigned long seed);

Graph gen_random_graph(int n, double p, unsigned long seed);

}  // namespace grest
