#include "grest/problems.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace grest {

std::string problem_name(ProblemId id) {
    switch (id) {
        case ProblemId::IS: return "IS";
        case ProblemId::VC: return "VC";
        case ProblemId::FVS: return "FVS";
        case ProblemId::MMM: return "MMM";
        case ProblemId::CRN: return "CRN";
        case ProblemId::DS: return "DS";
        case ProblemId::ADS: return "ADS";
        case ProblemId::EDS: return "EDS";
        case ProblemId::MaxCut: return "MaxCut";
    }
    return "?";
}

std::optional<ProblemId> problem_from_name(const std::string& name) {
    for (ProblemId id : {ProblemId::IS, ProblemId::VC, ProblemId::FVS,
                         ProblemId::MMM, ProblemId::CRN, ProblemId::DS,
                         ProblemId::ADS, ProblemId::EDS, ProblemId::MaxCut})
        if (problem_name(id) == name) return id;
    return std::nullopt;
}

std::string edit_op_name(EditOp op) {
    switch (op) {
        case EditOp::vertex_deletion: return "vertex";
        case EditOp::edge_deletion: return "edge";
        case EditOp::vertex_star_deletion: return "vertex*";
    }
    return "?";
}

const ProblemSpec& problem_spec(ProblemId id) {
    static const std::map<ProblemId, ProblemSpec> table = [] {
        std::map<ProblemId, ProblemSpec> t;
        auto add = [&](ProblemId pid, bool maxi,
                       std::map<EditOp, std::pair<int, int>> cs) {
            t[pid] = ProblemSpec{pid, maxi, std::move(cs)};
        };
        add(ProblemId::IS, true,
            {{EditOp::vertex_deletion, {1, 0}}, {EditOp::edge_deletion, {0, 1}}});
        add(ProblemId::VC, false, {{EditOp::vertex_deletion, {0, 1}}});
        add(ProblemId::FVS, false, {{EditOp::vertex_deletion, {0, 1}}});
        add(ProblemId::MMM, false, {{EditOp::vertex_deletion, {0, 1}}});
        add(ProblemId::CRN, false, {{EditOp::vertex_deletion, {0, 1}}});
        add(ProblemId::DS, false, {{EditOp::edge_deletion, {1, 0}}});
        add(ProblemId::ADS, false, {{EditOp::vertex_star_deletion, {0, 1}}});
        add(ProblemId::EDS, false, {{EditOp::edge_deletion, {1, 1}}});
        add(ProblemId::MaxCut, true, {{EditOp::edge_deletion, {1, 0}}});
        return t;
    }();
    return table.at(id);
}

std::vector<int> closed_neighborhood(const Graph& g, const std::vector<int>& X,
                                     int ell) {
    if (ell < 0) throw input_error("closed_neighborhood: ell must be >= 0");
    std::vector<int> dist(g.id_bound(), -1);
    std::queue<int> q;
    for (int v : X) {
        if (!g.is_live(v))
            throw input_error("closed_neighborhood: vertex not in graph");
        if (dist[v] < 0) {
            dist[v] = 0;
            q.push(v);
        }
    }
    std::vector<int> out;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        out.push_back(v);
        if (dist[v] == ell) continue;
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool all_live(const Graph& g, const std::vector<int>& vs, std::string* why) {
    for (int v : vs)
        if (!g.is_live(v)) {
            if (why) *why = "vertex " + std::to_string(v) + " not in graph";
            return false;
        }
    return true;
}

bool acyclic(const Graph& g) {
    long n = g.num_vertices();
    long comps = g.connected_components().size();
    return g.num_edges() == n - comps;
}

// distance from every live vertex to the nearest vertex in seed
std::vector<int> multi_source_dist(const Graph& g,
                                   const std::vector<int>& seed) {
    std::vector<int> dist(g.id_bound(), -1);
    std::queue<int> q;
    for (int v : seed)
        if (g.is_live(v) && dist[v] < 0) {
            dist[v] = 0;
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

}  // namespace

bool is_feasible(ProblemId id, const Graph& g, const Solution& s,
                 const AnnotatedInstance* ann, std::string* witness) {
    auto fail = [&](const std::string& msg) {
        if (witness) *witness = msg;
        return false;
    };
    switch (id) {
        case ProblemId::IS: {
            if (!all_live(g, s.vertices, witness)) return false;
            for (size_t i = 0; i < s.vertices.size(); ++i)
                for (size_t j = i + 1; j < s.vertices.size(); ++j)
                    if (g.has_edge(s.vertices[i], s.vertices[j]))
                        return fail("edge (" + std::to_string(s.vertices[i]) +
                                    "," + std::to_string(s.vertices[j]) +
                                    ") inside the set");
            return true;
        }
        case ProblemId::VC: {
            if (!all_live(g, s.vertices, witness)) return false;
            std::set<int> in(s.vertices.begin(), s.vertices.end());
            for (auto [u, v] : g.edges())
                if (!in.count(u) && !in.count(v))
                    return fail("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") uncovered");
            return true;
        }
        case ProblemId::FVS: {
            if (!all_live(g, s.vertices, witness)) return false;
            if (!acyclic(g.delete_vertices(s.vertices)))
                return fail("a cycle survives the deletion set");
            return true;
        }
        case ProblemId::MMM: {
            std::set<int> matched;
            for (auto [u, v] : s.edges) {
                if (!g.has_edge(u, v))
                    return fail("matching edge not in graph");
                if (!matched.insert(u).second || !matched.insert(v).second)
                    return fail("edges share an endpoint");
            }
            for (auto [u, v] : g.edges())
                if (!matched.count(u) && !matched.count(v))
                    return fail("matching not maximal: (" + std::to_string(u) +
                                "," + std::to_string(v) + ") addable");
            return true;
        }
        case ProblemId::CRN: {
            for (int v : g.vertices())
                if (!s.coloring.count(v))
                    return fail("vertex " + std::to_string(v) + " uncolored");
            for (auto [u, v] : g.edges())
                if (s.coloring.at(u) == s.coloring.at(v))
                    return fail("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") monochromatic");
            return true;
        }
        case ProblemId::DS: {
            if (!all_live(g, s.vertices, witness)) return false;
            int ell = ann ? ann->ell : 1;
            auto dist = multi_source_dist(g, s.vertices);
            for (int v : g.vertices())
                if (dist[v] < 0 || dist[v] > ell)
                    return fail("vertex " + std::to_string(v) +
                                " undominated");
            return true;
        }
        case ProblemId::ADS: {
            if (!ann) return fail("ADS needs an annotation");
            if (!all_live(g, s.vertices, witness)) return false;
            auto dist = multi_source_dist(g, s.vertices);
            for (int b : ann->annotated) {
                if (!g.is_live(b))
                    return fail("annotated vertex " + std::to_string(b) +
                                " not in graph");
                if (dist[b] < 0 || dist[b] > ann->ell)
                    return fail("annotated vertex " + std::to_string(b) +
                                " undominated");
            }
            return true;
        }
        case ProblemId::EDS: {
            int ell = ann ? ann->ell : 1;
            std::vector<int> seed;
            for (auto [u, v] : s.edges) {
                if (!g.has_edge(u, v)) return fail("edge not in graph");
                seed.push_back(u);
                seed.push_back(v);
            }
            if (g.num_edges() == 0) return true;
            if (seed.empty()) return fail("no edge dominates anything");
            auto dist = multi_source_dist(g, seed);
            // edge (u,v) dominated iff some endpoint within ell-1 of an
            // endpoint of a chosen edge (ell=1: shares an endpoint)
            for (auto [u, v] : g.edges()) {
                int d = std::min(dist[u] < 0 ? 1 << 20 : dist[u],
                                 dist[v] < 0 ? 1 << 20 : dist[v]);
                if (d > ell - 1)
                    return fail("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") undominated");
            }
            return true;
        }
        case ProblemId::MaxCut:
            return all_live(g, s.vertices, witness);
    }
    return false;
}

long solution_cost(ProblemId id, const Graph& g, const Solution& s) {
    switch (id) {
        case ProblemId::IS:
        case ProblemId::VC:
        case ProblemId::FVS:
        case ProblemId::DS:
        case ProblemId::ADS:
            return static_cast<long>(s.vertices.size());
        case ProblemId::MMM:
        case ProblemId::EDS:
            return static_cast<long>(s.edges.size());
        case ProblemId::CRN: {
            std::set<int> colors;
            for (auto& [v, c] : s.coloring)
                if (g.is_live(v)) colors.insert(c);
            return static_cast<long>(colors.size());
        }
        case ProblemId::MaxCut: {
            std::set<int> side(s.vertices.begin(), s.vertices.end());
            long crossing = 0;
            for (auto [u, v] : g.edges())
                crossing += side.count(u) != side.count(v);
            return crossing;
        }
    }
    return 0;
}

}  // namespace grest
