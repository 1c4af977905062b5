#include "grest/instances.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "grest/combinatorial_edit.hpp"
#include "grest/problems.hpp"

namespace grest {

int SetCoverInstance::frequency(int element) const {
    int f = 0;
    for (const auto& s : sets)
        f += std::binary_search(s.begin(), s.end(), element);
    return f;
}

int SetCoverInstance::max_frequency() const {
    int f = 0;
    for (int x = 0; x < universe; ++x) f = std::max(f, frequency(x));
    return f;
}

int SetCoverInstance::max_set_size() const {
    size_t d = 0;
    for (const auto& s : sets) d = std::max(d, s.size());
    return static_cast<int>(d);
}

void SetCoverInstance::validate() const {
    if (universe < 0) throw input_error("set cover: negative universe");
    for (const auto& s : sets) {
        if (s.empty()) throw input_error("set cover: empty set");
        for (int x : s)
            if (x < 0 || x >= universe)
                throw input_error("set cover: element out of range");
        if (!std::is_sorted(s.begin(), s.end()))
            throw input_error("set cover: sets must be sorted");
    }
    for (int x = 0; x < universe; ++x)
        if (frequency(x) == 0)
            throw input_error("set cover: element " + std::to_string(x) +
                              " in no set");
}

bool SetCoverInstance::covers(const std::vector<int>& chosen) const {
    std::vector<char> hit(universe, 0);
    for (int i : chosen)
        for (int x : sets[i]) hit[x] = 1;
    for (int x = 0; x < universe; ++x)
        if (!hit[x]) return false;
    return true;
}

void GadgetArtifact::check_roles_partition() const {
    std::vector<int> seen(graph.id_bound(), 0);
    for (const auto& [name, ids] : roles)
        for (int v : ids) {
            if (v < 0 || v >= graph.id_bound())
                throw input_error("role '" + name + "' names a bad id");
            ++seen[v];
        }
    for (int v = 0; v < graph.id_bound(); ++v)
        if (seen[v] != 1)
            throw input_error("roles do not partition vertex " +
                              std::to_string(v));
}

namespace {

std::vector<std::vector<int>> sets_containing(const SetCoverInstance& sc) {
    std::vector<std::vector<int>> of(sc.universe);
    for (size_t s = 0; s < sc.sets.size(); ++s)
        for (int x : sc.sets[s]) of[x].push_back(static_cast<int>(s));
    return of;
}

}  // namespace

GadgetArtifact gen_tw_gadget(const SetCoverInstance& sc) {
    sc.validate();
    const int F = static_cast<int>(sc.sets.size());
    for (const auto& s : sc.sets)
        if (static_cast<int>(s.size()) == sc.universe)
            throw input_error("tw gadget: a set contains every element");
    auto of = sets_containing(sc);
    for (int x = 0; x < sc.universe; ++x)
        if (static_cast<int>(of[x].size()) == F)
            throw input_error("tw gadget: element " + std::to_string(x) +
                              " is in every set");

    int n = F;
    std::vector<int> dummy_base(sc.universe);
    for (int x = 0; x < sc.universe; ++x) {
        dummy_base[x] = n;
        n += F - static_cast<int>(of[x].size());
    }
    GadgetArtifact a;
    a.kind = "sc-tw";
    a.graph = Graph(n);
    a.target_param = "w";
    a.target_value = F - 2;
    for (int s = 0; s < F; ++s) {
        a.set_vertices.push_back(s);
        a.roles["set:" + std::to_string(s)] = {s};
    }
    for (int s = 0; s < F; ++s)
        for (int t = s + 1; t < F; ++t) a.graph.add_edge(s, t);
    a.element_territory.assign(sc.universe, {});
    for (int x = 0; x < sc.universe; ++x) {
        std::vector<int> clique = of[x];
        int dummies = F - static_cast<int>(of[x].size());
        std::vector<int> dummy_ids;
        for (int i = 0; i < dummies; ++i) {
            clique.push_back(dummy_base[x] + i);
            dummy_ids.push_back(dummy_base[x] + i);
        }
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                if (!a.graph.has_edge(clique[i], clique[j]))
                    a.graph.add_edge(clique[i], clique[j]);
        a.roles["dummies:" + std::to_string(x)] = dummy_ids;
        a.element_territory[x] = dummy_ids;
    }
    a.check_roles_partition();
    return a;
}

std::vector<int> map_tw_solution(const GadgetArtifact& a, const EditSet& y) {
    if (y.kind != EditKind::vertex)
        throw input_error("map_tw_solution expects a vertex edit set");
    const int F = static_cast<int>(a.set_vertices.size());
    std::set<int> cover;
    for (int v : y.vertices) {
        if (v < F) {
            cover.insert(v);
            continue;
        }
        // a dummy: pick the smallest set sharing its outer clique
        for (int x = 0; x < static_cast<int>(a.element_territory.size());
             ++x) {
            const auto& blk = a.element_territory[x];
            if (std::find(blk.begin(), blk.end(), v) == blk.end()) continue;
            for (int s = 0; s < F; ++s)
                if (a.graph.has_edge(s, v)) {
                    cover.insert(s);
                    break;
                }
            break;
        }
    }
    return {cover.begin(), cover.end()};
}

GadgetArtifact gen_bdd_gadget(const SetCoverInstance& sc) {
    sc.validate();
    const int F = static_cast<int>(sc.sets.size());
    const int d = std::max(sc.max_set_size(), sc.max_frequency());
    auto of = sets_containing(sc);

    GadgetArtifact a;
    a.kind = "sc-bdd";
    a.target_param = "d";
    a.target_value = d;
    int n = F + sc.universe;
    std::vector<int> dummy_base(sc.universe);
    for (int x = 0; x < sc.universe; ++x) {
        dummy_base[x] = n;
        n += d + 1 - static_cast<int>(of[x].size());
    }
    a.graph = Graph(n);
    for (int s = 0; s < F; ++s) {
        a.set_vertices.push_back(s);
        a.roles["set:" + std::to_string(s)] = {s};
    }
    a.element_territory.assign(sc.universe, {});
    for (int x = 0; x < sc.universe; ++x) {
        int ev = F + x;
        a.roles["element:" + std::to_string(x)] = {ev};
        for (int s : of[x]) a.graph.add_edge(s, ev);
        std::vector<int> dummies;
        for (int i = 0; i < d + 1 - static_cast<int>(of[x].size()); ++i) {
            int dv = dummy_base[x] + i;
            a.graph.add_edge(ev, dv);
            dummies.push_back(dv);
        }
        a.roles["dummies:" + std::to_string(x)] = dummies;
        a.element_territory[x] = dummies;
        a.element_territory[x].push_back(ev);
    }
    a.check_roles_partition();
    return a;
}

std::vector<int> map_bdd_solution(const GadgetArtifact& a, const EditSet& y) {
    if (y.kind != EditKind::vertex)
        throw input_error("map_bdd_solution expects a vertex edit set");
    const int F = static_cast<int>(a.set_vertices.size());
    std::set<int> cover;
    for (int v : y.vertices) {
        if (v < F) {
            cover.insert(v);
            continue;
        }
        // element or dummy vertex: take the smallest set covering its element
        for (int x = 0; x < static_cast<int>(a.element_territory.size());
             ++x) {
            const auto& blk = a.element_territory[x];
            if (std::find(blk.begin(), blk.end(), v) == blk.end()) continue;
            int ev = F + x;
            for (int s = 0; s < F; ++s)
                if (a.graph.has_edge(s, ev)) {
                    cover.insert(s);
                    break;
                }
            break;
        }
    }
    return {cover.begin(), cover.end()};
}

GadgetArtifact gen_de_gadget(const SetCoverInstance& sc, int r) {
    sc.validate();
    if (r < 2) throw input_error("de gadget: r must be >= 2");
    auto of = sets_containing(sc);
    for (int x = 0; x < sc.universe; ++x)
        if (of[x].size() < 2)
            throw input_error("de gadget: element " + std::to_string(x) +
                              " has frequency < 2 (pre-process it away)");
    const int F = static_cast<int>(sc.sets.size());

    GadgetArtifact a;
    a.kind = "sc-de";
    a.target_param = "r";
    a.target_value = r;
    a.set_territory.assign(F, {});
    a.element_territory.assign(sc.universe, {});

    // count vertices first: ids are handed out set by set, then element by
    // element, so role blocks stay contiguous
    struct SplitIds {
        std::vector<int> clique;
        int t = -1, b = -1;
    };
    // per set: path, W, v_S, two chains of splits
    std::vector<std::vector<int>> path_ids(F), w_ids(F);
    std::vector<int> v_ids(F);
    std::vector<std::array<std::vector<SplitIds>, 2>> chains(F);
    // per set and side: the t vertex serving each element of the set
    std::vector<std::array<std::vector<int>, 2>> serving_t(F);

    int n = 0;
    auto take = [&n]() { return n++; };
    for (int s = 0; s < F; ++s) {
        for (int j = 0; j < r; ++j) path_ids[s].push_back(take());
        for (int j = 0; j < r; ++j) w_ids[s].push_back(take());
        v_ids[s] = take();
        int need = static_cast<int>(sc.sets[s].size());
        // chain length: first split offers r t-slots, each further split
        // costs one parent slot and offers r, so net r-1
        int extra = need <= r ? 0 : (need - r + (r - 1) - 1) / (r - 1);
        for (int side = 0; side < 2; ++side) {
            auto& chain = chains[s][side];
            for (int c = 0; c <= extra; ++c) {
                SplitIds sp;
                for (int j = 0; j < r; ++j) sp.clique.push_back(take());
                sp.t = take();
                sp.b = take();
                chain.push_back(sp);
            }
            // slot assignment: each split keeps one slot for its child,
            // except the last, which uses all r for elements
            auto& serve = serving_t[s][side];
            int next_split = 0, used_here = 0;
            for (int e = 0; e < need; ++e) {
                int cap = r - (next_split + 1 <
                                       static_cast<int>(chain.size())
                                   ? 1
                                   : 0);
                if (used_here == cap) {
                    ++next_split;
                    used_here = 0;
                }
                serve.push_back(chain[next_split].t);
                ++used_here;
            }
        }
    }
    // per element: one cycle over all f_x blocks of r z-vertices each,
    // plus r-1 a-vertices and one v_e vertex per block
    std::vector<std::vector<std::vector<int>>> z_ids(sc.universe),
        a_ids(sc.universe);
    std::vector<std::vector<int>> ve_ids(sc.universe);
    for (int x = 0; x < sc.universe; ++x) {
        int fx = static_cast<int>(of[x].size());
        z_ids[x].resize(fx);
        a_ids[x].resize(fx);
        for (int i = 0; i < fx; ++i) {
            for (int j = 0; j < r; ++j) z_ids[x][i].push_back(take());
            for (int j = 0; j < r - 1; ++j) a_ids[x][i].push_back(take());
            ve_ids[x].push_back(take());
        }
    }

    a.graph = Graph(n);
    auto& g = a.graph;
    for (int s = 0; s < F; ++s) {
        auto& terr = a.set_territory[s];
        for (int j = 0; j + 1 < r; ++j)
            g.add_edge(path_ids[s][j], path_ids[s][j + 1]);
        for (int w : w_ids[s])
            for (int x : path_ids[s]) g.add_edge(w, x);
        for (int w : w_ids[s]) g.add_edge(v_ids[s], w);
        for (int side = 0; side < 2; ++side) {
            auto& chain = chains[s][side];
            for (size_t c = 0; c < chain.size(); ++c) {
                auto& sp = chain[c];
                for (size_t i = 0; i < sp.clique.size(); ++i)
                    for (size_t j = i + 1; j < sp.clique.size(); ++j)
                        g.add_edge(sp.clique[i], sp.clique[j]);
                for (int q : sp.clique) {
                    g.add_edge(sp.t, q);
                    g.add_edge(sp.b, q);
                }
                g.add_edge(sp.b, c == 0 ? v_ids[s] : chain[c - 1].t);
                terr.insert(terr.end(), sp.clique.begin(), sp.clique.end());
                terr.push_back(sp.t);
                terr.push_back(sp.b);
            }
        }
        terr.insert(terr.end(), path_ids[s].begin(), path_ids[s].end());
        terr.insert(terr.end(), w_ids[s].begin(), w_ids[s].end());
        terr.push_back(v_ids[s]);
        std::sort(terr.begin(), terr.end());

        a.roles["set:" + std::to_string(s)] = terr;
        a.set_vertices.push_back(v_ids[s]);
        a.set_witness_edges.push_back(make_edge(v_ids[s], w_ids[s][0]));
    }
    for (int x = 0; x < sc.universe; ++x) {
        int fx = static_cast<int>(of[x].size());
        auto& terr = a.element_territory[x];
        // single cycle through all z blocks
        std::vector<int> ring;
        for (int i = 0; i < fx; ++i)
            ring.insert(ring.end(), z_ids[x][i].begin(), z_ids[x][i].end());
        for (size_t i = 0; i < ring.size(); ++i)
            g.add_edge(ring[i], ring[(i + 1) % ring.size()]);
        for (int i = 0; i < fx; ++i) {
            for (int av : a_ids[x][i]) {
                for (int zv : z_ids[x][i]) g.add_edge(av, zv);
                g.add_edge(av, ve_ids[x][i]);
            }
            terr.insert(terr.end(), z_ids[x][i].begin(), z_ids[x][i].end());
            terr.insert(terr.end(), a_ids[x][i].begin(), a_ids[x][i].end());
            terr.push_back(ve_ids[x][i]);
        }
        std::sort(terr.begin(), terr.end());
        a.roles["element:" + std::to_string(x)] = terr;
    }
    // incidences: element x's i-th containing set uses v_e^i on both sides
    std::vector<int> used_of_set(F, 0);
    for (int x = 0; x < sc.universe; ++x) {
        for (size_t i = 0; i < of[x].size(); ++i) {
            int s = of[x][i];
            int slot = used_of_set[s]++;
            g.add_edge(ve_ids[x][i], serving_t[s][0][slot]);
            g.add_edge(ve_ids[x][i], serving_t[s][1][slot]);
        }
    }
    a.check_roles_partition();
    return a;
}

std::vector<int> map_de_solution(const GadgetArtifact& a, const EditSet& y) {
    const int F = static_cast<int>(a.set_territory.size());
    std::vector<int> owner(a.graph.id_bound(), -1);  // set territory owner
    for (int s = 0; s < F; ++s)
        for (int v : a.set_territory[s]) owner[v] = s;
    std::vector<int> element_of(a.graph.id_bound(), -1);
    for (size_t x = 0; x < a.element_territory.size(); ++x)
        for (int v : a.element_territory[x]) element_of[v] = static_cast<int>(x);

    auto smallest_set_of_element = [&](int x) {
        // smallest set whose territory the element connects into
        for (int s = 0; s < F; ++s)
            for (int v : a.element_territory[x])
                for (int u : a.graph.neighbors(v))
                    if (owner[u] == s) return s;
        throw input_error("map_de_solution: orphan element gadget");
    };

    std::set<int> cover;
    auto charge_vertex = [&](int v) {
        if (owner[v] >= 0)
            cover.insert(owner[v]);
        else
            cover.insert(smallest_set_of_element(element_of[v]));
    };
    if (y.kind == EditKind::vertex) {
        for (int v : y.vertices) charge_vertex(v);
    } else {
        for (auto [u, v] : y.edges) {
            if (owner[u] >= 0)
                cover.insert(owner[u]);
            else if (owner[v] >= 0)
                cover.insert(owner[v]);
            else
                cover.insert(smallest_set_of_element(element_of[u]));
        }
    }
    return {cover.begin(), cover.end()};
}

GadgetArtifact gen_sf_vertex_gadget(const Graph& g) {
    const int base = g.id_bound();
    auto edges = g.edges();
    const int n_inherited = g.num_vertices();
    int n = base + static_cast<int>(edges.size()) +
            n_inherited * (2 * n_inherited + 1);
    GadgetArtifact a;
    a.kind = "vc-sf";
    a.target_param = "star-forest";
    a.graph = Graph(n);
    std::vector<int> inherited, subdivision, auxiliary;
    // keep only the live original ids
    std::vector<int> drop;
    for (int v = 0; v < base; ++v)
        if (!g.is_live(v)) drop.push_back(v);
    int next = base;
    for (auto [u, v] : edges) {
        int s = next++;
        a.graph.add_edge(u, s);
        a.graph.add_edge(s, v);
        subdivision.push_back(s);
    }
    for (int v : g.vertices()) {
        inherited.push_back(v);
        for (int i = 0; i < 2 * n_inherited + 1; ++i) {
            int p = next++;
            a.graph.add_edge(v, p);
            auxiliary.push_back(p);
        }
    }
    a.graph = a.graph.delete_vertices(drop);
    a.roles["inherited"] = inherited;
    a.roles["subdivision"] = subdivision;
    a.roles["auxiliary"] = auxiliary;
    return a;
}

SfEdgeIdentity sf_edge_identity(const Graph& g, const EditSet& y) {
    if (y.kind != EditKind::edge)
        throw input_error("sf_edge_identity expects an edge edit set");
    SfEdgeIdentity out;
    out.n = g.num_vertices();
    out.m = g.num_edges();
    out.edit_size = static_cast<long>(y.edges.size());
    Graph h = apply_edits(g, y);
    if (!is_star_forest(h))
        throw input_error("sf_edge_identity: edit set does not leave a star "
                          "forest");
    out.dominating_set = star_centers(h);
    Solution s;
    s.vertices = out.dominating_set;
    bool dominates = is_feasible(ProblemId::DS, g, s);
    out.identity_holds =
        dominates && static_cast<long>(out.dominating_set.size()) ==
                         out.n - out.m + out.edit_size;
    return out;
}

EditSet sf_edit_from_dominating(const Graph& g, const std::vector<int>& dom) {
    std::vector<char> in(g.id_bound(), 0);
    for (int v : dom) {
        if (!g.is_live(v))
            throw input_error("sf_edit_from_dominating: vertex not in graph");
        in[v] = 1;
    }
    std::vector<Edge> del;
    for (int v : g.vertices()) {
        if (in[v]) continue;
        int keep = -1;
        for (int u : g.neighbors(v))
            if (in[u]) {
                keep = u;
                break;
            }
        if (keep < 0)
            throw input_error("sf_edit_from_dominating: set does not "
                              "dominate vertex " +
                              std::to_string(v));
        for (int u : g.neighbors(v))
            if (u != keep && (in[u] || u < v))  // drop non-center edges once
                del.push_back(make_edge(v, u));
    }
    // edges between two dominators go too
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) del.push_back({u, v});
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    return make_edge_edit(g, del);
}

int wcn_target_k(const SetCoverInstance& sc, int c) {
    int ell = c / 2;
    int fmax = sc.max_frequency();
    return std::max(4 * fmax, ell + 3 * fmax - 2);
}

long wcn_expected_size(const SetCoverInstance& sc, int c) {
    int ell = c / 2;
    long k = wcn_target_k(sc, c);
    long n = static_cast<long>(sc.sets.size()) * (2 * k + 1);
    for (int x = 0; x < sc.universe; ++x) {
        long fx = sc.frequency(x);
        n += fx * fx + (ell - 3) * fx + k + 2;
    }
    return n;
}

GadgetArtifact gen_wcn_gadget(const SetCoverInstance& sc, int c) {
    sc.validate();
    if (c < 3) throw input_error("wcn gadget: c must be >= 3");
    const int ell = c / 2;
    const int k = wcn_target_k(sc, c);
    const int F = static_cast<int>(sc.sets.size());
    auto of = sets_containing(sc);

    GadgetArtifact a;
    a.kind = "sc-wcn";
    a.target_param = "k";
    a.target_value = k;

    int n = 0;
    auto take = [&n]() { return n++; };
    std::vector<std::vector<int>> d1(F), d2(F);
    std::vector<int> vs1(F), vs2(F);
    for (int s = 0; s < F; ++s) {
        for (int j = 0; j < k; ++j) d1[s].push_back(take());
        vs1[s] = d1[s][0];
        for (int j = 0; j < k + 1; ++j) d2[s].push_back(take());
        vs2[s] = d2[s][0];
    }
    std::vector<std::vector<int>> dx(sc.universe);
    // per element and containing set: the D_{S,x} clique and the path
    std::vector<std::vector<std::vector<int>>> dsx(sc.universe),
        pth(sc.universe);
    for (int x = 0; x < sc.universe; ++x) {
        int fx = static_cast<int>(of[x].size());
        for (int j = 0; j < k - 3 * fx + 2; ++j) dx[x].push_back(take());
        dsx[x].resize(fx);
        pth[x].resize(fx);
        for (int i = 0; i < fx; ++i) {
            for (int j = 0; j < fx; ++j) dsx[x][i].push_back(take());
            for (int j = 0; j < ell; ++j) pth[x][i].push_back(take());
        }
    }

    a.graph = Graph(n);
    auto& g = a.graph;
    auto clique = [&](const std::vector<int>& vs) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                g.add_edge(vs[i], vs[j]);
    };
    for (int s = 0; s < F; ++s) {
        clique(d1[s]);
        clique(d2[s]);
        g.add_edge(vs1[s], vs2[s]);
        a.roles["set:" + std::to_string(s) + ":D1"] = d1[s];
        a.roles["set:" + std::to_string(s) + ":D2"] = d2[s];
        a.set_vertices.push_back(vs1[s]);
        a.set_witness_edges.push_back(make_edge(vs1[s], vs2[s]));
        auto terr = d1[s];
        terr.insert(terr.end(), d2[s].begin(), d2[s].end());
        std::sort(terr.begin(), terr.end());
        a.set_territory.push_back(terr);
    }
    a.element_territory.assign(sc.universe, {});
    for (int x = 0; x < sc.universe; ++x) {
        clique(dx[x]);
        a.roles["element:" + std::to_string(x) + ":Dx"] = dx[x];
        auto& terr = a.element_territory[x];
        terr.insert(terr.end(), dx[x].begin(), dx[x].end());
        for (size_t i = 0; i < of[x].size(); ++i) {
            int s = of[x][i];
            clique(dsx[x][i]);
            int p1 = pth[x][i][0];
            for (int v : dx[x]) g.add_edge(p1, v);
            for (int v : dsx[x][i]) g.add_edge(p1, v);
            for (int j = 0; j + 1 < ell; ++j)
                g.add_edge(pth[x][i][j], pth[x][i][j + 1]);
            g.add_edge(pth[x][i][ell - 1], vs1[s]);
            a.roles["element:" + std::to_string(x) + ":DSx:" +
                    std::to_string(i)] = dsx[x][i];
            a.roles["element:" + std::to_string(x) + ":path:" +
                    std::to_string(i)] = pth[x][i];
            terr.insert(terr.end(), dsx[x][i].begin(), dsx[x][i].end());
            terr.insert(terr.end(), pth[x][i].begin(), pth[x][i].end());
        }
        std::sort(terr.begin(), terr.end());
    }
    a.check_roles_partition();
    if (n != wcn_expected_size(sc, c))
        throw std::logic_error("wcn gadget size mismatch");
    return a;
}

VertexOrdering wcn_canonical_ordering(const GadgetArtifact& a,
                                      const Graph& edited) {
    // the prescribed listing: D_S^1 blocks, D_S^2 blocks, then per element
    // its D_{S,x} cliques, D_x, and path vertices far end first; the
    // distinguished v_S^1 and v_S^2 vertices close the listing. The listing
    // is emitted reversed: its reachability reading is "every path vertex
    // no later than the target", which mirrors into the standard convention
    // under reversal.
    std::vector<int> order;
    const int F = static_cast<int>(a.set_vertices.size());
    std::set<int> distinguished;
    for (int s = 0; s < F; ++s) {
        distinguished.insert(a.set_vertices[s]);              // v_S^1
        distinguished.insert(a.set_witness_edges[s].second);  // v_S^2
    }
    auto push_role = [&](const std::string& name) {
        auto it = a.roles.find(name);
        if (it == a.roles.end()) return false;
        for (int v : it->second)
            if (edited.is_live(v) && !distinguished.count(v))
                order.push_back(v);
        return true;
    };
    for (int s = 0; s < F; ++s)
        push_role("set:" + std::to_string(s) + ":D1");
    for (int s = 0; s < F; ++s)
        push_role("set:" + std::to_string(s) + ":D2");
    for (size_t x = 0; x < a.element_territory.size(); ++x) {
        std::string base = "element:" + std::to_string(x);
        for (int i = 0; push_role(base + ":DSx:" + std::to_string(i)); ++i) {
        }
        push_role(base + ":Dx");
        // paths, far end first across all set branches
        std::vector<const std::vector<int>*> paths;
        for (int i = 0;; ++i) {
            auto it = a.roles.find(base + ":path:" + std::to_string(i));
            if (it == a.roles.end()) break;
            paths.push_back(&it->second);
        }
        if (!paths.empty()) {
            int ell = static_cast<int>(paths[0]->size());
            for (int j = ell - 1; j >= 0; --j)
                for (auto* p : paths)
                    if (edited.is_live((*p)[j])) order.push_back((*p)[j]);
        }
    }
    for (int s = 0; s < F; ++s)
        if (edited.is_live(a.set_vertices[s]))
            order.push_back(a.set_vertices[s]);
    for (int s = 0; s < F; ++s) {
        int v2 = a.set_witness_edges[s].second;
        if (edited.is_live(v2)) order.push_back(v2);
    }
    std::reverse(order.begin(), order.end());
    return make_ordering(edited, order);
}

EditSet wcn_canonical_edit(const GadgetArtifact& a,
                           const std::vector<int>& cover, EditKind kind) {
    if (kind == EditKind::vertex) {
        std::vector<int> del;
        for (int s : cover) del.push_back(a.set_vertices[s]);
        return make_vertex_edit(a.graph, del);
    }
    std::vector<Edge> del;
    for (int s : cover) del.push_back(a.set_witness_edges[s]);
    return make_edge_edit(a.graph, del);
}

IntegralityGapInstance gen_integrality_gap(int n) {
    if (n < 3) throw input_error("gen_integrality_gap: n must be >= 3");
    IntegralityGapInstance inst;
    inst.n_param = n;
    inst.r = n - 2;
    inst.graph = Graph(2 * n);
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v) inst.graph.add_edge(u, v);
    return inst;
}

long complete_graph_vertex_opt(int N, int r) {
    return std::max(0L, static_cast<long>(N) - r - 1);
}

long complete_graph_edge_opt(int N, int r) {
    long m = static_cast<long>(N) * (N - 1) / 2;
    if (N <= r + 1) return 0;
    long max_edges = static_cast<long>(r) * N -
                     static_cast<long>(r) * (r + 1) / 2;
    return m - max_edges;
}

PlantedInstance gen_planted(PlantedClass cls, int n, int param, int gamma,
                            EditKind kind, unsigned long seed) {
    if (n < 1) throw input_error("gen_planted: n must be >= 1");
    std::mt19937_64 rng(seed);
    PlantedInstance inst;
    inst.param = param;
    Graph g(n);
    switch (cls) {
        case PlantedClass::forest: {
            inst.param = 1;
            for (int v = 1; v < n; ++v) {
                std::uniform_int_distribution<int> pick(0, v - 1);
                g.add_edge(v, pick(rng));
            }
            break;
        }
        case PlantedClass::degenerate: {
            if (param < 1) throw input_error("gen_planted: r must be >= 1");
            for (int v = 1; v < n; ++v) {
                int back = std::min(v, param);
                std::vector<int> earlier(v);
                std::iota(earlier.begin(), earlier.end(), 0);
                std::shuffle(earlier.begin(), earlier.end(), rng);
                for (int i = 0; i < back; ++i) g.add_edge(v, earlier[i]);
            }
            break;
        }
        case PlantedClass::ktree: {
            if (param < 1) throw input_error("gen_planted: k must be >= 1");
            int k = std::min(param, n - 1);
            std::vector<std::vector<int>> cliques;
            std::vector<int> first;
            for (int v = 0; v <= k && v < n; ++v) {
                for (int u = 0; u < v; ++u) g.add_edge(u, v);
                first.push_back(v);
            }
            cliques.push_back(first);
            for (int v = k + 1; v < n; ++v) {
                std::uniform_int_distribution<size_t> pick(0,
                                                           cliques.size() - 1);
                auto base = cliques[pick(rng)];
                std::shuffle(base.begin(), base.end(), rng);
                base.resize(std::min<size_t>(base.size(), k));
                for (int u : base) g.add_edge(u, v);
                base.push_back(v);
                cliques.push_back(base);
            }
            break;
        }
    }
    // noise
    if (kind == EditKind::edge) {
        std::vector<Edge> added;
        std::uniform_int_distribution<int> pick(0, n - 1);
        int guard = 0;
        while (static_cast<int>(added.size()) < gamma && guard++ < 10000) {
            int u = pick(rng), v = pick(rng);
            if (u == v || g.has_edge(u, v)) continue;
            g.add_edge(u, v);
            added.push_back(make_edge(u, v));
        }
        inst.graph = g;
        std::sort(added.begin(), added.end());
        inst.planted = make_edge_edit(inst.graph, added);
    } else {
        Graph h(n + gamma);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        std::vector<int> noise;
        for (int i = 0; i < gamma; ++i) {
            int v = n + i;
            noise.push_back(v);
            std::vector<int> targets(n);
            std::iota(targets.begin(), targets.end(), 0);
            std::shuffle(targets.begin(), targets.end(), rng);
            int links = std::min(n, inst.param + 2);
            for (int j = 0; j < links; ++j) h.add_edge(v, targets[j]);
        }
        inst.graph = h;
        inst.planted = make_vertex_edit(inst.graph, noise);
    }
    return inst;
}

Graph gen_random_graph(int n, double p, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace grest
