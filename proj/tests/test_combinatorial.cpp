#include "doctest.h"

#include "grest/combinatorial_edit.hpp"
#include "grest/matching.hpp"
#include "grest/oracles.hpp"
#include "test_util.hpp"

using namespace grest;
using namespace testutil;

TEST_CASE("bounded degree edge edit on fixed graphs") {
    CHECK(bounded_degree_edge_edit(cycle(5), 1).size() == 3);
    CHECK(bounded_degree_edge_edit(star(5), 2).size() == 3);
    auto p4 = bounded_degree_edge_edit(path(4), 1);
    CHECK(p4.size() == 1);
    CHECK(p4.edges == std::vector<Edge>{{1, 2}});  // the middle edge
}

TEST_CASE("bounded degree edit leaves max degree <= d") {
    for (unsigned long seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(8, 0.5, seed + 10);
        for (int d : {0, 1, 2, 3}) {
            auto x = bounded_degree_edge_edit(g, d);
            CHECK(apply_edits(g, x).max_degree() <= d);
        }
    }
}

TEST_CASE("matching route equals enumeration for small m") {
    for (unsigned long seed = 0; seed < 20; ++seed) {
        Graph g = random_graph_m(7, 12, seed + 77);
        for (int d : {1, 2}) {
            auto fast = bounded_degree_edge_edit(g, d);
            auto brute = bounded_degree_edge_edit_brute(g, d);
            CHECK(fast.size() == brute.size());
        }
    }
}

TEST_CASE("f-edge-cover duality: deletions = m - best bounded subgraph") {
    for (unsigned long seed = 0; seed < 12; ++seed) {
        Graph g = random_graph_m(8, 13, seed + 500);
        for (int d : {1, 2}) {
            auto x = bounded_degree_edge_edit(g, d);
            auto brute = bounded_degree_edge_edit_brute(g, d);
            CHECK(g.num_edges() - static_cast<long>(x.size()) ==
                  g.num_edges() - static_cast<long>(brute.size()));
        }
    }
}

TEST_CASE("is_star_forest") {
    CHECK(is_star_forest(star(4)));
    CHECK(is_star_forest(Graph(5)));
    CHECK_FALSE(is_star_forest(path(4)));
    CHECK_FALSE(is_star_forest(complete(3)));
    Graph two_stars(6);
    two_stars.add_edge(0, 1);
    two_stars.add_edge(0, 2);
    two_stars.add_edge(3, 4);
    two_stars.add_edge(3, 5);
    CHECK(is_star_forest(two_stars));
}

TEST_CASE("star forest vertex edit fixed cases") {
    auto p4 = star_forest_vertex_edit(path(4));
    CHECK(p4.size() == 4);  // the single forbidden set fires once
    CHECK(is_star_forest(apply_edits(path(4), p4)));

    auto c3 = star_forest_vertex_edit(complete(3));
    CHECK(c3.size() == 3);

    auto c5 = star_forest_vertex_edit(cycle(5));
    CHECK(c5.size() <= 5);
    CHECK(is_star_forest(apply_edits(cycle(5), c5)));
    long opt = exact_min_edit_size(cycle(5),
                                   {EditPredicate::star_forest, 0, 1},
                                   EditKind::vertex);
    CHECK(opt == 2);
    CHECK(static_cast<long>(c5.size()) <= 4 * opt);
}

TEST_CASE("star forest edge edit fixed cases") {
    CHECK(star_forest_edge_edit(complete(3)).size() == 3);
    CHECK(star_forest_edge_edit(path(4)).size() == 3);
    Graph two_p4(8);
    for (int b : {0, 4})
        for (int i = 0; i < 3; ++i) two_p4.add_edge(b + i, b + i + 1);
    auto x = star_forest_edge_edit(two_p4);
    CHECK(x.size() == 6);  // ratio exactly 3 against the optimum of 2
    long opt = exact_min_edit_size(two_p4,
                                   {EditPredicate::star_forest, 0, 1},
                                   EditKind::edge);
    CHECK(opt == 2);
}

TEST_CASE("hitting choices are disjoint and hit everything") {
    for (unsigned long seed = 0; seed < 15; ++seed) {
        Graph g = random_graph(8, 0.35, seed + 600);
        auto hi = star_forest_occurrences(g, true);
        auto x = star_forest_vertex_edit(g);
        std::set<int> in(x.vertices.begin(), x.vertices.end());
        // every occurrence intersects the edit set
        for (const auto& s : hi.sets) {
            bool hit = false;
            for (int v : s) hit |= in.count(v) > 0;
            CHECK(hit);
        }
        CHECK(is_star_forest(apply_edits(g, x)));
        // the chosen family is a union of disjoint occurrences: the size is
        // a multiple-free union, every element used once
        CHECK(in.size() == x.vertices.size());
    }
}

TEST_CASE("editor outputs always pass is_star_forest") {
    for (unsigned long seed = 0; seed < 15; ++seed) {
        Graph g = random_graph(7, 0.5, seed + 81);
        CHECK(is_star_forest(apply_edits(g, star_forest_vertex_edit(g))));
        CHECK(is_star_forest(apply_edits(g, star_forest_edge_edit(g))));
    }
}

TEST_CASE("star forest approximation factors on a corpus") {
    for (unsigned long seed = 0; seed < 10; ++seed) {
        Graph g = random_graph_m(8, 11, seed + 4000);
        auto xv = star_forest_vertex_edit(g);
        auto xe = star_forest_edge_edit(g);
        long ov = exact_min_edit_size(g, {EditPredicate::star_forest, 0, 1},
                                      EditKind::vertex);
        long oe = exact_min_edit_size(g, {EditPredicate::star_forest, 0, 1},
                                      EditKind::edge);
        CHECK(static_cast<long>(xv.size()) <= 4 * ov);
        CHECK(static_cast<long>(xe.size()) <= 3 * oe);
    }
}

TEST_CASE("maximum matching sanity") {
    CHECK(maximum_matching(path(4)).size() == 2);
    CHECK(maximum_matching(complete(4)).size() == 2);
    CHECK(maximum_matching(cycle(5)).size() == 2);
    CHECK(maximum_matching(Graph(3)).empty());
}

TEST_CASE("star centers") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    CHECK(star_centers(g) == std::vector<int>{0, 3, 5});
}
