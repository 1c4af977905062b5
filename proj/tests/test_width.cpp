#include "doctest.h"

#include <cmath>

#include "grest/instances.hpp"
#include "grest/oracles.hpp"
#include "grest/width_edit.hpp"
#include "test_util.hpp"

using namespace grest;
using namespace testutil;

TEST_CASE("separator on fixed graphs") {
    auto p5 = balanced_separator(path(5), path(5).vertices(), Rational(3, 4));
    CHECK(p5.separator.size() == 1);
    CHECK(p5.exact);
    CHECK(is_valid_separator(path(5), path(5).vertices(), Rational(3, 4),
                             {2}));  // the middle vertex splits into 2+2

    auto k5 = balanced_separator(complete(5), complete(5).vertices(),
                                 Rational(3, 4));
    CHECK(k5.separator.size() == 2);

    Graph g33 = grid(3, 3);
    auto gsep = balanced_separator(g33, g33.vertices(), Rational(3, 4));
    CHECK(gsep.separator.size() == 2);
    CHECK(gsep.exact);
}

TEST_CASE("heuristic separator stays valid past the exact budget") {
    Graph g = random_graph(24, 0.2, 99);
    auto res = balanced_separator(g, g.vertices(), Rational(3, 4), 18);
    CHECK_FALSE(res.exact);
    CHECK(is_valid_separator(g, g.vertices(), Rational(3, 4), res.separator));
}

TEST_CASE("decomposition validator catches broken inputs") {
    Graph p4 = path(4);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}};
    td.tree = {{0, 1}, {1, 2}};
    td.root = 0;
    CHECK(validate_decomposition(p4, td));
    td.bags[1] = {2};  // edge (1,2) no longer covered; vertex sets split
    CHECK_FALSE(validate_decomposition(p4, td));
}

TEST_CASE("builder produces valid decompositions of the right width") {
    CHECK(tree_decomposition(path(4)).width() >= 1);
    for (auto [make, tw] :
         std::vector<std::pair<Graph, int>>{{path(4), 1},
                                            {complete(4), 3},
                                            {cycle(4), 2}}) {
        BuilderStats stats;
        auto td = tree_decomposition(make, {}, &stats);
        std::string why;
        CHECK(validate_decomposition(make, td, &why));
        INFO(why);
        CHECK(stats.shrink_held);
        CHECK(td.width() >= tw);  // never below the true treewidth
    }
}

TEST_CASE("builder height obeys the 3/4 shrink") {
    for (unsigned long seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(14, 0.25, seed + 321);
        BuilderStats stats;
        auto td = tree_decomposition(g, {}, &stats);
        CHECK(validate_decomposition(g, td));
        CHECK(stats.shrink_held);
        int n = g.num_vertices();
        int cap = static_cast<int>(std::ceil(
                      std::log(std::max(1, n)) / std::log(4.0 / 3.0))) +
                  1;
        CHECK(td.height() <= cap);
    }
}

TEST_CASE("tree_to_path on fixed cases") {
    Graph p4 = path(4);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}};
    td.tree = {{0, 1}, {1, 2}};
    td.root = 0;
    auto pd = tree_to_path(p4, td);
    CHECK(validate_path_decomposition(p4, pd));
    CHECK(pd.width() + 1 <= (td.width() + 1) * td.height());

    // star K_{1,3}: width-1 decomposition of height 2 gives PD width <= 3
    Graph s3 = star(3);
    TreeDecomposition ts;
    ts.bags = {{0, 1}, {0, 2}, {0, 3}};
    ts.tree = {{0, 1}, {0, 2}};
    ts.root = 0;
    auto ps = tree_to_path(s3, ts);
    CHECK(validate_path_decomposition(s3, ps));
    CHECK(ps.width() <= 3);

    Graph k3 = complete(3);
    TreeDecomposition single;
    single.bags = {{0, 1, 2}};
    single.root = 0;
    auto pk = tree_to_path(k3, single);
    CHECK(pk.bags == single.bags);

    TreeDecomposition broken = ts;
    broken.bags[2] = {3};
    CHECK_THROWS_AS(tree_to_path(s3, broken), input_error);
}

TEST_CASE("treewidth_node_edit leaves trees alone") {
    Graph t = star(5);
    auto res = treewidth_node_edit(t, 1, {});
    CHECK(res.edits.empty());
    CHECK(validate_decomposition(t, res.certificate));
}

TEST_CASE("treewidth_node_edit forces recursion on K5") {
    WidthEditConfig cfg;
    cfg.c1 = Rational(1, 32);
    auto res = treewidth_node_edit(complete(5), 1, cfg);
    CHECK(res.threshold == doctest::Approx(1.0));
    Graph after = apply_edits(complete(5), res.edits);
    CHECK(exact_treewidth(after) <= 1);
    CHECK(validate_decomposition(after, res.certificate));
    CHECK(res.certificate.width() <= 1);
}

TEST_CASE("treewidth_node_edit on the set-cover gadget") {
    SetCoverInstance sc;
    sc.universe = 3;
    sc.sets = {{0, 1}, {1, 2}, {0, 2}, {2}};  // |F| = 4 so tw = 3
    auto gadget = gen_tw_gadget(sc);
    CHECK(exact_treewidth(gadget.graph) == 3);
    WidthEditConfig cfg;
    cfg.c1 = Rational(1, 32);
    auto res = treewidth_node_edit(gadget.graph, 1, cfg);
    CHECK_FALSE(res.edits.empty());
    Graph after = apply_edits(gadget.graph, res.edits);
    CHECK(exact_treewidth(after) <= 1);
    CHECK(res.certificate.width() <= 1);
    // the recursion's partition lower-bounds the optimum
    long lower = 0;
    for (const auto& part : res.partition) {
        Graph sub = gadget.graph.induced(part);
        lower += std::max(0, exact_treewidth(sub) - 1);
    }
    long opt = exact_min_edit_size(gadget.graph,
                                   {EditPredicate::tw_le, 1, 1},
                                   EditKind::vertex);
    CHECK(lower <= opt);
    CHECK(static_cast<long>(res.edits.size()) >= opt);
}

TEST_CASE("pathwidth_node_edit composes the two stages") {
    Graph c6 = cycle(6);
    auto res = pathwidth_node_edit(c6, 2, {});
    CHECK(res.edits.empty());
    CHECK(validate_path_decomposition(c6, res.certificate));
    CHECK(res.certificate.width() + 1 <=
          (res.tw_stage.certificate.width() + 1) *
              res.tw_stage.certificate.height());

    Graph t = path(5);
    auto rt = pathwidth_node_edit(t, 1, {});
    CHECK(rt.edits.empty());
    CHECK(validate_path_decomposition(t, rt.certificate));
}

TEST_CASE("editor certificates respect the planted class") {
    auto planted = gen_planted(PlantedClass::ktree, 14, 2, 2, EditKind::vertex,
                               777);
    Graph base = apply_edits(planted.graph, planted.planted);
    CHECK(exact_treewidth(base) <= 2);
    WidthEditConfig cfg;
    cfg.c1 = Rational(1, 32);
    auto res = treewidth_node_edit(planted.graph, 2, cfg);
    Graph after = apply_edits(planted.graph, res.edits);
    CHECK(validate_decomposition(after, res.certificate));
    CHECK(res.certificate.width() <= res.threshold + 1e-9);
}
