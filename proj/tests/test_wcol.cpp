#include "doctest.h"

#include <cmath>

#include "grest/degeneracy_edit.hpp"
#include "grest/oracles.hpp"
#include "grest/wcol.hpp"
#include "test_util.hpp"

using namespace grest;
using namespace testutil;

TEST_CASE("wcol_score on fixed graphs") {
    Graph p3 = path(3);
    auto s = wcol_score(p3, make_ordering(p3, {0, 1, 2}), 2);
    CHECK(s.score == 3);  // the last vertex reaches both others and itself
    CHECK(s.reach_size[2] == 3);

    Graph e(4);
    auto se = wcol_score(e, make_ordering(e, {0, 1, 2, 3}), 3);
    CHECK(se.score == 1);

    Graph k3 = complete(3);
    auto sk = wcol_score(k3, make_ordering(k3, {0, 1, 2}), 1);
    CHECK(sk.score == 3);
    CHECK(sk.reach_size[2] == 3);
}

TEST_CASE("wcol_exact on fixed graphs") {
    CHECK(wcol_exact(path(3), 1) == 2);
    CHECK(wcol_exact(complete(4), 1) == 4);
    CHECK(wcol_exact(cycle(4), 2) == 3);
    CHECK(wcol_exact(cycle(4), 2) == 3);  // stable across runs
    CHECK_THROWS_AS(wcol_exact(random_graph(12, 0.3, 5), 2, 9), budget_error);
}

TEST_CASE("wcol_1 equals degeneracy + 1") {
    for (unsigned long seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(7, 0.4, seed + 11);
        CHECK(wcol_exact(g, 1) == degeneracy(g).degeneracy + 1);
    }
}

TEST_CASE("wcol_at_most agrees with wcol_exact") {
    for (unsigned long seed = 0; seed < 12; ++seed) {
        Graph g = random_graph(6, 0.5, seed + 21);
        int w = wcol_exact(g, 2);
        CHECK(wcol_at_most(g, 2, w));
        if (w > 1) CHECK_FALSE(wcol_at_most(g, 2, w - 1));
    }
}

TEST_CASE("wc_edit returns nothing when already inside the class") {
    Graph p2 = path(2);
    auto res = wc_edit(p2, 2, 2, Rational(1, 5), EditKind::edge);
    CHECK(res.edits.empty());
    CHECK(res.lp_solution.objective == doctest::Approx(0.0));
}

TEST_CASE("wc_edit threshold mechanics") {
    // step 1 rounds z up strictly above eps; step 2 keeps x at 1/c
    CHECK(0.3 > 0.25);
    CHECK_FALSE(0.4 >= 1.0 / 2.0);
}

TEST_CASE("wc_edit precondition") {
    CHECK_THROWS_AS(wc_edit(path(3), 2, 2, Rational(1, 2), EditKind::edge),
                    input_error);
}

TEST_CASE("wc_edit on P4 edge mode meets cost and class bound") {
    Graph p4 = path(4);
    int c = 2, k = 2;
    Rational eps(1, 5);
    auto res = wc_edit(p4, c, k, eps, EditKind::edge);
    Graph after = apply_edits(p4, res.edits);
    int achieved = wcol_exact(after, c);
    CHECK(achieved <= static_cast<int>(std::floor(k * res.beta)));
    // exact optimum: deleting the middle edge reaches wcol_2 = 2
    EditTarget t{EditPredicate::wcol_le, k, c};
    auto opt = exact_min_edit(p4, t, EditKind::edge);
    CHECK(opt.size() == 1);
    CHECK(to_double(res.edits.total_weight) <=
          5.0 * to_double(opt.total_weight) + 1e-9);
    std::string why;
    CHECK(wc_rounded_beta_feasible(res.model, res.rounded, res.beta, &why));
    INFO(why);
}

TEST_CASE("beta feasibility and P-hat overcount on a tiny corpus") {
    for (unsigned long seed : {3ul, 8ul, 15ul}) {
        Graph g = random_graph_m(5, 6, seed);
        if (g.num_edges() == 0) continue;
        int c = 2, k = 2;
        Rational eps(1, 5);
        auto res = wc_edit(g, c, k, eps, EditKind::edge);
        std::string why;
        CHECK(wc_rounded_beta_feasible(res.model, res.rounded, res.beta,
                                       &why));
        INFO(why);
        // step-wise cost: z-hat <= z/eps componentwise
        for (size_t e = 0; e < res.model.z_edges.size(); ++e) {
            double z = res.lp_solution[res.model.z_var[e]];
            if (res.rounded.z_hat[e])
                CHECK(z > to_double(eps) - 1e-12);
        }
        // P-hat over-counts the reach of the extracted ordering (reversed:
        // the LP's "last" convention mirrors the standard one)
        Graph after = apply_edits(g, res.edits);
        std::vector<int> rev(res.rounded.extracted_order.order.rbegin(),
                             res.rounded.extracted_order.order.rend());
        auto score = wcol_score(after, make_ordering(after, rev), c);
        const auto& M = res.model;
        for (size_t a = 0; a < M.verts.size(); ++a) {
            long total = 1;  // self
            for (size_t b = 0; b < M.verts.size(); ++b)
                total += a != b && res.rounded.p_hat[a][b];
            CHECK(score.reach_size[M.verts[a]] <= total);
        }
    }
}

TEST_CASE("wc_edit vertex mode on a triangle with k=1") {
    // wcol_1(K3) = 3; to get within beta of k=1 the LP must pay for edits
    Graph k3 = complete(3);
    auto res = wc_edit(k3, 1, 1, Rational(1, 8), EditKind::vertex, {});
    Graph after = apply_edits(k3, res.edits);
    CHECK(wcol_exact(after, 1) <=
          static_cast<int>(std::floor(1 * res.beta)));
}
