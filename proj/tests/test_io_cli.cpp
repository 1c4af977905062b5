#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "grest/cli_app.hpp"
#include "grest/io.hpp"
#include "test_util.hpp"

using namespace grest;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

using nlohmann::json;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("grest_test_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const {
        return (dir / name).string();
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

json strip_timings(json j) {
    j.erase("timings");
    return j;
}

}  // namespace

TEST_CASE("graph format round trip is the identity on content") {
    for (unsigned long seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, 0.4, seed);
        if (g.num_vertices() > 1) {
            g.set_vertex_weight(0, parse_rational("0.5"));
            g.set_vertex_weight(1, Rational(7, 3));
        }
        for (auto [u, v] : g.edges()) {
            g.set_edge_weight(u, v, Rational(u + v + 1, 2));
            break;
        }
        Graph back = parse_graph(format_graph(g));
        CHECK(back == g);
        CHECK(format_graph(back) == format_graph(g));
    }
}

TEST_CASE("graph parser rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 5\n"), input_error);
    CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\n"), input_error);
    try {
        parse_graph("p 2 1\nq 1\n");
        CHECK(false);
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("set cover json round trip") {
    SetCoverInstance sc;
    sc.universe = 3;
    sc.sets = {{0, 1}, {1, 2}};
    auto back = parse_set_cover(format_set_cover(sc));
    CHECK(back.universe == 3);
    CHECK(back.sets == sc.sets);
    CHECK_THROWS_AS(parse_set_cover("{\"universe\": 2, \"sets\": [[]]}"),
                    input_error);
}

TEST_CASE("report round trip and validation") {
    Graph g = cycle(5);
    ReportDocument rep;
    rep.tool_version = cli::kVersion;
    rep.subcommand = "edit";
    rep.parameters = {{"class", "degeneracy"}};
    rep.edits = make_edge_edit(g, {{0, 1}});
    Graph after = apply_edits(g, rep.edits);
    auto d = degeneracy(after);
    rep.achieved_parameter = "degeneracy";
    rep.achieved_value = d.degeneracy;
    rep.certificate = ordering_to_json(d.order);
    auto j = report_to_json(rep);
    auto back = report_from_json(j);
    std::string why;
    CHECK(validate_report(g, back, &why));
    INFO(why);

    // a corrupted claim fails validation
    back.achieved_value = 0;
    CHECK_FALSE(validate_report(g, back));
}

TEST_CASE("cli edit run is deterministic modulo timings") {
    TempDir tmp;
    auto in = tmp / "g.gr";
    write_graph_file(in, random_graph(7, 0.5, 31));
    auto out1 = tmp / "a.json";
    auto out2 = tmp / "b.json";
    std::vector<std::string> args = {"edit", "--class", "degeneracy",
                                     "--algo", "lp-vertex", "--r", "1",
                                     "--seed", "9", "-i", in, "-o", out1};
    CHECK(cli::run(args) == cli::kExitOk);
    args.back() = out2;
    CHECK(cli::run(args) == cli::kExitOk);
    auto a = strip_timings(json::parse(read_text_file(out1)));
    auto b = strip_timings(json::parse(read_text_file(out2)));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("cli check validates and rejects") {
    TempDir tmp;
    auto in = tmp / "g.gr";
    write_graph_file(in, cycle(6));
    auto out = tmp / "r.json";
    CHECK(cli::run({"edit", "--class", "degeneracy", "--algo", "by-one",
                    "--mode", "edge", "-i", in, "-o", out}) == cli::kExitOk);
    CHECK(cli::run({"check", "--certificate", out, "-i", in}) ==
          cli::kExitOk);
    // tamper with the claim
    auto j = json::parse(read_text_file(out));
    j["achieved"]["value"] = 0;
    write_text_file(out, j.dump());
    CHECK(cli::run({"check", "--certificate", out, "-i", in}) ==
          cli::kExitInvalid);
}

TEST_CASE("cli exit codes for input and budget errors") {
    TempDir tmp;
    auto bad = tmp / "bad.gr";
    write_text_file(bad, "this is not a graph\n");
    CHECK(cli::run({"edit", "--class", "degeneracy", "--algo", "local-ratio",
                    "-i", bad, "-o", tmp / "r.json"}) ==
          cli::kExitInputError);

    auto big = tmp / "big.gr";
    write_graph_file(big, random_graph(17, 0.4, 3));
    CHECK(cli::run({"oracle", "--what", "treewidth", "-i", big}) ==
          cli::kExitBudgetError);
}

TEST_CASE("cli gen writes a loadable gadget with roles") {
    TempDir tmp;
    auto sc = tmp / "sc.json";
    write_text_file(sc, "{\"universe\": 3, \"sets\": [[0,1],[1,2],[2]]}\n");
    auto g = tmp / "g.gr";
    auto roles = tmp / "roles.json";
    CHECK(cli::run({"gen", "--gadget", "sc-tw", "--sc", sc, "-o", g,
                    "--roles", roles}) == cli::kExitOk);
    Graph gadget = read_graph_file(g);
    CHECK(gadget.num_vertices() == 7);
    auto j = json::parse(read_text_file(roles));
    CHECK(j["gadget"] == "sc-tw");
    CHECK(j["target"]["value"] == 1);
}

TEST_CASE("cli jobs fan out over multiple inputs") {
    TempDir tmp;
    auto in1 = tmp / "a.gr";
    auto in2 = tmp / "b.gr";
    write_graph_file(in1, cycle(5));
    write_graph_file(in2, complete(5));
    fs::create_directories(fs::path(tmp / "out"));
    CHECK(cli::run({"edit", "--class", "degeneracy", "--algo", "local-ratio",
                    "--r", "1", "-i", in1, "-i", in2, "-o", tmp / "out",
                    "--jobs", "2"}) == cli::kExitOk);
    CHECK(fs::exists(fs::path(tmp / "out") / "a.json"));
    CHECK(fs::exists(fs::path(tmp / "out") / "b.json"));
}
