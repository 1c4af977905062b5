#include "grest/cli_app.hpp"

#include <chrono>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"

#include "grest/combinatorial_edit.hpp"
#include "grest/degeneracy_edit.hpp"
#include "grest/io.hpp"
#include "grest/oracles.hpp"
#include "grest/rounding.hpp"
#include "grest/wcol.hpp"

namespace grest::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct EditOptions {
    std::vector<std::string> inputs;
    std::string output;
    std::string cls = "degeneracy";
    std::string algo;
    std::string mode = "vertex";
    int r = 1, w = 1, d = 1, c = 2, k = 2, dsteps = 1;
    std::string beta = "4";
    std::string eps;
    std::string base = "local-ratio";
    std::string c1 = "1";
    unsigned long seed = 0;
    int jobs = 1;
    bool with_oracle = false;
};

std::string default_eps(const std::string& cls, const std::string& algo) {
    if (cls == "degeneracy" && algo == "lp-vertex") return "1/6";
    if (cls == "degeneracy" && algo == "lp-edge") return "1/5";
    return "1/5";
}

// runs one editor invocation and fills the achieved/certificate block
ReportDocument run_edit_once(const EditOptions& opt,
                             const std::string& input) {
    auto t0 = Clock::now();
    std::string text = read_text_file(input);
    Graph g = parse_graph(text);
    ReportDocument rep;
    rep.tool_version = kVersion;
    rep.input_path = input;
    rep.input_digest = content_digest(text);
    rep.subcommand = "edit";
    rep.seed = opt.seed;
    EditKind kind = opt.mode == "edge" ? EditKind::edge : EditKind::vertex;
    json params = {{"class", opt.cls}, {"algo", opt.algo},
                   {"mode", opt.mode}};

    if (opt.cls == "degeneracy") {
        params["r"] = opt.r;
        if (opt.algo == "local-ratio") {
            params["beta"] = opt.beta;
            rep.edits = local_ratio_vertex_edit(g, opt.r,
                                                parse_rational(opt.beta));
        } else if (opt.algo == "lp-vertex" || opt.algo == "lp-edge") {
            std::string eps = opt.eps.empty()
                                  ? default_eps(opt.cls, opt.algo)
                                  : opt.eps;
            params["eps"] = eps;
            auto res = opt.algo == "lp-vertex"
                           ? lp_vertex_edit(g, opt.r, parse_rational(eps))
                           : lp_edge_edit(g, opt.r, parse_rational(eps));
            rep.edits = res.edits;
            rep.certificate = orientation_to_json(res.orientation);
        } else if (opt.algo == "by-one") {
            rep.edits = degen_reduce_by_one(g, kind);
        } else if (opt.algo == "by-d") {
            params["d"] = opt.dsteps;
            rep.edits = degen_reduce_by_d(g, opt.dsteps, kind);
        } else if (opt.algo == "to-r") {
            params["base"] = opt.base;
            DegenBaseEditor base = DegenBaseEditor::local_ratio;
            if (opt.base == "lp-vertex") base = DegenBaseEditor::lp_vertex;
            if (opt.base == "lp-edge") base = DegenBaseEditor::lp_edge;
            rep.edits = degen_reduce_to_r(g, opt.r, base, kind);
        } else {
            throw input_error(
                "unknown degeneracy algorithm '" + opt.algo +
                "'; valid: local-ratio lp-vertex lp-edge by-one by-d to-r");
        }
        Graph after = apply_edits(g, rep.edits);
        auto res = degeneracy(after);
        rep.achieved_parameter = "degeneracy";
        rep.achieved_value = res.degeneracy;
        if (rep.certificate.is_null())
            rep.certificate = ordering_to_json(res.order);
        if (opt.with_oracle) {
            auto os = exact_min_edit_size(
                g, {EditPredicate::degeneracy_le, opt.r, 1}, kind);
            rep.oracle = {{"optimum", os},
                          {"ratio", os > 0 ? static_cast<double>(
                                                 rep.edits.size()) /
                                                 static_cast<double>(os)
                                           : 0.0}};
        }
    } else if (opt.cls == "treewidth" || opt.cls == "pathwidth") {
        params["w"] = opt.w;
        params["c1"] = opt.c1;
        WidthEditConfig cfg;
        cfg.c1 = parse_rational(opt.c1);
        if (opt.cls == "treewidth") {
            auto res = treewidth_node_edit(g, opt.w, cfg);
            rep.edits = res.edits;
            rep.achieved_parameter = "tw";
            rep.achieved_value = res.certificate.width();
            rep.certificate = decomposition_to_json(res.certificate);
        } else {
            auto res = pathwidth_node_edit(g, opt.w, cfg);
            rep.edits = res.edits;
            rep.achieved_parameter = "pw";
            rep.achieved_value = res.certificate.width();
            rep.certificate = path_decomposition_to_json(res.certificate);
        }
    } else if (opt.cls == "maxdeg") {
        params["d"] = opt.d;
        rep.edits = bounded_degree_edge_edit(g, opt.d);
        Graph after = apply_edits(g, rep.edits);
        rep.achieved_parameter = "maxdeg";
        rep.achieved_value = after.max_degree();
    } else if (opt.cls == "starforest") {
        rep.edits = kind == EditKind::vertex ? star_forest_vertex_edit(g)
                                             : star_forest_edge_edit(g);
        rep.achieved_parameter = "star-forest";
        rep.achieved_value = 2;  // treedepth of the target class
    } else if (opt.cls == "wcol") {
        params["c"] = opt.c;
        params["k"] = opt.k;
        std::string eps = opt.eps.empty() ? "1/5" : opt.eps;
        params["eps"] = eps;
        auto res = wc_edit(g, opt.c, opt.k, parse_rational(eps), kind);
        rep.edits = res.edits;
        Graph after = apply_edits(g, rep.edits);
        rep.achieved_parameter = "wcol";
        auto score = wcol_score(after, res.rounded.extracted_order, opt.c);
        // the extracted order reads back to front against the standard
        // reachability convention
        std::vector<int> rev(res.rounded.extracted_order.order.rbegin(),
                             res.rounded.extracted_order.order.rend());
        auto rscore = wcol_score(after, make_ordering(after, rev), opt.c);
        const auto& better =
            rscore.score < score.score ? rscore : score;
        rep.achieved_value = better.score;
        rep.certificate = ordering_to_json(
            rscore.score < score.score
                ? make_ordering(after, rev)
                : res.rounded.extracted_order);
    } else {
        throw input_error("unknown class '" + opt.cls +
                          "'; valid: degeneracy treewidth pathwidth maxdeg "
                          "starforest wcol");
    }
    rep.parameters = params;
    rep.timings = {{"seconds", seconds_since(t0)}};
    return rep;
}

int cmd_edit(const EditOptions& opt) {
    if (opt.inputs.empty()) throw input_error("edit needs an input graph");
    std::vector<std::string> outputs;
    if (opt.inputs.size() == 1) {
        outputs.push_back(opt.output);
    } else {
        for (const auto& in : opt.inputs) {
            auto slash = in.find_last_of('/');
            std::string stem = slash == std::string::npos
                                   ? in
                                   : in.substr(slash + 1);
            auto dot = stem.find_last_of('.');
            if (dot != std::string::npos) stem = stem.substr(0, dot);
            outputs.push_back(opt.output + "/" + stem + ".json");
        }
    }
    std::mutex failures_mutex;
    std::vector<std::string> failures;
    auto work = [&](size_t i) {
        try {
            auto rep = run_edit_once(opt, opt.inputs[i]);
            write_text_file(outputs[i], report_to_json(rep).dump(2) + "\n");
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(failures_mutex);
            failures.push_back(opt.inputs[i] + ": " + e.what());
        }
    };
    if (opt.jobs <= 1 || opt.inputs.size() == 1) {
        for (size_t i = 0; i < opt.inputs.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        int jobs = std::min<int>(opt.jobs,
                                 static_cast<int>(opt.inputs.size()));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < opt.inputs.size(); i = next++)
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    if (!failures.empty()) {
        for (const auto& f : failures) std::cerr << "error: " << f << "\n";
        throw input_error("some inputs failed");
    }
    return kExitOk;
}

struct RoundOptions {
    std::string input;
    std::string output;
    std::string problem = "IS";
    std::string op = "vertex";
    std::string editor = "lp-vertex";
    std::string solver = "brute";
    int r = 1;
    std::string eps;
    int ell = 1;
    std::string annotated;  // comma-separated ids
    unsigned long seed = 0;
    bool with_oracle = false;
};

int cmd_round(const RoundOptions& opt) {
    auto t0 = Clock::now();
    std::string text = read_text_file(opt.input);
    Graph g = parse_graph(text);
    auto pid = problem_from_name(opt.problem);
    if (!pid) throw input_error("unknown problem '" + opt.problem + "'");
    EditOp op = EditOp::vertex_deletion;
    if (opt.op == "edge") op = EditOp::edge_deletion;
    else if (opt.op == "vertex*") op = EditOp::vertex_star_deletion;
    else if (opt.op != "vertex")
        throw input_error("unknown edit op '" + opt.op + "'");

    AnnotatedInstance ann;
    const AnnotatedInstance* annp = nullptr;
    if (!opt.annotated.empty() || *pid == ProblemId::ADS) {
        ann.ell = opt.ell;
        std::istringstream as(opt.annotated);
        std::string tok;
        while (std::getline(as, tok, ','))
            if (!tok.empty()) ann.annotated.push_back(std::stoi(tok));
        if (ann.annotated.empty()) ann.annotated = g.vertices();
        std::sort(ann.annotated.begin(), ann.annotated.end());
        annp = &ann;
    }

    Rational eps = opt.eps.empty()
                       ? (op == EditOp::edge_deletion ? Rational(1, 5)
                                                      : Rational(1, 6))
                       : parse_rational(opt.eps);
    Editor editor;
    if (opt.editor == "lp-vertex")
        editor = [&, eps](const Graph& h) {
            return lp_vertex_edit(h, opt.r, eps).edits;
        };
    else if (opt.editor == "lp-edge")
        editor = [&, eps](const Graph& h) {
            return lp_edge_edit(h, opt.r, eps).edits;
        };
    else if (opt.editor == "local-ratio")
        editor = [&](const Graph& h) {
            return local_ratio_vertex_edit(h, opt.r, 4);
        };
    else
        throw input_error("unknown editor '" + opt.editor +
                          "'; valid: lp-vertex lp-edge local-ratio");

    PipelineConfig cfg;
    cfg.solver = opt.solver == "dp" ? SolverKind::tree_dp
                 : opt.solver == "greedy" ? SolverKind::degeneracy_greedy
                                          : SolverKind::brute_force;
    cfg.measure_against_oracles = opt.with_oracle;
    cfg.edit_target = EditTarget{EditPredicate::degeneracy_le, opt.r, 1};
    auto rep = structural_round(g, editor, *pid, op, annp, cfg);

    json out;
    out["tool"] = {{"name", "grest"}, {"version", kVersion}};
    out["input"] = {{"path", opt.input}, {"digest", content_digest(text)}};
    out["command"] = {{"subcommand", "round"},
                      {"parameters",
                       {{"problem", opt.problem},
                        {"op", opt.op},
                        {"editor", opt.editor},
                        {"solver", opt.solver},
                        {"r", opt.r}}}};
    out["seed"] = opt.seed;
    out["edit"] = edit_set_to_json(rep.edits);
    out["solution"] = {{"edited",
                        {{"vertices", rep.edited_solution.vertices},
                         {"cost", rep.edited_cost}}},
                       {"lifted",
                        {{"vertices", rep.lifted_solution.vertices},
                         {"cost", rep.lifted_cost}}}};
    json edited_edges = json::array(), lifted_edges = json::array();
    for (auto [u, v] : rep.edited_solution.edges)
        edited_edges.push_back({u, v});
    for (auto [u, v] : rep.lifted_solution.edges)
        lifted_edges.push_back({u, v});
    out["solution"]["edited"]["edges"] = edited_edges;
    out["solution"]["lifted"]["edges"] = lifted_edges;
    out["constants"] = {{"c", rep.c}, {"cprime", rep.cprime},
                        {"rho", rep.rho}};
    out["cost_relation_holds"] = rep.cost_relation_holds;
    if (rep.opt_edit) out["oracle"]["opt_edit"] = *rep.opt_edit;
    if (rep.alpha_hat) out["oracle"]["alpha_hat"] = *rep.alpha_hat;
    if (rep.opt_problem) out["oracle"]["opt_problem"] = *rep.opt_problem;
    if (rep.alphadelta_hat)
        out["oracle"]["alphadelta_hat"] = *rep.alphadelta_hat;
    if (rep.implied_factor)
        out["oracle"]["implied_factor"] = *rep.implied_factor;
    out["factor_conditional"] = rep.factor_conditional;
    out["timings"] = {{"seconds", seconds_since(t0)}};
    if (opt.output.empty())
        std::cout << out.dump(2) << "\n";
    else
        write_text_file(opt.output, out.dump(2) + "\n");
    return kExitOk;
}

struct GenOptions {
    std::string gadget = "sc-tw";
    std::string sc_path;
    std::string input;       // base graph for vc-sf
    std::string output;
    std::string roles_path;
    std::string mode = "edge";
    std::string cls = "forest";
    int r = 2, c = 3, n = 3, nverts = 10, param = 1, gamma = 0;
    double p = 0.3;
    unsigned long seed = 0;
};

int cmd_gen(const GenOptions& opt) {
    json sidecar;
    Graph out_graph;
    if (opt.gadget == "sc-tw" || opt.gadget == "sc-bdd" ||
        opt.gadget == "sc-de" || opt.gadget == "wcn") {
        if (opt.sc_path.empty())
            throw input_error("gadget generation needs --sc");
        auto sc = read_set_cover_file(opt.sc_path);
        GadgetArtifact a;
        if (opt.gadget == "sc-tw") a = gen_tw_gadget(sc);
        else if (opt.gadget == "sc-bdd") a = gen_bdd_gadget(sc);
        else if (opt.gadget == "sc-de") a = gen_de_gadget(sc, opt.r);
        else a = gen_wcn_gadget(sc, opt.c);
        out_graph = a.graph;
        sidecar = roles_to_json(a);
    } else if (opt.gadget == "vc-sf") {
        if (opt.input.empty()) throw input_error("vc-sf needs -i");
        auto a = gen_sf_vertex_gadget(read_graph_file(opt.input));
        out_graph = a.graph;
        sidecar = roles_to_json(a);
    } else if (opt.gadget == "gap") {
        auto inst = gen_integrality_gap(opt.n);
        out_graph = inst.graph;
        sidecar = {{"gadget", "gap"},
                   {"target", {{"parameter", "r"}, {"value", inst.r}}}};
    } else if (opt.gadget == "planted") {
        PlantedClass cls = PlantedClass::forest;
        if (opt.cls == "degenerate") cls = PlantedClass::degenerate;
        else if (opt.cls == "ktree") cls = PlantedClass::ktree;
        else if (opt.cls != "forest")
            throw input_error("unknown planted class '" + opt.cls + "'");
        auto inst = gen_planted(cls, opt.nverts, opt.param, opt.gamma,
                                opt.mode == "edge" ? EditKind::edge
                                                   : EditKind::vertex,
                                opt.seed);
        out_graph = inst.graph;
        sidecar = {{"gadget", "planted"},
                   {"class", opt.cls},
                   {"param", inst.param},
                   {"planted", edit_set_to_json(inst.planted)},
                   {"seed", opt.seed}};
    } else if (opt.gadget == "random") {
        out_graph = gen_random_graph(opt.nverts, opt.p, opt.seed);
        sidecar = {{"gadget", "random"}, {"n", opt.nverts}, {"p", opt.p},
                   {"seed", opt.seed}};
    } else {
        throw input_error("unknown gadget '" + opt.gadget +
                          "'; valid: sc-tw sc-bdd sc-de vc-sf wcn gap "
                          "planted random");
    }
    if (opt.output.empty()) throw input_error("gen needs -o");
    write_graph_file(opt.output, out_graph);
    if (!opt.roles_path.empty())
        write_text_file(opt.roles_path, sidecar.dump(2) + "\n");
    return kExitOk;
}

int cmd_check(const std::string& report_path, const std::string& graph_path) {
    Graph g = read_graph_file(graph_path);
    auto rep = report_from_json(
        nlohmann::json::parse(read_text_file(report_path)));
    std::string why;
    if (!validate_report(g, rep, &why)) {
        std::cerr << "certificate invalid: " << why << "\n";
        return kExitInvalid;
    }
    std::cout << "certificate valid\n";
    return kExitOk;
}

struct OracleOptions {
    std::string what = "treewidth";
    std::string input;
    std::string sc_path;
    std::string output;
    std::string predicate = "degeneracy";
    std::string mode = "vertex";
    std::string problem = "IS";
    int value = 1, c = 2;
};

int cmd_oracle(const OracleOptions& opt) {
    json out;
    if (opt.what == "treewidth") {
        out["treewidth"] = exact_treewidth(read_graph_file(opt.input));
    } else if (opt.what == "clique") {
        out["clique_number"] = exact_clique_number(read_graph_file(opt.input));
    } else if (opt.what == "wcol") {
        out["wcol"] = exact_wcol(read_graph_file(opt.input), opt.c);
        out["c"] = opt.c;
    } else if (opt.what == "setcover") {
        auto cover = exact_set_cover(read_set_cover_file(opt.sc_path));
        out["cover"] = cover;
        out["size"] = cover.size();
    } else if (opt.what == "opt") {
        auto pid = problem_from_name(opt.problem);
        if (!pid) throw input_error("unknown problem '" + opt.problem + "'");
        out["problem"] = opt.problem;
        out["optimum"] = exact_opt(*pid, read_graph_file(opt.input)).cost;
    } else if (opt.what == "min-edit") {
        EditTarget t;
        if (opt.predicate == "degeneracy")
            t = {EditPredicate::degeneracy_le, opt.value, 1};
        else if (opt.predicate == "maxdeg")
            t = {EditPredicate::maxdeg_le, opt.value, 1};
        else if (opt.predicate == "starforest")
            t = {EditPredicate::star_forest, 0, 1};
        else if (opt.predicate == "tw")
            t = {EditPredicate::tw_le, opt.value, 1};
        else if (opt.predicate == "wcol")
            t = {EditPredicate::wcol_le, opt.value, opt.c};
        else
            throw input_error("unknown predicate '" + opt.predicate + "'");
        Graph g = read_graph_file(opt.input);
        auto x = exact_min_edit(g, t,
                                opt.mode == "edge" ? EditKind::edge
                                                   : EditKind::vertex);
        out["edit"] = edit_set_to_json(x);
        out["size"] = x.size();
    } else {
        throw input_error("unknown oracle '" + opt.what +
                          "'; valid: treewidth clique wcol setcover opt "
                          "min-edit");
    }
    if (opt.output.empty())
        std::cout << out.dump(2) << "\n";
    else
        write_text_file(opt.output, out.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"graph class editing with structural rounding"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    EditOptions eo;
    auto* edit = app.add_subcommand("edit", "edit a graph into a class");
    edit->add_option("-i,--input", eo.inputs, "input graph(s)")->required();
    edit->add_option("-o,--output", eo.output,
                     "report path (directory with multiple inputs)")
        ->required();
    edit->add_option("--class", eo.cls, "target class");
    edit->add_option("--algo", eo.algo, "algorithm");
    edit->add_option("--mode", eo.mode, "vertex|edge");
    edit->add_option("--r", eo.r, "target degeneracy");
    edit->add_option("--w", eo.w, "target width");
    edit->add_option("--d", eo.d, "target max degree (or by-d steps)");
    edit->add_option("--steps", eo.dsteps, "stages for by-d");
    edit->add_option("--c", eo.c, "weak-coloring radius");
    edit->add_option("--k", eo.k, "weak-coloring target");
    edit->add_option("--beta", eo.beta, "local-ratio beta");
    edit->add_option("--eps", eo.eps, "LP rounding epsilon");
    edit->add_option("--base", eo.base, "base editor for to-r");
    edit->add_option("--c1", eo.c1, "width-edit threshold constant");
    edit->add_option("--seed", eo.seed, "seed recorded in the report");
    edit->add_option("--jobs", eo.jobs, "parallelism across input files");
    edit->add_flag("--oracle", eo.with_oracle,
                   "include the exact-optimum comparison");

    RoundOptions ro;
    auto* round = app.add_subcommand("round", "edit, solve, and lift");
    round->add_option("-i,--input", ro.input)->required();
    round->add_option("-o,--output", ro.output);
    round->add_option("--problem", ro.problem,
                      "IS VC FVS MMM CRN DS ADS EDS MaxCut");
    round->add_option("--op", ro.op, "vertex|edge|vertex*");
    round->add_option("--editor", ro.editor,
                      "lp-vertex|lp-edge|local-ratio");
    round->add_option("--solver", ro.solver, "dp|greedy|brute");
    round->add_option("--r", ro.r, "editor target degeneracy");
    round->add_option("--eps", ro.eps);
    round->add_option("--ell", ro.ell, "domination radius");
    round->add_option("--annotated", ro.annotated,
                      "comma-separated annotated vertices");
    round->add_option("--seed", ro.seed);
    round->add_flag("--oracle", ro.with_oracle);

    GenOptions go;
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("--gadget", go.gadget,
                    "sc-tw sc-bdd sc-de vc-sf wcn gap planted random");
    gen->add_option("--sc", go.sc_path, "set cover json");
    gen->add_option("-i,--input", go.input, "base graph for vc-sf");
    gen->add_option("-o,--output", go.output, "graph output")->required();
    gen->add_option("--roles", go.roles_path, "role sidecar json");
    gen->add_option("--r", go.r, "degeneracy gadget parameter");
    gen->add_option("--c", go.c, "weak-coloring radius");
    gen->add_option("--gap-n", go.n, "integrality gap n (graph K_{2n})");
    gen->add_option("--n", go.nverts, "vertex count");
    gen->add_option("--p", go.p, "edge probability");
    gen->add_option("--class", go.cls, "planted class");
    gen->add_option("--param", go.param, "planted class parameter");
    gen->add_option("--noise", go.gamma, "planted noise size");
    gen->add_option("--mode", go.mode, "planted noise kind");
    gen->add_option("--seed", go.seed);

    std::string check_report, check_graph;
    auto* check = app.add_subcommand("check", "re-validate a certificate");
    check->add_option("--certificate", check_report)->required();
    check->add_option("-i,--input", check_graph)->required();

    OracleOptions oo;
    auto* oracle = app.add_subcommand("oracle", "exact ground truth");
    oracle->add_option("--what", oo.what,
                       "treewidth clique wcol setcover opt min-edit");
    oracle->add_option("-i,--input", oo.input);
    oracle->add_option("--sc", oo.sc_path);
    oracle->add_option("-o,--output", oo.output);
    oracle->add_option("--predicate", oo.predicate);
    oracle->add_option("--mode", oo.mode);
    oracle->add_option("--problem", oo.problem);
    oracle->add_option("--value", oo.value);
    oracle->add_option("--c", oo.c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*edit) return cmd_edit(eo);
        if (*round) return cmd_round(ro);
        if (*gen) return cmd_gen(go);
        if (*check) return cmd_check(check_report, check_graph);
        if (*oracle) return cmd_oracle(oo);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudgetError;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace grest::cli
