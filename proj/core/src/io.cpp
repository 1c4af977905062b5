#include "grest/io.hpp"

#include <fstream>
#include <sstream>

#include "grest/combinatorial_edit.hpp"
#include "grest/wcol.hpp"

namespace grest {

using nlohmann::json;

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    long declared_m = 0, seen_m = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        auto bad = [&](const std::string& what) {
            throw input_error("graph line " + std::to_string(lineno) + ": " +
                              what);
        };
        if (tag == "p") {
            long n;
            if (!(ls >> n >> declared_m)) bad("expected 'p <n> <m>'");
            if (g) bad("duplicate p line");
            g = Graph(static_cast<int>(n));
        } else if (tag == "v") {
            if (!g) bad("v before p");
            int id;
            std::string w;
            if (!(ls >> id >> w)) bad("expected 'v <id> <weight>'");
            if (!g->is_live(id)) bad("vertex id out of range");
            g->set_vertex_weight(id, parse_rational(w));
        } else if (tag == "e") {
            if (!g) bad("e before p");
            int u, v;
            if (!(ls >> u >> v)) bad("expected 'e <u> <v> [weight]'");
            std::string w;
            Rational weight = 1;
            if (ls >> w) weight = parse_rational(w);
            if (!g->is_live(u) || !g->is_live(v)) bad("endpoint out of range");
            try {
                g->add_edge(u, v, weight);
            } catch (const input_error& e) {
                bad(e.what());
            }
            ++seen_m;
        } else {
            bad("unknown record '" + tag + "'");
        }
    }
    if (!g) throw input_error("graph file has no p line");
    if (seen_m != declared_m)
        throw input_error("graph file declares " +
                          std::to_string(declared_m) + " edges but has " +
                          std::to_string(seen_m));
    return *g;
}

std::string format_graph(const Graph& g) {
    if (g.num_vertices() != g.id_bound())
        throw input_error("format_graph: graph has deleted ids; emit the "
                          "edit set instead");
    std::ostringstream os;
    os << "p " << g.id_bound() << " " << g.num_edges() << "\n";
    for (int v : g.vertices())
        if (g.vertex_weight(v) != 1)
            os << "v " << v << " " << rational_to_string(g.vertex_weight(v))
               << "\n";
    for (auto [u, v] : g.edges()) {
        os << "e " << u << " " << v;
        if (g.edge_weight(u, v) != 1)
            os << " " << rational_to_string(g.edge_weight(u, v));
        os << "\n";
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << text;
}

Graph read_graph_file(const std::string& path) {
    return parse_graph(read_text_file(path));
}

void write_graph_file(const std::string& path, const Graph& g) {
    write_text_file(path, format_graph(g));
}

SetCoverInstance parse_set_cover(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("set cover json: ") + e.what());
    }
    SetCoverInstance sc;
    if (!j.contains("universe") || !j.contains("sets"))
        throw input_error("set cover json needs 'universe' and 'sets'");
    sc.universe = j["universe"].get<int>();
    for (auto& s : j["sets"]) {
        std::vector<int> set = s.get<std::vector<int>>();
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        sc.sets.push_back(std::move(set));
    }
    sc.validate();
    return sc;
}

std::string format_set_cover(const SetCoverInstance& sc) {
    json j;
    j["universe"] = sc.universe;
    j["sets"] = sc.sets;
    return j.dump(2) + "\n";
}

SetCoverInstance read_set_cover_file(const std::string& path) {
    return parse_set_cover(read_text_file(path));
}

json roles_to_json(const GadgetArtifact& a) {
    json j;
    j["gadget"] = a.kind;
    j["target"] = {{"parameter", a.target_param}, {"value", a.target_value}};
    json roles = json::object();
    for (const auto& [name, ids] : a.roles) roles[name] = ids;
    j["roles"] = roles;
    return j;
}

std::string content_digest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json ordering_to_json(const VertexOrdering& L) {
    return {{"type", "ordering"}, {"order", L.order}};
}

json orientation_to_json(const Orientation& o) {
    json arcs = json::array();
    for (auto [u, v] : o.arcs) arcs.push_back({u, v});
    return {{"type", "orientation"}, {"arcs", arcs}};
}

json decomposition_to_json(const TreeDecomposition& td) {
    json edges = json::array();
    for (auto [a, b] : td.tree) edges.push_back({a, b});
    return {{"type", "tree-decomposition"},
            {"bags", td.bags},
            {"edges", edges},
            {"root", td.root}};
}

json path_decomposition_to_json(const PathDecomposition& pd) {
    return {{"type", "path-decomposition"}, {"bags", pd.bags}};
}

VertexOrdering ordering_from_json(const Graph& g, const json& j) {
    return make_ordering(g, j.at("order").get<std::vector<int>>());
}

Orientation orientation_from_json(const json& j) {
    Orientation o;
    for (auto& arc : j.at("arcs"))
        o.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
    return o;
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition td;
    td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
    for (auto& e : j.at("edges"))
        td.tree.push_back({e[0].get<int>(), e[1].get<int>()});
    td.root = j.at("root").get<int>();
    return td;
}

PathDecomposition path_decomposition_from_json(const json& j) {
    PathDecomposition pd;
    pd.bags = j.at("bags").get<std::vector<std::vector<int>>>();
    return pd;
}

json edit_set_to_json(const EditSet& x) {
    json j;
    j["kind"] = x.kind == EditKind::vertex ? "vertex" : "edge";
    if (x.kind == EditKind::vertex) {
        j["elements"] = x.vertices;
    } else {
        json es = json::array();
        for (auto [u, v] : x.edges) es.push_back({u, v});
        j["elements"] = es;
    }
    j["total_weight"] = rational_to_string(x.total_weight);
    return j;
}

EditSet edit_set_from_json(const Graph& g, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "vertex")
        return make_vertex_edit(g, j.at("elements").get<std::vector<int>>());
    std::vector<Edge> es;
    for (auto& e : j.at("elements"))
        es.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    return make_edge_edit(g, es);
}

json report_to_json(const ReportDocument& r) {
    json j;
    j["tool"] = {{"name", r.tool_name}, {"version", r.tool_version}};
    j["input"] = {{"path", r.input_path}, {"digest", r.input_digest}};
    j["command"] = {{"subcommand", r.subcommand},
                    {"parameters", r.parameters}};
    j["seed"] = r.seed;
    j["edit"] = edit_set_to_json(r.edits);
    j["achieved"] = {{"parameter", r.achieved_parameter},
                     {"value", r.achieved_value},
                     {"certificate", r.certificate}};
    if (!r.oracle.is_null()) j["oracle"] = r.oracle;
    if (!r.timings.is_null()) j["timings"] = r.timings;
    return j;
}

ReportDocument report_from_json(const json& j) {
    ReportDocument r;
    r.tool_name = j.at("tool").at("name").get<std::string>();
    r.tool_version = j.at("tool").at("version").get<std::string>();
    r.input_path = j.at("input").at("path").get<std::string>();
    r.input_digest = j.at("input").at("digest").get<std::string>();
    r.subcommand = j.at("command").at("subcommand").get<std::string>();
    r.parameters = j.at("command").at("parameters");
    r.seed = j.at("seed").get<unsigned long>();
    r.achieved_parameter =
        j.at("achieved").at("parameter").get<std::string>();
    r.achieved_value = j.at("achieved").at("value").get<long>();
    r.certificate = j.at("achieved").at("certificate");
    if (j.contains("oracle")) r.oracle = j.at("oracle");
    if (j.contains("timings")) r.timings = j.at("timings");
    // the edit set is rebuilt against the host graph by the caller
    r.edits.kind = j.at("edit").at("kind").get<std::string>() == "vertex"
                       ? EditKind::vertex
                       : EditKind::edge;
    if (r.edits.kind == EditKind::vertex) {
        r.edits.vertices = j.at("edit").at("elements").get<std::vector<int>>();
    } else {
        for (auto& e : j.at("edit").at("elements"))
            r.edits.edges.push_back(
                make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return r;
}

bool validate_report(const Graph& g, const ReportDocument& r,
                     std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    EditSet edits;
    try {
        edits = r.edits.kind == EditKind::vertex
                    ? make_vertex_edit(g, r.edits.vertices)
                    : make_edge_edit(g, r.edits.edges);
    } catch (const input_error& e) {
        return fail(std::string("edit set invalid: ") + e.what());
    }
    Graph after = apply_edits(g, edits);
    const std::string& p = r.achieved_parameter;
    try {
        if (p == "degeneracy") {
            if (degeneracy(after).degeneracy > r.achieved_value)
                return fail("edited degeneracy above the claim");
            if (r.certificate.value("type", "") == "ordering") {
                auto L = ordering_from_json(after, r.certificate);
                if (max_forward_degree(after, L) > r.achieved_value)
                    return fail("ordering does not witness the claim");
            } else if (r.certificate.value("type", "") == "orientation") {
                auto o = orientation_from_json(r.certificate);
                if (!o.covers(after))
                    return fail("orientation does not cover the survivors");
            }
        } else if (p == "tw") {
            auto td = decomposition_from_json(r.certificate);
            std::string w;
            if (!validate_decomposition(after, td, &w))
                return fail("invalid decomposition: " + w);
            if (td.width() > r.achieved_value)
                return fail("decomposition wider than the claim");
        } else if (p == "pw") {
            auto pd = path_decomposition_from_json(r.certificate);
            std::string w;
            if (!validate_path_decomposition(after, pd, &w))
                return fail("invalid path decomposition: " + w);
            if (pd.width() > r.achieved_value)
                return fail("path decomposition wider than the claim");
        } else if (p == "maxdeg") {
            if (after.max_degree() > r.achieved_value)
                return fail("edited max degree above the claim");
        } else if (p == "star-forest") {
            if (!is_star_forest(after))
                return fail("edited graph is not a star forest");
        } else if (p == "wcol") {
            int c = r.parameters.value("c", 1);
            auto L = ordering_from_json(after, r.certificate);
            if (wcol_score(after, L, c).score > r.achieved_value)
                return fail("ordering does not witness the wcol claim");
        } else {
            return fail("unknown achieved parameter '" + p + "'");
        }
    } catch (const std::exception& e) {
        return fail(std::string("certificate rejected: ") + e.what());
    }
    return true;
}

}  // namespace grest
