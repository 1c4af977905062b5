#pragma once

#include <string>

#include "json.hpp"

#include "grest/graph.hpp"
#include "grest/instances.hpp"
#include "grest/width_edit.hpp"

namespace grest {

// Text graph format, one record per line, 0-based ids:
//   c <comment>
//   p <n> <m>
//   v <id> <weight>        (optional; weights default to 1)
//   e <u> <v> [weight]
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);  // requires all ids live
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// {"universe": N, "sets": [[...], ...]} with 0-based elements
SetCoverInstance parse_set_cover(const std::string& text);
std::string format_set_cover(const SetCoverInstance& sc);
SetCoverInstance read_set_cover_file(const std::string& path);

nlohmann::json roles_to_json(const GadgetArtifact& a);

// FNV-1a 64-bit over the raw bytes, hex-encoded
std::string content_digest(const std::string& bytes);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// ---- certificates and reports -------------------------------------------

nlohmann::json ordering_to_json(const VertexOrdering& L);
nlohmann::json orientation_to_json(const Orientation& o);
nlohmann::json decomposition_to_json(const TreeDecomposition& td);
nlohmann::json path_decomposition_to_json(const PathDecomposition& pd);

VertexOrdering ordering_from_json(const Graph& g, const nlohmann::json& j);
Orientation orientation_from_json(const nlohmann::json& j);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);
PathDecomposition path_decomposition_from_json(const nlohmann::json& j);

nlohmann::json edit_set_to_json(const EditSet& x);
EditSet edit_set_from_json(const Graph& g, const nlohmann::json& j);

struct ReportDocument {
    std::string tool_name = "grest";
    std::string tool_version;
    std::string input_path;
    std::string input_digest;
    std::string subcommand;
    nlohmann::json parameters;
    unsigned long seed = 0;
    EditSet edits;
    std::string achieved_parameter;  // degeneracy | tw | pw | maxdeg | wcol
    long achieved_value = 0;
    nlohmann::json certificate;
    nlohmann::json oracle;   // optional comparison block
    nlohmann::json timings;  // excluded from determinism comparisons
};

nlohmann::json report_to_json(const ReportDocument& r);
ReportDocument report_from_json(const nlohmann::json& j);

// Re-validates the certificate against the edited graph: applies the edit
// set and checks the claimed parameter is certified.
bool validate_report(const Graph& g, const ReportDocument& r,
                     std::string* why = nullptr);

}  // namespace grest
