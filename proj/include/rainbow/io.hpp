#pragma once

// Instance documents (JSON), the family registry behind `rainbow_forge build`,
// claim verification and DOT export.

#include "rainbow/designs.hpp"
#include "rainbow/families.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/listcolor.hpp"
#include "rainbow/solver.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow::io {

using json = nlohmann::json;

inline constexpr const char* schema_version = "1.0";
inline constexpr const char* artifact_version = "0.1.0";

/// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string builder;
    json parameters = json::object();
    std::string artifact_version = io::artifact_version;

    bool operator==(const Provenance&) const = default;
};

/// Where each edge and vertex of a list-cover document comes from.
struct CoverOrigin {
    std::vector<std::pair<EdgeId, Color>> edges;
    std::vector<std::pair<Color, VertexId>> vertices;

    bool operator==(const CoverOrigin&) const = default;
};

/// The classes are kept as written so that a document whose coloring is not
/// a partition still parses; instance() enforces the partition.
struct InstanceDocument {
    std::string schema_version = io::schema_version;
    MultiHypergraph hypergraph;
    std::vector<std::vector<EdgeId>> classes;
    std::vector<std::string> labels;
    std::optional<ClaimManifest> manifest;
    Provenance provenance;
    std::optional<ListInstance> list_instance;
    std::optional<CoverOrigin> cover_origin;

    /// Throws std::invalid_argument unless the classes partition the edges.
    ColoredHypergraph instance() const;

    bool operator==(const InstanceDocument&) const = default;
};

InstanceDocument make_document(const ColoredHypergraph& instance, std::optional<ClaimManifest> manifest,
                               Provenance provenance);

json manifest_to_json(const ClaimManifest& manifest);
ClaimManifest manifest_from_json(const json& j);

json list_instance_to_json(const ListInstance& li);
ListInstance list_instance_from_json(const json& j);

json document_to_json(const InstanceDocument& doc);
InstanceDocument document_from_json(const json& j);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const InstanceDocument& doc);
InstanceDocument parse_document(const std::string& text);

/// {"r": n, "mols": [square, ...]} or {"r": n, "classes": [[[v, ...], ...], ...]}.
/// Throws ParseError on a malformed or invalid net.
Net net_from_json(const json& j);
json net_to_json(const Net& net);

/// Graphviz rendering: plain edges for graphs, incidence stars (a small
/// point node per edge) for 3-graphs. Edge colors follow the class index.
/// Throws std::invalid_argument for edges with more than three vertices.
std::string export_dot(const ColoredHypergraph& instance);

struct ParamSpec {
    std::string name;
    std::string help;
    std::optional<long long> default_value;
};

struct FamilySpec {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;
    bool accepts_net = false;  // example2, example3 and small_n take an optional net
};

const std::vector<FamilySpec>& family_registry();

struct FamilyParams {
    std::map<std::string, long long> values;
    std::optional<Net> net;
};

/// Builds a registered family. Throws std::invalid_argument for an unknown
/// family, a missing or negative parameter, or a failed builder guard.
InstanceDocument build_family(const std::string& name, const FamilyParams& params);

enum class Verdict { verified, claim_failure, inconclusive };

struct VerificationReport {
    Verdict verdict = Verdict::verified;
    json report;
};

/// Re-derives every manifest claim and runs the solver against the frm_free
/// claim. The solver result is reported even when freeness is not claimed.
VerificationReport verify_document(const InstanceDocument& doc, const SolveOptions& options = {});

std::string to_string(Verdict verdict);

json solve_report_to_json(const SolveReport& report);

}  // namespace rainbow::io
