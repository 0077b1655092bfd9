#include "rainbow/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace rainbow::io {

ColoredHypergraph InstanceDocument::instance() const
{
    return ColoredHypergraph(hypergraph, EdgeColoring(classes, labels));
}

InstanceDocument make_document(const ColoredHypergraph& instance, std::optional<ClaimManifest> manifest,
                               Provenance provenance)
{
    InstanceDocument doc;
    doc.hypergraph = instance.graph();
    doc.classes = instance.coloring().classes();
    doc.labels = instance.coloring().labels();
    doc.manifest = std::move(manifest);
    doc.provenance = std::move(provenance);
    return doc;
}

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& value)
{
    return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

json edges_to_json(const MultiHypergraph& g)
{
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        edges.push_back(g.edge(e).vertices);
    return edges;
}

MultiHypergraph hypergraph_from_json(const json& j)
{
    return MultiHypergraph(j.at("num_vertices").get<std::size_t>(),
                           j.at("edges").get<std::vector<std::vector<VertexId>>>());
}

/// Runs `fn`, turning schema and validation failures into ParseError.
template <typename Fn>
auto parsing(const char* what, Fn fn)
{
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json manifest_to_json(const ClaimManifest& m)
{
    json j;
    j["r"] = m.r;
    j["delta"] = m.delta;
    j["min_class_size"] = m.min_class_size;
    j["n_classes"] = m.n_classes;
    j["t_simple"] = optional_to_json(m.t_simple);
    j["proper"] = m.proper;
    j["chromatic_index"] = optional_to_json(m.chromatic_index);
    j["frm_free"] = optional_to_json(m.frm_free);
    j["partition_witness"] = m.partition_witness ? json(m.partition_witness->parts) : json(nullptr);
    j["bipartite"] = optional_to_json(m.bipartite);
    j["simple"] = optional_to_json(m.simple);
    j["notes"] = m.notes;
    return j;
}

ClaimManifest manifest_from_json(const json& j)
{
    return parsing("manifest", [&] {
        ClaimManifest m;
        m.r = j.at("r").get<std::size_t>();
        m.delta = j.at("delta").get<std::size_t>();
        m.min_class_size = j.at("min_class_size").get<std::size_t>();
        m.n_classes = j.at("n_classes").get<std::size_t>();
        m.t_simple = optional_from_json<std::size_t>(j, "t_simple");
        m.proper = j.value("proper", false);
        m.chromatic_index = optional_from_json<std::size_t>(j, "chromatic_index");
        m.frm_free = optional_from_json<bool>(j, "frm_free");
        if (auto parts = optional_from_json<std::vector<std::vector<VertexId>>>(j, "partition_witness"))
            m.partition_witness = PartitionWitness{std::move(*parts)};
        m.bipartite = optional_from_json<bool>(j, "bipartite");
        m.simple = optional_from_json<bool>(j, "simple");
        m.notes = j.value("notes", std::vector<std::string>{});
        return m;
    });
}

json list_instance_to_json(const ListInstance& li)
{
    return json{{"num_vertices", li.host.num_vertices()}, {"edges", edges_to_json(li.host)}, {"lists", li.lists}};
}

ListInstance list_instance_from_json(const json& j)
{
    return parsing("list_instance", [&] {
        auto edges = j.at("edges").get<std::vector<std::vector<VertexId>>>();
        std::size_t n = 0;
        for (const auto& e : edges)
            for (VertexId v : e)
                n = std::max<std::size_t>(n, v + 1);
        n = j.value("num_vertices", n);
        return make_list_instance(MultiHypergraph(n, std::move(edges)),
                                  j.at("lists").get<std::vector<std::vector<Color>>>());
    });
}

json document_to_json(const InstanceDocument& doc)
{
    json j;
    j["schema_version"] = doc.schema_version;
    j["hypergraph"] = {{"num_vertices", doc.hypergraph.num_vertices()}, {"edges", edges_to_json(doc.hypergraph)}};
    j["coloring"] = {{"classes", doc.classes}, {"labels", doc.labels}};
    j["manifest"] = doc.manifest ? manifest_to_json(*doc.manifest) : json(nullptr);
    j["provenance"] = {{"builder", doc.provenance.builder},
                       {"parameters", doc.provenance.parameters},
                       {"artifact_version", doc.provenance.artifact_version}};
    if (doc.list_instance)
        j["list_instance"] = list_instance_to_json(*doc.list_instance);
    if (doc.cover_origin)
        j["cover_origin"] = {{"edges", doc.cover_origin->edges}, {"vertices", doc.cover_origin->vertices}};
    return j;
}

InstanceDocument document_from_json(const json& j)
{
    return parsing("document", [&] {
        InstanceDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != schema_version)
            throw ParseError("document: unsupported schema_version " + doc.schema_version);
        doc.hypergraph = hypergraph_from_json(j.at("hypergraph"));
        const json& coloring = j.at("coloring");
        doc.classes = coloring.at("classes").get<std::vector<std::vector<EdgeId>>>();
        doc.labels = coloring.value("labels", std::vector<std::string>{});
        if (j.contains("manifest") && !j.at("manifest").is_null())
            doc.manifest = manifest_from_json(j.at("manifest"));
        if (j.contains("provenance")) {
            const json& p = j.at("provenance");
            doc.provenance.builder = p.value("builder", std::string{});
            doc.provenance.parameters = p.value("parameters", json::object());
            doc.provenance.artifact_version = p.value("artifact_version", std::string{});
        }
        if (j.contains("list_instance"))
            doc.list_instance = list_instance_from_json(j.at("list_instance"));
        if (j.contains("cover_origin")) {
            const json& o = j.at("cover_origin");
            doc.cover_origin = CoverOrigin{o.at("edges").get<std::vector<std::pair<EdgeId, Color>>>(),
                                           o.at("vertices").get<std::vector<std::pair<Color, VertexId>>>()};
        }
        return doc;
    });
}

std::string serialize(const InstanceDocument& doc)
{
    return document_to_json(doc).dump(2) + "\n";
}

InstanceDocument parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    return document_from_json(j);
}

Net net_from_json(const json& j)
{
    return parsing("net", [&] {
        const auto r = j.at("r").get<std::uint32_t>();
        if (j.contains("mols")) {
            std::vector<LatinSquare> squares;
            for (const auto& grid : j.at("mols"))
                squares.emplace_back(grid.get<std::vector<std::vector<std::uint32_t>>>());
            return net_from_mols(r, squares);
        }
        if (j.contains("classes")) {
            Net net = net_from_classes(r, j.at("classes").get<std::vector<std::vector<std::vector<VertexId>>>>());
            if (!validate_net(net))
                throw ParseError("net: the classes do not form a net");
            return net;
        }
        throw ParseError("net: expected a \"mols\" or \"classes\" field");
    });
}

json net_to_json(const Net& net)
{
    json classes = json::array();
    for (const auto& cls : net.parallel_classes) {
        json lines = json::array();
        for (EdgeId e : cls)
            lines.push_back(net.hypergraph.edge(e).vertices);
        classes.push_back(std::move(lines));
    }
    return json{{"r", net.r}, {"classes", std::move(classes)}};
}

std::string export_dot(const ColoredHypergraph& instance)
{
    static constexpr std::array<const char*, 12> palette = {
        "red",    "blue",  "darkgreen", "orange", "purple", "brown",
        "magenta", "cyan4", "gold3",    "gray40", "navy",   "olivedrab"};
    const auto& g = instance.graph();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (g.edge(e).vertices.size() > 3)
            throw std::invalid_argument("export_dot: edges with more than three vertices are not rendered");
    const auto class_of = instance.coloring().class_of_edges(g.num_edges());

    std::ostringstream out;
    out << "graph rainbow {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out << "  v" << v << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& vs = g.edge(e).vertices;
        const std::size_t cls = class_of[e];
        const std::string attrs = std::string("[color=\"") + palette[cls % palette.size()] + "\", label=\"" +
                                  std::to_string(cls) + "\"]";
        if (vs.size() == 2) {
            out << "  v" << vs[0] << " -- v" << vs[1] << " " << attrs << ";\n";
        } else {
            out << "  e" << e << " [shape=point, color=\"" << palette[cls % palette.size()] << "\"];\n";
            for (VertexId v : vs)
                out << "  e" << e << " -- v" << v << " " << attrs << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

// --- family registry -------------------------------------------------------

const std::vector<FamilySpec>& family_registry()
{
    static const std::vector<FamilySpec> registry = {
        {"example1", "k copies of the grid net G_{r,2}(a1, a2), classes of size r*delta - 1",
         {{"r", "uniformity", std::nullopt},
          {"delta", "maximum degree", std::nullopt},
          {"a1", "multiplicity of the rows", 1},
          {"a2", "multiplicity of the columns (default delta - a1)", std::nullopt}}},
        {"example2", "net G_{r,s}(delta/s, ...) replicated to class size r*delta - 1",
         {{"r", "uniformity", std::nullopt}, {"s", "parallel classes", std::nullopt}, {"delta", "maximum degree", std::nullopt}},
         true},
        {"example3", "net with unequal multiplicities, classes of size r*delta - 1",
         {{"r", "uniformity", std::nullopt},
          {"s", "parallel classes", std::nullopt},
          {"delta", "maximum degree", std::nullopt},
          {"variant", "1: residue mod s, 2: residue mod s - 1", 1}},
         true},
        {"small_n", "n classes on (n-1)/(s-1) copies of a net",
         {{"r", "uniformity", std::nullopt},
          {"s", "parallel classes", std::nullopt},
          {"delta", "maximum degree", std::nullopt},
          {"n", "number of classes", std::nullopt}},
         true},
        {"sunflower", "copies of H_{r,t,delta}, t-simple and r-partite",
         {{"r", "uniformity", std::nullopt}, {"t", "simplicity", std::nullopt}, {"delta", "maximum degree", std::nullopt}}},
        {"prop41", "chi' - 1 copies of a host graph, one class per host edge",
         {{"delta", "Shannon triangle host of this degree", 3}, {"cycle", "odd cycle host of this length instead", std::nullopt}}},
        {"knn_cayley", "K_{n,n} colored by (i + j) mod n", {{"n", "side size", std::nullopt}}},
        {"bgs", "two blown-up even cycles with a matching, n = 3 mod 4", {{"n", "class count", std::nullopt}}},
        {"k2m", "two copies of K_{2^m} colored by xor", {{"m", "exponent", std::nullopt}}},
        {"thm15_1", "proper coloring, classes of size chi'(H) - 1 or chi'(H)",
         {{"delta", "Shannon triangle host of this degree", std::nullopt},
          {"cycle", "odd cycle host of this length instead", std::nullopt}}},
        {"thm15_2", "bipartite simple graph, classes of size delta + 1", {{"delta", "maximum degree", std::nullopt}}},
        {"thm15_3", "classes of size delta + 2 with chi' = delta", {{"delta", "maximum degree", std::nullopt}}},
        {"galvin_g0", "the colored graph G_0 and its list instance", {{"delta", "list size", std::nullopt}}},
        {"galvin", "bipartite graph with lists of size delta and no proper list coloring",
         {{"delta", "list size", std::nullopt}}},
    };
    return registry;
}

namespace {

class ParamReader {
public:
    ParamReader(const FamilySpec& spec, const FamilyParams& params) : spec_(spec), params_(params) {}

    bool has(const std::string& name) const { return params_.values.count(name) > 0; }

    std::size_t get(const std::string& name) const
    {
        auto it = params_.values.find(name);
        if (it == params_.values.end()) {
            for (const auto& p : spec_.params)
                if (p.name == name && p.default_value)
                    return static_cast<std::size_t>(*p.default_value);
            throw std::invalid_argument(spec_.name + ": missing parameter --" + name);
        }
        if (it->second < 0)
            throw std::invalid_argument(spec_.name + ": parameter --" + name + " must be nonnegative");
        return static_cast<std::size_t>(it->second);
    }

    std::uint32_t get32(const std::string& name) const
    {
        const std::size_t v = get(name);
        if (v > 1'000'000)
            throw std::invalid_argument(spec_.name + ": parameter --" + name + " is too large");
        return static_cast<std::uint32_t>(v);
    }

    Net net() const
    {
        if (params_.net)
            return *params_.net;
        const std::uint32_t r = get32("r");
        const std::uint32_t s = get32("s");
        if (r < 1 || s < 2)
            throw std::invalid_argument(spec_.name + ": need r >= 1 and s >= 2");
        if (r > 64)
            throw std::invalid_argument(spec_.name + ": r exceeds the size cap of 64");
        return standard_net(r, s);
    }

private:
    const FamilySpec& spec_;
    const FamilyParams& params_;
};

MultiHypergraph odd_cycle(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("cycle host: length must be odd and at least 3");
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return MultiHypergraph(n, std::move(edges));
}

MultiHypergraph chosen_host(const ParamReader& p)
{
    if (p.has("cycle"))
        return odd_cycle(p.get("cycle"));
    const std::size_t delta = p.get("delta");
    if (delta < 2 || delta > 16)
        throw std::invalid_argument("Shannon triangle host: delta must be between 2 and 16");
    return shannon_triangle(delta);
}

void cap(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

InstanceDocument galvin_document(const GalvinInstance& gi, const std::string& family, std::size_t delta)
{
    ClaimManifest m;
    m.r = 2;
    m.delta = max_degree(gi.graph.graph());
    m.min_class_size = gi.graph.coloring().min_class_size();
    m.n_classes = gi.graph.num_classes();
    m.proper = true;
    m.frm_free = true;
    m.notes.push_back("list instance: every list has size " + std::to_string(delta) +
                      ", color degree " + std::to_string(color_degree(gi.list)));
    InstanceDocument doc = make_document(gi.graph, m, Provenance{family, json::object()});
    doc.list_instance = gi.list;
    doc.cover_origin = CoverOrigin{gi.edge_origin, gi.vertex_origin};
    return doc;
}

}  // namespace

InstanceDocument build_family(const std::string& name, const FamilyParams& params)
{
    const auto& registry = family_registry();
    auto spec = std::find_if(registry.begin(), registry.end(), [&](const FamilySpec& f) { return f.name == name; });
    if (spec == registry.end())
        throw std::invalid_argument("unknown family: " + name);
    for (const auto& [key, value] : params.values) {
        (void)value;
        if (std::none_of(spec->params.begin(), spec->params.end(), [&](const ParamSpec& p) { return p.name == key; }))
            throw std::invalid_argument(name + ": unknown parameter --" + key);
    }
    if (params.net && !spec->accepts_net)
        throw std::invalid_argument(name + ": does not take a net");

    const ParamReader p(*spec, params);
    json recorded = json::object();
    for (const auto& [key, value] : params.values)
        recorded[key] = value;
    if (params.net)
        recorded["net"] = net_to_json(*params.net);

    auto finish = [&](FamilyInstance fi) {
        return make_document(fi.instance, std::move(fi.manifest), Provenance{name, recorded});
    };

    if (name == "example1") {
        const std::size_t r = p.get("r");
        const std::size_t delta = p.get("delta");
        cap(r <= 16 && delta <= 16, "example1: r and delta are capped at 16");
        const std::size_t a1 = p.get("a1");
        const std::size_t a2 = p.has("a2") ? p.get("a2") : (delta > a1 ? delta - a1 : 0);
        return finish(example1(r, delta, a1, a2));
    }
    if (name == "example2") {
        const std::size_t delta = p.get("delta");
        cap(delta <= 64, "example2: delta is capped at 64");
        return finish(example2(p.net(), delta));
    }
    if (name == "example3") {
        const std::size_t variant = p.get("variant");
        cap(variant == 1 || variant == 2, "example3: variant must be 1 or 2");
        const std::size_t delta = p.get("delta");
        cap(delta <= 64, "example3: delta is capped at 64");
        return finish(example3(p.net(), delta,
                               variant == 1 ? Example3Variant::residue_s : Example3Variant::residue_s_minus_1));
    }
    if (name == "small_n") {
        const std::size_t delta = p.get("delta");
        const std::size_t n = p.get("n");
        cap(delta <= 64 && n <= 4096, "small_n: delta is capped at 64 and n at 4096");
        return finish(small_n(p.net(), delta, n));
    }
    if (name == "sunflower") {
        const std::size_t r = p.get("r");
        const std::size_t t = p.get("t");
        const std::size_t delta = p.get("delta");
        cap(r <= 8 && delta <= 8, "sunflower: r and delta are capped at 8");
        return finish(sunflower_family(r, t, delta));
    }
    if (name == "prop41")
        return finish(prop_chromatic_index(chosen_host(p)));
    if (name == "knn_cayley") {
        const std::size_t n = p.get("n");
        cap(n >= 1 && n <= 64, "knn_cayley: n must be between 1 and 64");
        return finish(knn_cayley(n));
    }
    if (name == "bgs") {
        const std::size_t n = p.get("n");
        cap(n <= 63, "bgs: n is capped at 63");
        return finish(bgs_family(n));
    }
    if (name == "k2m")
        return finish(k2m_family(p.get("m")));
    if (name == "thm15_1")
        return finish(thm15_statement1(chosen_host(p)));
    if (name == "thm15_2" || name == "thm15_3") {
        const std::size_t delta = p.get("delta");
        cap(delta <= 16, name + ": delta is capped at 16");
        return finish(name == "thm15_2" ? thm15_statement2(delta) : thm15_statement3(delta));
    }
    // galvin_g0 and galvin
    const std::size_t delta = p.get("delta");
    cap(delta >= 2 && delta <= 8, name + ": delta must be between 2 and 8");
    InstanceDocument doc =
        galvin_document(name == "galvin" ? galvin_counterexample(delta) : galvin_g0(delta), name, delta);
    doc.provenance.parameters = recorded;
    return doc;
}

// --- verification ----------------------------------------------------------

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::verified: return "verified";
    case Verdict::claim_failure: return "claim_failure";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

json solve_report_to_json(const SolveReport& report)
{
    json j;
    j["status"] = to_string(report.status);
    j["method"] = to_string(report.method);
    j["nodes_explored"] = report.nodes_explored;
    j["candidates_examined"] = report.candidates_examined;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
    j["max_rainbow_size"] = optional_to_json(report.max_rainbow_size);
    if (report.witness) {
        json picks = json::array();
        for (const auto& [cls, e] : report.witness->picks)
            picks.push_back({{"class", cls}, {"edge", e}});
        j["witness"] = std::move(picks);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

namespace {

class CheckList {
public:
    void add(const std::string& name, json claimed, json observed, bool pass)
    {
        checks_.push_back({{"name", name}, {"claimed", std::move(claimed)}, {"observed", std::move(observed)}, {"pass", pass}});
        if (!pass)
            failed_ = true;
    }

    void add_inconclusive(const std::string& name, json claimed, const std::string& reason)
    {
        checks_.push_back({{"name", name}, {"claimed", std::move(claimed)}, {"observed", reason}, {"pass", nullptr}});
        inconclusive_ = true;
    }

    Verdict verdict() const
    {
        if (failed_)
            return Verdict::claim_failure;
        return inconclusive_ ? Verdict::inconclusive : Verdict::verified;
    }

    json take() { return std::move(checks_); }

private:
    json checks_ = json::array();
    bool failed_ = false;
    bool inconclusive_ = false;
};

}  // namespace

VerificationReport verify_document(const InstanceDocument& doc, const SolveOptions& options)
{
    CheckList checks;
    json report;
    report["builder"] = doc.provenance.builder;

    ColoredHypergraph instance;
    try {
        instance = doc.instance();
        checks.add("partition", true, true, true);
    } catch (const std::invalid_argument& e) {
        checks.add("partition", true, e.what(), false);
        report["checks"] = checks.take();
        report["verdict"] = to_string(Verdict::claim_failure);
        return {Verdict::claim_failure, std::move(report)};
    }
    const MultiHypergraph& g = instance.graph();

    if (doc.manifest) {
        const ClaimManifest& m = *doc.manifest;
        const auto uniform = g.uniformity();
        checks.add("uniformity", m.r, optional_to_json(uniform), uniform && *uniform == m.r);
        const std::size_t delta = max_degree(g);
        checks.add("max_degree", m.delta, delta, delta == m.delta);
        checks.add("n_classes", m.n_classes, instance.num_classes(), instance.num_classes() == m.n_classes);
        const std::size_t min_size = instance.coloring().min_class_size();
        checks.add("min_class_size", m.min_class_size, min_size, min_size >= m.min_class_size);
        if (m.proper) {
            const bool proper = is_proper(instance);
            checks.add("proper", true, proper, proper);
        }
        if (m.t_simple) {
            const bool ok = is_t_simple(g, *m.t_simple);
            checks.add("t_simple", *m.t_simple, ok, ok);
        }
        if (m.partition_witness) {
            const bool ok = uniform && *uniform == m.r && verify_r_partition(g, *m.partition_witness, m.r);
            checks.add("r_partition_witness", m.r, ok, ok);
        }
        if (m.bipartite) {
            const bool observed = uniform == 2 && bipartition(g).has_value();
            checks.add("bipartite", *m.bipartite, observed, observed == *m.bipartite);
        }
        if (m.simple) {
            const bool observed = is_simple(g);
            checks.add("simple", *m.simple, observed, observed == *m.simple);
        }
        if (m.chromatic_index) {
            try {
                const std::size_t chi = chromatic_index(g);
                checks.add("chromatic_index", *m.chromatic_index, chi, chi == *m.chromatic_index);
            } catch (const std::length_error& e) {
                checks.add_inconclusive("chromatic_index", *m.chromatic_index, e.what());
            } catch (const std::invalid_argument& e) {
                checks.add("chromatic_index", *m.chromatic_index, e.what(), false);
            }
        }
    }

    if (doc.list_instance) {
        const ListInstance& li = *doc.list_instance;
        const CoverConditionReport cc = check_cover_conditions(instance);
        checks.add("cover_condition_a", true, cc.a_holds, cc.a_holds);
        checks.add("cover_condition_b", true, cc.b_holds, cc.b_holds);
        if (doc.cover_origin) {
            GalvinInstance gi{instance, li, doc.cover_origin->edges, doc.cover_origin->vertices};
            const bool iso = cover_correspondence(gi);
            checks.add("cover_correspondence", true, iso, iso);
        }
        report["color_degree"] = color_degree(li);
    }

    const SolveReport solved = decompose_and_solve(instance, options);
    report["solver"] = solve_report_to_json(solved);
    const std::optional<bool> claim = doc.manifest ? doc.manifest->frm_free : std::nullopt;
    if (solved.status == SolveStatus::inconclusive) {
        if (claim)
            checks.add_inconclusive("frm_free", *claim, "node budget exhausted");
    } else if (claim) {
        checks.add("frm_free", *claim, !solved.found(), solved.found() != *claim);
    } else {
        report["frm_note"] = solved.found() ? "FRM witness found" : "no FRM (complete search)";
    }

    const Verdict verdict = checks.verdict();
    report["checks"] = checks.take();
    report["verdict"] = to_string(verdict);
    return {verdict, std::move(report)};
}

}  // namespace rainbow::io
