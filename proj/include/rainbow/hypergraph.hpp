#pragma once

// Multi-hypergraphs, edge-colorings and the structural predicates used
// throughout the library. Everything here is immutable once built.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    EdgeId id = 0;
    std::vector<VertexId> vertices;  // strictly increasing

    bool operator==(const Edge&) const = default;
};

/// A vertex count plus a list of identified edges. Parallel edges are
/// distinct records with equal vertex lists.
class MultiHypergraph {
public:
    MultiHypergraph() = default;

    /// Vertex lists are sorted here. Throws std::invalid_argument on an
    /// out-of-range or repeated vertex, or on an empty edge.
    MultiHypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Common edge size, or nullopt when edgeless or mixed.
    std::optional<std::size_t> uniformity() const;

    std::vector<std::size_t> degrees() const;

    bool operator==(const MultiHypergraph&) const = default;

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// Incremental construction helper used by the builders. Ids are handed out
/// in call order.
class HypergraphBuilder {
public:
    VertexId add_vertex() { return static_cast<VertexId>(num_vertices_++); }

    /// Returns the first id of a block of `count` fresh vertices.
    VertexId add_vertices(std::size_t count);

    EdgeId add_edge(std::vector<VertexId> vertices);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    MultiHypergraph build() const { return MultiHypergraph(num_vertices_, edges_); }

private:
    std::size_t num_vertices_ = 0;
    std::vector<std::vector<VertexId>> edges_;
};

/// A labeled list of nonempty edge-id classes. Member lists are kept sorted.
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// Throws std::invalid_argument on an empty class, a repeated edge id or a
    /// label count that is neither zero nor the class count.
    explicit EdgeColoring(std::vector<std::vector<EdgeId>> classes,
                          std::vector<std::string> labels = {});

    std::size_t num_classes() const noexcept { return classes_.size(); }
    const std::vector<EdgeId>& operator[](std::size_t i) const { return classes_.at(i); }
    const std::vector<std::vector<EdgeId>>& classes() const noexcept { return classes_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::vector<std::size_t> class_sizes() const;
    std::size_t min_class_size() const;  // 0 when there are no classes

    /// Class index of every edge. Throws unless the classes partition
    /// 0..num_edges-1.
    std::vector<std::size_t> class_of_edges(std::size_t num_edges) const;

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<std::vector<EdgeId>> classes_;
    std::vector<std::string> labels_;
};

bool is_partition(const EdgeColoring& coloring, std::size_t num_edges);

/// A hypergraph together with a coloring that partitions its edges.
class ColoredHypergraph {
public:
    ColoredHypergraph() = default;

    /// Throws std::invalid_argument unless `coloring` partitions the edges.
    ColoredHypergraph(MultiHypergraph graph, EdgeColoring coloring);

    const MultiHypergraph& graph() const noexcept { return graph_; }
    const EdgeColoring& coloring() const noexcept { return coloring_; }
    std::size_t num_classes() const noexcept { return coloring_.num_classes(); }

    bool operator==(const ColoredHypergraph&) const = default;

private:
    MultiHypergraph graph_;
    EdgeColoring coloring_;
};

struct PartitionWitness {
    std::vector<std::vector<VertexId>> parts;

    bool operator==(const PartitionWitness&) const = default;
};

/// Class index -> picked edge.
struct RainbowMatching {
    std::map<std::size_t, EdgeId> picks;

    bool operator==(const RainbowMatching&) const = default;
};

std::size_t max_degree(const MultiHypergraph& g);

/// Throws std::invalid_argument when there are fewer than two vertices.
std::size_t max_codegree(const MultiHypergraph& g);

bool is_uniform(const MultiHypergraph& g, std::size_t r);
bool is_proper(const MultiHypergraph& g, const EdgeColoring& coloring);
bool is_proper(const ColoredHypergraph& instance);
bool is_t_simple(const MultiHypergraph& g, std::size_t t);

/// No two edges share the same vertex list.
bool is_simple(const MultiHypergraph& g);

/// Checks that `witness` has exactly r disjoint covering parts and that every
/// edge meets each part at most once. Throws if g is not r-uniform.
bool verify_r_partition(const MultiHypergraph& g, const PartitionWitness& witness, std::size_t r);

enum class Decision { yes, no, undecided };

struct PartitionSearch {
    Decision decision = Decision::undecided;
    std::optional<PartitionWitness> witness;
};

/// Exhaustive r-partition search, only attempted for r <= 3; larger r
/// reports `undecided`. Throws if g is not r-uniform.
PartitionSearch find_r_partition(const MultiHypergraph& g, std::size_t r);

/// Two-coloring of a 2-uniform multigraph, if one exists.
std::optional<PartitionWitness> bipartition(const MultiHypergraph& g);

/// Vertex and edge ids of later parts are shifted past earlier ones; classes
/// are concatenated in part order.
ColoredHypergraph disjoint_union(std::span<const ColoredHypergraph> parts);
MultiHypergraph disjoint_union(std::span<const MultiHypergraph> parts);

/// Connected components of the incidence structure, each sorted, ordered by
/// least vertex id. Isolated vertices form singleton components.
std::vector<std::vector<VertexId>> components(const MultiHypergraph& g);

/// Edge sets of the components that carry edges, in the order of
/// `components`.
std::vector<std::vector<EdgeId>> edge_components(const MultiHypergraph& g);

/// Independent check of a (full) rainbow matching: picks refer to valid
/// classes, each pick lies in its class, and picks are vertex-disjoint.
bool validate_rainbow_matching(const ColoredHypergraph& instance,
                               const RainbowMatching& matching, bool full);

}  // namespace rainbow
