#pragma once

#include "rainbow/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rainbow::detail {

/// Adjacency matrix of the conflict graph on the given edges: two edges
/// conflict when they share a vertex (parallel edges always do).
std::vector<std::vector<char>> conflict_matrix(const MultiHypergraph& g, const std::vector<EdgeId>& edges);

/// A proper coloring of the graph with colors 0..k-1, found by DSatur
/// backtracking, or nullopt if none exists. Throws std::length_error when the
/// search exceeds node_cap nodes.
std::optional<std::vector<std::size_t>> color_graph(const std::vector<std::vector<char>>& adj, std::size_t k,
                                                    std::uint64_t node_cap = 50'000'000);

/// Greedy coloring in index order; returns the colors used.
std::vector<std::size_t> greedy_coloring(const std::vector<std::vector<char>>& adj);

}  // namespace rainbow::detail
