#pragma once

// List edge-colorings and their reduction to full rainbow matchings.

#include "rainbow/hypergraph.hpp"
#include "rainbow/solver.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rainbow {

using Color = std::uint32_t;

struct ListInstance {
    MultiHypergraph host;
    std::vector<std::vector<Color>> lists;  // per host edge, sorted, nonempty

    bool operator==(const ListInstance&) const = default;
};

/// Sorts the lists and checks there is one nonempty list per edge. Throws
/// std::invalid_argument otherwise.
ListInstance make_list_instance(MultiHypergraph host, std::vector<std::vector<Color>> lists);

/// The list edge-cover: one block H_c per color c (in increasing color
/// order, isolated vertices dropped) and one class per host edge.
struct CoverInstance {
    ColoredHypergraph cover;
    std::vector<std::pair<EdgeId, Color>> edge_origin;     // cover edge -> (host edge, color)
    std::vector<std::pair<Color, VertexId>> vertex_origin; // cover vertex -> (color, host vertex)
    std::vector<Color> colors;                             // block order
};

CoverInstance list_edge_cover(const ListInstance& li);

struct CoverConditionReport {
    bool a_holds = true;
    bool b_holds = true;
    /// (component index, class) with two edges of the class in the component.
    std::optional<std::pair<std::size_t, std::size_t>> a_witness;
    /// (component C, component C', class i, class j) with differing
    /// intersection sizes.
    std::optional<std::vector<std::size_t>> b_witness;
};

/// The two necessary conditions for being a list edge-cover, by enumeration
/// over the edge components of the instance.
CoverConditionReport check_cover_conditions(const ColoredHypergraph& instance);

std::size_t color_degree(const ListInstance& li);

/// Max over colors of the maximum codegree of H_c; 0 with fewer than two
/// host vertices.
std::size_t color_codegree(const ListInstance& li);

/// Every edge takes a color from its list and intersecting edges differ.
bool is_proper_l_coloring(const ListInstance& li, const std::vector<Color>& phi);

/// A proper L-coloring found through the full rainbow matching solver on the
/// cover, or nullopt when the cover has none. Throws std::runtime_error when
/// the search is inconclusive.
std::optional<std::vector<Color>> l_coloring_exists(const ListInstance& li, const SolveOptions& options = {});

/// Direct enumeration over all choices from the lists. Throws
/// std::length_error when the product of list sizes exceeds the cap.
std::optional<std::vector<Color>> direct_l_coloring(const ListInstance& li, std::uint64_t cap = 1'000'000);

/// Backtracking over host edges in id order, trying each listed color not
/// already taken at an endpoint. Independent of the cover and the solver.
std::optional<std::vector<Color>> search_l_coloring(const ListInstance& li);

/// A colored graph together with the list instance it covers, and the maps
/// from its edges and vertices to the list instance.
struct GalvinInstance {
    ColoredHypergraph graph;
    ListInstance list;
    std::vector<std::pair<EdgeId, Color>> edge_origin;
    std::vector<std::pair<Color, VertexId>> vertex_origin;
};

/// G_0 with classes F_0..F_{Delta^2}: one broom followed by the star groups
/// S_0..S_Delta, components numbered in that order. Host H_0 has
/// x_i = i, y_j = Delta + j, z = 2*Delta; edge e_0 = x_0y_0, e_1 = x_0z and
/// e_{1+j+i*Delta} = x_iy_j otherwise.
GalvinInstance galvin_g0(std::size_t delta);

/// Delta copies of G_0 with the copies of F_0 merged into a first class E_0;
/// the host pastes x_0 and y_0 across copies and keeps a single e_0.
GalvinInstance galvin_counterexample(std::size_t delta);

/// Checks that the origin maps are an isomorphism between `graph` and
/// list_edge_cover(list) that respects classes.
bool cover_correspondence(const GalvinInstance& gi);

}  // namespace rainbow
