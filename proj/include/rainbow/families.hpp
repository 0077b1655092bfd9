#pragma once

// Extremal families with no full rainbow matching. Every builder returns the
// instance together with the properties it claims, so that the verifier can
// re-derive and check each one.

#include "rainbow/composer.hpp"
#include "rainbow/designs.hpp"
#include "rainbow/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rainbow {

struct ClaimManifest {
    std::size_t r = 0;               // uniformity
    std::size_t delta = 0;           // exact maximum degree
    std::size_t min_class_size = 0;  // every class has at least this many edges
    std::size_t n_classes = 0;
    std::optional<std::size_t> t_simple;
    bool proper = false;
    std::optional<std::size_t> chromatic_index;
    /// nullopt when freeness is not claimed either way.
    std::optional<bool> frm_free = true;
    std::optional<PartitionWitness> partition_witness;
    std::optional<bool> bipartite;
    std::optional<bool> simple;
    std::vector<std::string> notes;

    bool operator==(const ClaimManifest&) const = default;
};

struct FamilyInstance {
    ColoredHypergraph instance;
    ClaimManifest manifest;
};

/// k = r*Delta - 1 copies of G_{r,2}(a1, a2), recolored into r*Delta classes of
/// size r*Delta - 1.
FamilyInstance example1(std::size_t r, std::size_t delta, std::size_t a1, std::size_t a2);

/// Replication of G_{r,s}(Delta/s, ..., Delta/s) to class size r*Delta - 1.
/// Requires Delta to be a positive multiple of s.
FamilyInstance example2(const Net& net, std::size_t delta);

enum class Example3Variant { residue_s, residue_s_minus_1 };

/// The multiplicities used by example3, after checking the variant's
/// inequality. Throws std::invalid_argument when it fails.
std::vector<std::size_t> example3_multiplicities(std::size_t r, std::size_t s, std::size_t delta,
                                                 Example3Variant variant);

/// A subset I violating sum_{i in I} r(s-1)a_i > (r*Delta - 1)(|I| - 1), or
/// the empty subset when sum a_i != Delta. nullopt when both conditions hold.
std::optional<std::vector<std::size_t>> example_conditions_violation(std::size_t r, const std::vector<std::size_t>& a,
                                                                     std::size_t delta);

FamilyInstance example3(const Net& net, std::size_t delta, Example3Variant variant);

/// n classes of size at least floor((n-1) r Delta / n) on (n-1)/(s-1) copies of
/// G_{r,s}(Delta/s, ...). Requires s | Delta and n = s mod s(s-1).
FamilyInstance small_n(const Net& net, std::size_t delta, std::size_t n);

/// H_{r,t,Delta}: r disjoint sunflowers S_{r,t,Delta-1} plus the t kernel
/// edges, with classes F1 (sunflower edges) and F2 (kernel edges).
ColoredHypergraph sunflower_base(std::size_t r, std::size_t t, std::size_t delta);

/// r(Delta-1)+t-1 copies of H_{r,t,Delta} recolored into r(Delta-1)+t classes.
FamilyInstance sunflower_family(std::size_t r, std::size_t t, std::size_t delta);

/// Triangle on vertices 0,1,2 with floor(Delta/2) edges on 01 and 12 and
/// ceil(Delta/2) edges on 02.
MultiHypergraph shannon_triangle(std::size_t delta);

/// Exact chromatic index of a 2-uniform multigraph. Throws
/// std::invalid_argument for non-graphs and std::length_error when a
/// component has more than 64 edges.
std::size_t chromatic_index(const MultiHypergraph& g);

/// A proper edge coloring with chromatic_index(g) colors, one color per edge.
std::vector<std::size_t> optimal_edge_coloring(const MultiHypergraph& g);

/// chi' - 1 copies of H, class i holding the copies of edge i. Throws when
/// chi' = 1.
FamilyInstance prop_chromatic_index(const MultiHypergraph& h);

/// K_{n,n} with x_i = i, y_j = n + j, edge x_iy_j of id i*n + j and class
/// (i + j) mod n. Freeness is claimed for even n only.
FamilyInstance knn_cayley(std::size_t n);

/// Two copies of C_{2m} with m-1 parallel edges per side plus the matching
/// M, for n = 2m - 1 = 3 mod 4.
FamilyInstance bgs_family(std::size_t n);

/// Two copies of K_{2^m} with edge xy in class (x xor y) - 1.
FamilyInstance k2m_family(std::size_t m);

/// Statement (1): classes of size at least chi'(H) (or chi'(H) - 1 when H has
/// at least 2*Delta edges) with a proper coloring and chi'(G) = chi'(H).
FamilyInstance thm15_statement1(const MultiHypergraph& h);

/// Statement (2): bipartite simple graph, classes of size at least Delta + 1.
FamilyInstance thm15_statement2(std::size_t delta);

/// Statement (3): classes of size at least Delta + 2 and chi'(G) = Delta, for
/// Delta = 0 or 3 mod 4 or Delta in {2^m - 1, 2^m}.
FamilyInstance thm15_statement3(std::size_t delta);

}  // namespace rainbow
