#pragma once

// Latin squares, finite fields and (r,s)-nets.

#include "rainbow/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

/// GF(q) for any prime q, and for the prime powers 4, 8, 9, 16, 25 and 27
/// through fixed irreducible polynomials. Elements are 0..q-1; for prime
/// powers an element encodes its polynomial coefficients in base p.
class GaloisField {
public:
    /// Throws std::invalid_argument when q is not supported.
    explicit GaloisField(std::uint32_t q);

    static bool is_supported(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

private:
    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t degree_ = 0;
    std::vector<std::uint32_t> add_table_;  // only for prime powers
    std::vector<std::uint32_t> mul_table_;
};

class LatinSquare {
public:
    LatinSquare() = default;

    /// Throws std::invalid_argument unless every row and column is a
    /// permutation of 0..n-1.
    explicit LatinSquare(std::vector<std::vector<std::uint32_t>> grid);

    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(grid_.size()); }
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return grid_[row][col]; }
    const std::vector<std::vector<std::uint32_t>>& grid() const noexcept { return grid_; }

    LatinSquare transposed() const;

    bool operator==(const LatinSquare&) const = default;

private:
    std::vector<std::vector<std::uint32_t>> grid_;
};

/// grid[i][j] = (i + j) mod n.
LatinSquare cyclic_latin_square(std::uint32_t n);

/// The squares L^a[i][j] = a*i + j over GF(q) for the first `count` nonzero
/// field elements a.
std::vector<LatinSquare> field_mols(std::uint32_t q, std::uint32_t count);

/// Throws std::invalid_argument on an order mismatch.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// An (r,s)-net. Vertex v_ij (row i, column j of the underlying grid) has id
/// i*r + j; parallel class 0 holds the rows, class 1 the columns and class
/// t+2 the level sets of the t-th source square.
struct Net {
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    MultiHypergraph hypergraph;
    std::vector<std::vector<EdgeId>> parallel_classes;
    std::vector<LatinSquare> source_mols;

    bool operator==(const Net&) const = default;
};

inline VertexId grid_vertex(std::uint32_t r, std::uint32_t row, std::uint32_t col)
{
    return row * r + col;
}

/// Throws std::invalid_argument on an order mismatch or a non-orthogonal pair.
Net net_from_mols(std::uint32_t r, std::span<const LatinSquare> mols);

/// Wraps user-supplied parallel classes (each a list of vertex lists) as a
/// Net without validating it; see validate_net.
Net net_from_classes(std::uint32_t r, const std::vector<std::vector<std::vector<VertexId>>>& classes);

/// Direct enumeration of the three net invariants.
bool validate_net(const Net& net);

/// Reads the level-set squares back off a net whose first two classes are
/// the rows and columns of the grid. Throws if the net does not have that
/// shape.
std::vector<LatinSquare> mols_from_net(const Net& net);

/// A net on r^2 vertices with s parallel classes: the grid for s = 2, the
/// cyclic square for s = 3, field squares otherwise.
Net standard_net(std::uint32_t r, std::uint32_t s);

}  // namespace rainbow
