#include "rainbow/designs.hpp"
#include "rainbow/families.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rainbow;

TEST(CyclicLatinSquare, SmallOrders)
{
    EXPECT_EQ(cyclic_latin_square(1).grid(), (std::vector<std::vector<std::uint32_t>>{{0}}));
    EXPECT_EQ(cyclic_latin_square(2).grid(), (std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}}));
    const LatinSquare l = cyclic_latin_square(4);
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            EXPECT_EQ(l.at(i, j), (i + j) % 4);
}

TEST(LatinSquare, RejectsRepeatedSymbols)
{
    EXPECT_THROW(LatinSquare({{0, 1}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(LatinSquare({{0, 2}, {2, 0}}), std::invalid_argument);
}

TEST(GaloisField, SupportedOrders)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u})
        EXPECT_TRUE(GaloisField::is_supported(q)) << q;
    for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 32u})
        EXPECT_FALSE(GaloisField::is_supported(q)) << q;
    EXPECT_THROW(GaloisField(6), std::invalid_argument);
}

TEST(GaloisField, FieldAxiomsHold)
{
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
        const GaloisField f(q);
        for (std::uint32_t a = 1; a < q; ++a) {
            std::set<std::uint32_t> products;
            for (std::uint32_t b = 1; b < q; ++b)
                products.insert(f.mul(a, b));
            EXPECT_EQ(products.size(), q - 1) << "q=" << q << " a=" << a;
            EXPECT_EQ(f.mul(a, 1), a);
        }
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; c += 3)
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST(FieldMols, OrderThreePairIsOrthogonal)
{
    const auto mols = field_mols(3, 2);
    ASSERT_EQ(mols.size(), 2u);
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j)
            pairs.emplace(mols[0].at(i, j), mols[1].at(i, j));
    EXPECT_EQ(pairs.size(), 9u);
    EXPECT_TRUE(are_orthogonal(mols[0], mols[1]));
}

TEST(FieldMols, OrderTwoIsTheCyclicSquare)
{
    EXPECT_EQ(field_mols(2, 1).front(), cyclic_latin_square(2));
}

TEST(FieldMols, EverySupportedOrderGivesAFullFamily)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto mols = field_mols(q, q - 1);
        ASSERT_EQ(mols.size(), q - 1);
        for (std::size_t a = 0; a < mols.size(); ++a)
            for (std::size_t b = a + 1; b < mols.size(); ++b)
                EXPECT_TRUE(are_orthogonal(mols[a], mols[b])) << q << ": " << a << "," << b;
    }
}

TEST(FieldMols, RejectsBadCounts)
{
    EXPECT_THROW(field_mols(3, 3), std::invalid_argument);
    EXPECT_THROW(field_mols(3, 0), std::invalid_argument);
    EXPECT_THROW(field_mols(6, 1), std::invalid_argument);
}

TEST(AreOrthogonal, NegativeCases)
{
    const LatinSquare l = field_mols(3, 1).front();
    EXPECT_FALSE(are_orthogonal(l, l));
    const LatinSquare c = cyclic_latin_square(4);
    EXPECT_FALSE(are_orthogonal(c, c.transposed()));
    EXPECT_THROW((void)are_orthogonal(c, cyclic_latin_square(3)), std::invalid_argument);
}

TEST(NetFromMols, GridCompleteGraphAndAffinePlane)
{
    const Net grid = net_from_mols(3, {});
    EXPECT_EQ(grid.hypergraph.num_vertices(), 9u);
    EXPECT_EQ(grid.hypergraph.num_edges(), 6u);
    EXPECT_TRUE(validate_net(grid));

    const std::vector<LatinSquare> c2{cyclic_latin_square(2)};
    const Net k4 = net_from_mols(2, c2);
    EXPECT_EQ(k4.hypergraph.num_edges(), 6u);
    EXPECT_TRUE(is_simple(k4.hypergraph));
    EXPECT_EQ(max_degree(k4.hypergraph), 3u);
    EXPECT_TRUE(validate_net(k4));

    const auto mols = field_mols(3, 2);
    const Net plane = net_from_mols(3, mols);
    EXPECT_EQ(plane.parallel_classes.size(), 4u);
    EXPECT_EQ(plane.hypergraph.num_edges(), 12u);
    EXPECT_TRUE(validate_net(plane));
}

TEST(NetFromMols, RejectsNonOrthogonalInput)
{
    const LatinSquare l = cyclic_latin_square(3);
    const std::vector<LatinSquare> same{l, l};
    EXPECT_THROW(net_from_mols(3, same), std::invalid_argument);
    const std::vector<LatinSquare> wrong{cyclic_latin_square(2)};
    EXPECT_THROW(net_from_mols(3, wrong), std::invalid_argument);
}

TEST(ValidateNet, RowsAndColumnsOfTheGrid)
{
    const Net n = standard_net(2, 2);
    EXPECT_TRUE(validate_net(n));
    EXPECT_EQ(n.hypergraph.num_edges(), 4u);
    const Net g = standard_net(3, 2);
    for (std::uint32_t i = 0; i < 3; ++i)
        EXPECT_EQ(g.hypergraph.edge(g.parallel_classes[0][i]).vertices,
                  (std::vector<VertexId>{grid_vertex(3, i, 0), grid_vertex(3, i, 1), grid_vertex(3, i, 2)}));
}

TEST(ValidateNet, MovingAnEdgeBreaksIt)
{
    Net n = standard_net(3, 3);
    const EdgeId moved = n.parallel_classes[0].back();
    n.parallel_classes[0].pop_back();
    n.parallel_classes[1].push_back(moved);
    EXPECT_FALSE(validate_net(n));
}

TEST(MolsFromNet, RecoversTheSourceSquares)
{
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const auto mols = field_mols(q, q - 1);
        const Net n = net_from_mols(q, mols);
        EXPECT_EQ(mols_from_net(n), mols) << q;
    }
}

TEST(NetFromClasses, MatchesTheMolsConstruction)
{
    const Net built = standard_net(3, 3);
    std::vector<std::vector<std::vector<VertexId>>> classes;
    for (const auto& cls : built.parallel_classes) {
        classes.emplace_back();
        for (EdgeId e : cls)
            classes.back().push_back(built.hypergraph.edge(e).vertices);
    }
    const Net wrapped = net_from_classes(3, classes);
    EXPECT_TRUE(validate_net(wrapped));
    EXPECT_EQ(wrapped.hypergraph, built.hypergraph);
}

TEST(NetLineGraph, CrossClassEdgesAlwaysMeet)
{
    // Within one net copy any two edges of different classes share a vertex,
    // so a rainbow matching has at most one edge.
    for (std::uint32_t r : {2u, 3u, 4u}) {
        const Net n = standard_net(r, r == 2 ? 3 : 4);
        const auto class_of = EdgeColoring(n.parallel_classes).class_of_edges(n.hypergraph.num_edges());
        for (EdgeId e = 0; e < n.hypergraph.num_edges(); ++e)
            for (EdgeId f = e + 1; f < n.hypergraph.num_edges(); ++f) {
                const auto& a = n.hypergraph.edge(e).vertices;
                const auto& b = n.hypergraph.edge(f).vertices;
                std::vector<VertexId> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                EXPECT_EQ(!common.empty(), class_of[e] != class_of[f]);
            }
    }
}
