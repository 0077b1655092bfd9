#include "rainbow/designs.hpp"
#include "rainbow/families.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/listcolor.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rainbow;
using rainbow::testing::colored;
using rainbow::testing::cycle_graph;

namespace {

MultiHypergraph three_c4()
{
    const std::vector<MultiHypergraph> parts(3, cycle_graph(4));
    return disjoint_union(std::span<const MultiHypergraph>(parts));
}

}  // namespace

TEST(MultiHypergraph, SortsVertexListsAndRejectsBadEdges)
{
    const MultiHypergraph g(4, {{3, 1}, {0, 2, 1}});
    EXPECT_EQ(g.edge(0).vertices, (std::vector<VertexId>{1, 3}));
    EXPECT_EQ(g.edge(1).vertices, (std::vector<VertexId>{0, 1, 2}));
    EXPECT_THROW(MultiHypergraph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(MultiHypergraph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(MultiHypergraph(3, {{}}), std::invalid_argument);
}

TEST(MultiHypergraph, ParallelEdgesKeepTheirOwnIds)
{
    const MultiHypergraph g(2, {{0, 1}, {0, 1}});
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.edge(0).vertices, g.edge(1).vertices);
}

TEST(EdgeColoring, RejectsOverlapGapsAndEmptyClasses)
{
    const MultiHypergraph g(4, {{0, 1}, {2, 3}, {1, 2}});
    EXPECT_NO_THROW(ColoredHypergraph(g, EdgeColoring({{0, 1}, {2}})));
    EXPECT_THROW(ColoredHypergraph(g, EdgeColoring({{0, 1}, {1, 2}})), std::invalid_argument);
    EXPECT_THROW(ColoredHypergraph(g, EdgeColoring({{0, 1}})), std::invalid_argument);
    EXPECT_THROW(EdgeColoring(std::vector<std::vector<EdgeId>>{{0}, {}}), std::invalid_argument);
    EXPECT_THROW(EdgeColoring({{0}, {1}}, {"only one"}), std::invalid_argument);
}

TEST(EdgeColoring, ClassesPartitionTheEdgeIds)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2, 8, 12, 4);
        std::vector<EdgeId> all;
        for (const auto& c : inst.coloring().classes())
            all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        for (EdgeId e = 0; e < all.size(); ++e)
            ASSERT_EQ(all[e], e);
        EXPECT_EQ(all.size(), inst.graph().num_edges());
    }
}

TEST(MaxDegree, ThreeFourCyclesHaveDegreeTwo)
{
    EXPECT_EQ(max_degree(three_c4()), 2u);
}

TEST(MaxDegree, EdgelessGraphIsZero)
{
    EXPECT_EQ(max_degree(MultiHypergraph(5, {})), 0u);
}

TEST(MaxDegree, MatchesIndependentTallyOnExampleOne)
{
    const auto fi = example1(2, 3, 1, 2);
    std::map<VertexId, std::size_t> tally;
    for (const auto& e : fi.instance.graph().edges())
        for (VertexId v : e.vertices)
            ++tally[v];
    std::size_t best = 0;
    for (const auto& [v, d] : tally)
        best = std::max(best, d);
    EXPECT_EQ(best, 3u);
    EXPECT_EQ(max_degree(fi.instance.graph()), 3u);
}

TEST(MaxCodegree, ParallelPairAndGrid)
{
    EXPECT_EQ(max_codegree(MultiHypergraph(2, {{0, 1}, {0, 1}})), 2u);
    EXPECT_EQ(max_codegree(standard_net(3, 2).hypergraph), 1u);
}

TEST(MaxCodegree, BlowUpOfTheFourCycle)
{
    const auto g = blow_up_net(standard_net(2, 2), {1, 3});
    EXPECT_EQ(max_codegree(g.graph()), 3u);
}

TEST(IsProper, Examples)
{
    EXPECT_FALSE(is_proper(example1(2, 3, 1, 2).instance));
    EXPECT_TRUE(is_proper(g_construction(standard_net(2, 3), {1, 1, 1})));
    EXPECT_TRUE(is_proper(colored(2, {{0, 1}}, {{0}})));
}

TEST(IsTSimple, SunflowerKernelAndParallelEdges)
{
    // S_{3,2,4}: four edges sharing the kernel {0,1}.
    const MultiHypergraph sunflower(6, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}});
    EXPECT_TRUE(is_t_simple(sunflower, 2));
    EXPECT_FALSE(is_t_simple(sunflower, 1));
    EXPECT_TRUE(is_t_simple(three_c4(), 1));
    EXPECT_FALSE(is_t_simple(blow_up_net(standard_net(2, 2), {1, 2}).graph(), 1));
}

TEST(IsSimple, DetectsParallelEdges)
{
    EXPECT_TRUE(is_simple(three_c4()));
    EXPECT_FALSE(is_simple(MultiHypergraph(2, {{0, 1}, {0, 1}})));
}

TEST(RPartition, CyclicSquareColumnsOfTheGrid)
{
    const Net grid = standard_net(3, 2);
    const LatinSquare l = cyclic_latin_square(3);
    PartitionWitness w;
    w.parts.resize(3);
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j)
            w.parts[l.at(i, j)].push_back(grid_vertex(3, i, j));
    for (auto& p : w.parts)
        std::sort(p.begin(), p.end());
    EXPECT_TRUE(verify_r_partition(grid.hypergraph, w, 3));
}

TEST(RPartition, SinglePartFailsOnAnEdge)
{
    const MultiHypergraph g(2, {{0, 1}});
    EXPECT_FALSE(verify_r_partition(g, PartitionWitness{{{0, 1}, {}}}, 2));
}

TEST(RPartition, MaximalNetHasNoPartition)
{
    // The affine plane of order 3 (four classes) is a maximal net.
    const Net plane = standard_net(3, 4);
    const auto search = find_r_partition(plane.hypergraph, 3);
    EXPECT_EQ(search.decision, Decision::no);
    const auto grid = find_r_partition(standard_net(3, 3).hypergraph, 3);
    ASSERT_EQ(grid.decision, Decision::yes);
    EXPECT_TRUE(verify_r_partition(standard_net(3, 3).hypergraph, *grid.witness, 3));
}

TEST(RPartition, LargeUniformityIsUndecided)
{
    EXPECT_EQ(find_r_partition(standard_net(4, 2).hypergraph, 4).decision, Decision::undecided);
}

TEST(DisjointUnion, CountsAddUp)
{
    const auto c4 = colored(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}, {1, 3}});
    const std::vector<ColoredHypergraph> parts(2, c4);
    const auto u = disjoint_union(std::span<const ColoredHypergraph>(parts));
    EXPECT_EQ(u.graph().num_vertices(), 8u);
    EXPECT_EQ(u.graph().num_edges(), 8u);
    EXPECT_EQ(u.num_classes(), 4u);
}

TEST(DisjointUnion, FiveGridsHaveTheRightCounts)
{
    const Net grid = standard_net(3, 2);
    const ColoredHypergraph one(grid.hypergraph, EdgeColoring(grid.parallel_classes));
    const std::vector<ColoredHypergraph> parts(5, one);
    const auto u = disjoint_union(std::span<const ColoredHypergraph>(parts));
    EXPECT_EQ(u.graph().num_vertices(), 45u);
    EXPECT_EQ(u.graph().num_edges(), 30u);
}

TEST(DisjointUnion, EmptyInput)
{
    const auto u = disjoint_union(std::span<const ColoredHypergraph>());
    EXPECT_EQ(u.graph().num_vertices(), 0u);
    EXPECT_EQ(u.num_classes(), 0u);
}

TEST(DisjointUnion, DegreeAndUniformityAreInherited)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ColoredHypergraph> parts;
        std::size_t best = 0;
        for (int k = 0; k < 3; ++k) {
            parts.push_back(rainbow::testing::random_instance(rng, 3, 7, 6, 2));
            best = std::max(best, max_degree(parts.back().graph()));
        }
        const auto u = disjoint_union(std::span<const ColoredHypergraph>(parts));
        EXPECT_EQ(max_degree(u.graph()), best);
        EXPECT_TRUE(is_uniform(u.graph(), 3));
    }
}

TEST(Components, ThreeFourCycles)
{
    const auto comps = components(three_c4());
    ASSERT_EQ(comps.size(), 3u);
    for (const auto& c : comps)
        EXPECT_EQ(c.size(), 4u);
}

TEST(Components, GalvinG0HasFourComponents)
{
    EXPECT_EQ(edge_components(galvin_g0(2).graph.graph()).size(), 4u);
}

TEST(Components, CompleteGraphIsConnected)
{
    EXPECT_EQ(components(standard_net(2, 3).hypergraph).size(), 1u);
}

TEST(RainbowMatchingValidator, RejectsSharedVerticesAndWrongClasses)
{
    const auto inst = colored(4, {{0, 1}, {2, 3}, {1, 2}}, {{0}, {1, 2}});
    EXPECT_TRUE(validate_rainbow_matching(inst, RainbowMatching{{{0, 0}, {1, 1}}}, true));
    EXPECT_FALSE(validate_rainbow_matching(inst, RainbowMatching{{{0, 0}, {1, 2}}}, true));
    EXPECT_FALSE(validate_rainbow_matching(inst, RainbowMatching{{{0, 1}, {1, 2}}}, true));
    EXPECT_FALSE(validate_rainbow_matching(inst, RainbowMatching{{{0, 0}}}, true));
    EXPECT_TRUE(validate_rainbow_matching(inst, RainbowMatching{{{0, 0}}}, false));
}
