#include "rainbow/families.hpp"
#include "rainbow/solver.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rainbow;
using rainbow::testing::colored;

namespace {

ColoredHypergraph k4_matchings()
{
    return ColoredHypergraph(standard_net(2, 3).hypergraph, EdgeColoring(standard_net(2, 3).parallel_classes));
}

ColoredHypergraph drop_class(const ColoredHypergraph& inst, std::size_t dropped)
{
    // Removes the class and its edges; edge ids are renumbered.
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::vector<EdgeId>> classes;
    for (std::size_t c = 0; c < inst.num_classes(); ++c) {
        if (c == dropped)
            continue;
        classes.emplace_back();
        for (EdgeId e : inst.coloring()[c]) {
            classes.back().push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back(inst.graph().edge(e).vertices);
        }
    }
    return colored(inst.graph().num_vertices(), std::move(edges), std::move(classes));
}

ColoredHypergraph add_fresh_edge(const ColoredHypergraph& inst, std::size_t cls, std::size_t r)
{
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : inst.graph().edges())
        edges.push_back(e.vertices);
    std::vector<VertexId> fresh;
    for (std::size_t k = 0; k < r; ++k)
        fresh.push_back(static_cast<VertexId>(inst.graph().num_vertices() + k));
    auto classes = inst.coloring().classes();
    classes[cls].push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back(std::move(fresh));
    return colored(inst.graph().num_vertices() + r, std::move(edges), std::move(classes));
}

}  // namespace

TEST(FindFrm, ThreeFourCyclesHaveNone)
{
    const auto c4s = example1(2, 2, 1, 1).instance;
    const auto report = find_frm(c4s);
    EXPECT_EQ(report.status, SolveStatus::exhausted);
    EXPECT_TRUE(report.certified_free());
    EXPECT_FALSE(report.witness.has_value());
}

TEST(FindFrm, CompleteGraphCases)
{
    const auto k4 = k4_matchings();
    EXPECT_TRUE(find_frm(k4).certified_free());
    EXPECT_EQ(brute_force_frm(k4).candidates_examined, 8u);
    EXPECT_TRUE(find_frm(g_construction(standard_net(2, 3), {1, 1, 1})).certified_free());
}

TEST(FindFrm, TwoDisjointEdges)
{
    const auto inst = colored(4, {{0, 1}, {2, 3}}, {{0}, {1}});
    const auto report = find_frm(inst);
    ASSERT_TRUE(report.found());
    EXPECT_EQ(report.witness->picks, (std::map<std::size_t, EdgeId>{{0, 0}, {1, 1}}));
}

TEST(FindFrm, NodeBudgetGivesInconclusive)
{
    SolveOptions options;
    options.node_budget = 5;
    const auto report = find_frm(example1(3, 3, 1, 2).instance, options);
    EXPECT_EQ(report.status, SolveStatus::inconclusive);
    EXPECT_FALSE(report.found());
    EXPECT_FALSE(report.certified_free());
}

TEST(FindFrm, NodeCountsAreReproducible)
{
    const auto inst = example1(2, 3, 1, 2).instance;
    const auto a = find_frm(inst);
    const auto b = find_frm(inst);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
    EXPECT_EQ(a.status, b.status);
}

TEST(FindFrm, HallPruningNeverChangesResults)
{
    std::mt19937 rng(4);
    SolveOptions hall;
    hall.hall_pruning = true;
    for (int trial = 0; trial < 150; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2, 8, 10, 4);
        const auto plain = find_frm(inst);
        const auto pruned = find_frm(inst, hall);
        ASSERT_EQ(plain.status, pruned.status);
        EXPECT_LE(pruned.nodes_explored, plain.nodes_explored);
    }
    EXPECT_TRUE(find_frm(example1(3, 2, 1, 1).instance, hall).certified_free());
}

TEST(FindFrm, ParallelMatchesSerial)
{
    std::mt19937 rng(12);
    SolveOptions par;
    par.threads = 4;
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2 + trial % 2, 9, 12, 4);
        const auto serial = detail::find_frm_serial(inst, {});
        const auto parallel = find_frm(inst, par);
        ASSERT_EQ(serial.status, parallel.status);
        EXPECT_EQ(serial.witness, parallel.witness);
    }
    for (const auto& fi : {example1(3, 2, 1, 1), knn_cayley(4), knn_cayley(5), k2m_family(3)}) {
        const auto serial = detail::find_frm_serial(fi.instance, {});
        const auto parallel = find_frm(fi.instance, par);
        EXPECT_EQ(serial.status, parallel.status);
        EXPECT_EQ(serial.witness, parallel.witness);
    }
}

TEST(MaxRainbow, NetAndTwoK4)
{
    const Net grid = standard_net(3, 2);
    const ColoredHypergraph net(grid.hypergraph, EdgeColoring(grid.parallel_classes));
    EXPECT_EQ(max_rainbow_matching(net).max_rainbow_size, 1u);
    EXPECT_EQ(max_rainbow_matching(g_construction(standard_net(2, 3), {1, 1, 1})).max_rainbow_size, 2u);
    EXPECT_EQ(max_rainbow_matching(ColoredHypergraph()).max_rainbow_size, 0u);
    EXPECT_EQ(brute_force_max_rainbow(ColoredHypergraph()).max_rainbow_size, 0u);
}

TEST(MaxRainbow, WitnessHasTheReportedSize)
{
    std::mt19937 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2, 7, 9, 5);
        const auto report = max_rainbow_matching(inst);
        ASSERT_TRUE(report.max_rainbow_size.has_value());
        ASSERT_TRUE(report.witness.has_value());
        EXPECT_EQ(report.witness->picks.size(), *report.max_rainbow_size);
        EXPECT_TRUE(validate_rainbow_matching(inst, *report.witness, false));
    }
}

TEST(BruteForce, CandidateCounts)
{
    const auto c4s = brute_force_frm(example1(2, 2, 1, 1).instance);
    EXPECT_TRUE(c4s.certified_free());
    EXPECT_EQ(c4s.candidates_examined, 81u);
    EXPECT_EQ(c4s.method, SolveMethod::enumeration);
    EXPECT_EQ(brute_force_frm(knn_cayley(2).instance).candidates_examined, 4u);
}

TEST(BruteForce, CapThrows)
{
    SolveOptions options;
    options.enumeration_cap = 80;
    EXPECT_THROW(brute_force_frm(example1(2, 2, 1, 1).instance, options), std::length_error);
}

TEST(BruteForce, IsolatedSingletonReducesToTheRest)
{
    const auto c4s = example1(2, 2, 1, 1).instance;
    const auto with_extra = [&] {
        auto inst = add_fresh_edge(c4s, 0, 2);
        auto classes = inst.coloring().classes();
        const EdgeId fresh = classes[0].back();
        classes[0].pop_back();
        classes.push_back({fresh});
        return ColoredHypergraph(inst.graph(), EdgeColoring(std::move(classes)));
    }();
    EXPECT_EQ(brute_force_frm(with_extra).found(), brute_force_frm(c4s).found());
}

TEST(BruteForce, ParallelMatchesSerial)
{
    std::mt19937 rng(13);
    SolveOptions par;
    par.threads = 4;
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2, 8, 11, 4);
        const auto serial = detail::brute_force_frm_serial(inst, {});
        const auto parallel = brute_force_frm(inst, par);
        ASSERT_EQ(serial.status, parallel.status);
        EXPECT_EQ(serial.witness, parallel.witness);
    }
}

TEST(Decompose, FiveGridsAndSingleComponent)
{
    const auto grids = decompose_and_solve(example1(3, 2, 1, 1).instance);
    EXPECT_TRUE(grids.certified_free());
    EXPECT_EQ(grids.method, SolveMethod::decomposition);

    const auto k4 = k4_matchings();
    EXPECT_EQ(decompose_and_solve(k4).status, find_frm(k4).status);
}

TEST(Decompose, ShannonStatementOne)
{
    const auto fi = thm15_statement1(shannon_triangle(3));
    EXPECT_TRUE(decompose_and_solve(fi.instance).certified_free());
}

TEST(Decompose, TinyLocalBudgetFallsBack)
{
    SolveOptions options;
    options.local_state_budget = 1;
    const auto report = decompose_and_solve(example1(2, 3, 1, 2).instance, options);
    EXPECT_TRUE(report.certified_free());
}

TEST(OracleAgreement, RandomInstances)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 2 + trial % 2;
        const auto inst = rainbow::testing::random_instance(rng, r, 6 + trial % 5, 8 + trial % 6, 3 + trial % 3);
        const auto brute = brute_force_frm(inst);
        const auto search = find_frm(inst);
        const auto decomposed = decompose_and_solve(inst);
        ASSERT_EQ(brute.found(), search.found()) << "trial " << trial;
        ASSERT_EQ(brute.found(), decomposed.found()) << "trial " << trial;
        EXPECT_TRUE(search.certified_free() || search.found());
        for (const auto* rep : {&brute, &search, &decomposed})
            if (rep->found())
                EXPECT_TRUE(validate_rainbow_matching(inst, *rep->witness, true));

        const auto best = brute_force_max_rainbow(inst).max_rainbow_size;
        EXPECT_EQ(max_rainbow_matching(inst).max_rainbow_size, best);
        EXPECT_EQ(decompose_max_rainbow(inst).max_rainbow_size, best);
    }
}

TEST(Monotonicity, DroppingAClassKeepsAnFrm)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 2, 8, 9, 4);
        if (!find_frm(inst).found())
            continue;
        std::uniform_int_distribution<std::size_t> cls(0, inst.num_classes() - 1);
        EXPECT_TRUE(find_frm(drop_class(inst, cls(rng))).found());
    }
}

TEST(Monotonicity, AddingAFreshEdgeKeepsAnFrm)
{
    std::mt19937 rng(78);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = rainbow::testing::random_instance(rng, 3, 9, 8, 3);
        const bool before = find_frm(inst).found();
        std::uniform_int_distribution<std::size_t> cls(0, inst.num_classes() - 1);
        const bool after = find_frm(add_fresh_edge(inst, cls(rng), 3)).found();
        if (before)
            EXPECT_TRUE(after);
    }
}

TEST(SolveReport, StatusNames)
{
    EXPECT_EQ(to_string(SolveStatus::found), "found");
    EXPECT_EQ(to_string(SolveStatus::exhausted), "exhausted");
    EXPECT_EQ(to_string(SolveStatus::inconclusive), "inconclusive");
    EXPECT_EQ(to_string(SolveMethod::decomposition), "decomposition");
}
