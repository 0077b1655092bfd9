// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "rainbow/composer.hpp"
#include "rainbow/families.hpp"
#include "rainbow/io.hpp"
#include "rainbow/listcolor.hpp"
#include "rainbow/solver.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rainbow;

namespace {

/// Collects failed checks for one criterion.
struct Checker {
    std::vector<std::string> failures;
    std::string detail;

    bool expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
        return ok;
    }
};

template <class T>
std::string str(const T& value)
{
    std::ostringstream out;
    out << value;
    return out.str();
}

bool all_sizes(const ColoredHypergraph& inst, std::size_t n, std::size_t size)
{
    return inst.coloring().class_sizes() == std::vector<std::size_t>(n, size);
}

bool solver_free(const ColoredHypergraph& inst, SolveOptions options = {})
{
    return decompose_and_solve(inst, options).certified_free();
}

std::vector<ReplicationAudit>& audits()
{
    static std::vector<ReplicationAudit> log;
    return log;
}

// Criterion 1.
void three_four_cycles(Checker& c)
{
    io::FamilyParams params;
    params.values = {{"r", 2}, {"delta", 2}};
    const auto inst = io::build_family("example1", params).instance();
    c.expect(components(inst.graph()).size() == 3, "three components");
    c.expect(all_sizes(inst, 4, 3), "four classes of size 3");
    c.expect(max_degree(inst.graph()) == 2, "max degree 2");
    c.expect(find_frm(inst).certified_free(), "solver certifies no FRM");
    const auto brute = brute_force_frm(inst);
    c.expect(brute.certified_free(), "brute force agrees");
    c.expect(brute.candidates_examined == 81, "81 candidates, saw " + str(brute.candidates_examined));
}

// Criterion 2.
void five_grids(Checker& c)
{
    const auto inst = example1(3, 2, 1, 1).instance;
    c.expect(components(inst.graph()).size() == 5, "five grid copies");
    c.expect(all_sizes(inst, 6, 5), "six classes of size 5");
    c.expect(find_frm(inst).certified_free(), "solver certifies no FRM");
    const auto brute = brute_force_frm(inst);
    c.expect(brute.certified_free(), "brute force agrees");
    c.expect(brute.candidates_examined == 15625, "15625 candidates, saw " + str(brute.candidates_examined));
}

// Criterion 3.
void example_one_sweep(Checker& c)
{
    const std::vector<std::pair<std::size_t, std::size_t>> grid{{1, 2}, {1, 3}, {2, 2}, {2, 3},
                                                                {2, 4}, {3, 2}, {3, 3}};
    for (const auto& [r, delta] : grid) {
        const std::string tag = "(r,delta)=(" + str(r) + "," + str(delta) + ") ";
        const auto inst = example1(r, delta, 1, delta - 1).instance;
        c.expect(inst.coloring().min_class_size() == r * delta - 1, tag + "min class r*delta-1");
        c.expect(max_degree(inst.graph()) == delta, tag + "max degree");
        c.expect(solver_free(inst), tag + "FRM-free");
    }
    c.detail = str(grid.size()) + " instances";
}

// Criterion 4.
void padded_instances(Checker& c)
{
    std::mt19937 rng(20240601);
    std::size_t trials = 0;
    for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t delta = 1; delta <= 3; ++delta)
            for (int k = 0; k < 23 && trials < 200; ++k, ++trials) {
                const auto inst = rainbow::testing::random_padded_instance(rng, r, delta);
                const std::string tag = "trial " + str(trials) + " ";
                if (!c.expect(max_degree(inst.graph()) <= delta && inst.coloring().min_class_size() >= r * delta,
                              tag + "generator broke its own bounds"))
                    continue;
                const auto report = find_frm(inst);
                c.expect(report.found() && validate_rainbow_matching(inst, *report.witness, true),
                         tag + "no FRM found");
            }
    // 9 parameter pairs x 23 leaves 7 short of 200; top up at r = delta = 3.
    for (; trials < 200; ++trials) {
        const auto inst = rainbow::testing::random_padded_instance(rng, 3, 3);
        const auto report = find_frm(inst);
        c.expect(report.found() && validate_rainbow_matching(inst, *report.witness, true),
                 "trial " + str(trials) + " no FRM found");
    }
    c.detail = str(trials) + " instances";
}

// Criterion 5.
void sunflowers(Checker& c)
{
    const std::vector<std::array<std::size_t, 3>> grid{{2, 1, 2}, {2, 1, 3}, {3, 2, 2}, {3, 3, 2}};
    for (const auto& [r, t, delta] : grid) {
        const std::string tag = "(" + str(r) + "," + str(t) + "," + str(delta) + ") ";
        const auto fi = sunflower_family(r, t, delta);
        const auto& g = fi.instance.graph();
        c.expect(is_t_simple(g, t), tag + "t-simple");
        c.expect(fi.manifest.partition_witness && verify_r_partition(g, *fi.manifest.partition_witness, r),
                 tag + "r-partition witness");
        c.expect(fi.instance.coloring().min_class_size() >= r * (delta - 1) + t - 1, tag + "class size");
        c.expect(solver_free(fi.instance), tag + "FRM-free");
    }
}

// Criterion 6.
void cayley_tables(Checker& c)
{
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto inst = knn_cayley(n).instance;
        const auto search = find_frm(inst);
        const auto brute = brute_force_frm(inst);
        const bool even = n % 2 == 0;
        c.expect(even ? search.certified_free() : search.found(), "n=" + str(n) + " solver");
        c.expect(brute.found() == search.found(), "n=" + str(n) + " oracle agreement");
        if (search.found())
            c.expect(validate_rainbow_matching(inst, *search.witness, true), "n=" + str(n) + " witness");
    }
}

bool two_k4_components(const ColoredHypergraph& inst)
{
    const auto comps = edge_components(inst.graph());
    if (comps.size() != 2)
        return false;
    for (const auto& comp : comps) {
        std::set<VertexId> verts;
        for (EdgeId e : comp)
            for (VertexId v : inst.graph().edge(e).vertices)
                verts.insert(v);
        if (verts.size() != 4 || comp.size() != 6)
            return false;
    }
    return is_simple(inst.graph());
}

// Criterion 7.
void cross_check_k4(Checker& c)
{
    for (const auto& [name, fi] : {std::pair{"bgs(3)", bgs_family(3)}, std::pair{"k2m(2)", k2m_family(2)}}) {
        c.expect(two_k4_components(fi.instance), std::string(name) + " two K4 components");
        c.expect(all_sizes(fi.instance, 3, 4), std::string(name) + " three classes of size 4");
        c.expect(find_frm(fi.instance).certified_free(), std::string(name) + " no FRM");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto k2m3 = k2m_family(3).instance;
    c.expect(all_sizes(k2m3, 7, 8), "k2m(3) seven classes of size 8");
    c.expect(find_frm(k2m3).certified_free(), "k2m(3) no FRM single-threaded");
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 120.0, "k2m(3) within 120s");
}

// Criterion 8.
void shannon_statement_one(Checker& c)
{
    for (std::size_t delta : {2u, 3u}) {
        const std::string tag = "delta=" + str(delta) + " ";
        const auto fi = thm15_statement1(shannon_triangle(delta));
        const std::size_t target = 3 * delta / 2;
        c.expect(is_proper(fi.instance), tag + "proper");
        c.expect(fi.instance.coloring().min_class_size() >= target, tag + "class size");
        c.expect(chromatic_index(fi.instance.graph()) == target, tag + "chromatic index");
        c.expect(solver_free(fi.instance), tag + "FRM-free");
    }
}

bool two_colors_every_edge(const MultiHypergraph& g, const PartitionWitness& sides)
{
    std::vector<int> side(g.num_vertices(), -1);
    for (std::size_t p = 0; p < sides.parts.size(); ++p)
        for (VertexId v : sides.parts[p])
            side[v] = static_cast<int>(p);
    for (const auto& e : g.edges())
        if (e.vertices.size() != 2 || side[e.vertices[0]] < 0 || side[e.vertices[0]] == side[e.vertices[1]])
            return false;
    return true;
}

// Criterion 9.
void bipartite_statement_two(Checker& c)
{
    for (std::size_t delta : {2u, 3u}) {
        const std::string tag = "delta=" + str(delta) + " ";
        const auto fi = thm15_statement2(delta);
        const auto& g = fi.instance.graph();
        const auto sides = bipartition(g);
        c.expect(sides && two_colors_every_edge(g, *sides), tag + "bipartite by 2-coloring");
        c.expect(is_simple(g), tag + "simple");
        c.expect(is_proper(fi.instance), tag + "proper");
        c.expect(fi.instance.coloring().min_class_size() >= delta + 1, tag + "class size");
        c.expect(solver_free(fi.instance), tag + "FRM-free");
    }
}

// Criterion 10.
void class_one_statement_three(Checker& c)
{
    for (std::size_t delta : {3u, 4u}) {
        const std::string tag = "delta=" + str(delta) + " ";
        const auto fi = thm15_statement3(delta);
        c.expect(is_proper(fi.instance), tag + "proper");
        c.expect(fi.instance.coloring().min_class_size() >= delta + 2, tag + "class size");
        c.expect(chromatic_index(fi.instance.graph()) == delta, tag + "chromatic index");
        c.expect(solver_free(fi.instance), tag + "FRM-free");
    }
}

// Criterion 11.
void galvin(Checker& c)
{
    for (std::size_t delta : {2u, 3u}) {
        const std::string tag = "delta=" + str(delta) + " ";
        const auto gi = galvin_counterexample(delta);
        c.expect(color_degree(gi.list) == delta, tag + "color degree");
        bool sizes = true;
        std::uint64_t assignments = 1;
        for (const auto& list : gi.list.lists) {
            sizes = sizes && list.size() == delta;
            assignments *= list.size();
        }
        c.expect(sizes, tag + "list sizes");
        c.expect(cover_correspondence(gi), tag + "cover isomorphic via origin map");
        const auto cc = check_cover_conditions(gi.graph);
        c.expect(cc.a_holds && cc.b_holds, tag + "cover conditions");
        c.expect(!l_coloring_exists(gi.list).has_value(), tag + "FRM solver finds no L-coloring");
        c.expect(!search_l_coloring(gi.list).has_value(), tag + "direct search finds no L-coloring");
        if (delta == 2)
            c.expect(assignments == 512, tag + "2^9 assignments");
        if (assignments <= 1'000'000)
            c.expect(!direct_l_coloring(gi.list).has_value(), tag + "direct enumeration finds no L-coloring");
    }
}

bool is_free(const ColoredHypergraph& inst) { return find_frm(inst).certified_free(); }

// Criterion 12.
void join_preservation(Checker& c)
{
    std::mt19937 rng(1201);
    std::vector<ColoredHypergraph> pool;
    std::uniform_int_distribution<std::size_t> r_dist(2, 3);
    std::uniform_int_distribution<std::size_t> n_dist(4, 6);
    std::uniform_int_distribution<std::size_t> m_dist(5, 8);
    std::uniform_int_distribution<std::size_t> k_dist(2, 4);
    while (pool.size() < 200) {
        const std::size_t r = r_dist(rng);
        const auto inst = rainbow::testing::random_instance(rng, r, n_dist(rng) + r - 2, m_dist(rng), k_dist(rng));
        if (is_free(inst))
            pool.push_back(inst);
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < pool.size(); i += 2, ++pairs) {
        const auto& receiver = pool[i];
        const auto& donor = pool[i + 1];
        std::uniform_int_distribution<std::size_t> cls(0, donor.num_classes() - 1);
        const std::size_t absorbed = cls(rng);
        std::vector<std::size_t> assignment(donor.coloring()[absorbed].size());
        std::uniform_int_distribution<std::size_t> target(0, receiver.num_classes() - 1);
        for (auto& t : assignment)
            t = target(rng);
        const auto layout = pairs % 2 ? JoinLayout::donor_first : JoinLayout::receiver_first;
        const auto out = join(receiver, donor, absorbed, explicit_plan(assignment), layout);
        c.expect(solver_free(out), "pair " + str(pairs) + " lost freeness");
    }
    c.detail = str(pairs) + " pairs";
}

std::size_t formula_k(std::vector<std::size_t> sizes, std::size_t q)
{
    std::size_t total = 0;
    std::size_t count = 0;
    for (std::size_t s : sizes)
        if (s < q) {
            total += s;
            ++count;
        }
    if (count == 0)
        return 1;
    const std::size_t denom = total - q * (count - 1);
    std::size_t k = 1;
    for (std::size_t s : sizes)
        if (s < q)
            k += (q - s + denom - 1) / denom;
    return k;
}

// Criterion 13. Audits every replication made so far in this run, after
// adding a few of its own on random bases.
void replication_bound_audit(Checker& c)
{
    std::mt19937 rng(1301);
    std::size_t extra = 0;
    for (int trial = 0; trial < 400 && extra < 50; ++trial) {
        const auto base = rainbow::testing::random_instance(rng, 2, 6, 9, 3);
        std::uniform_int_distribution<std::size_t> q_dist(1, 6);
        const std::size_t q = q_dist(rng);
        if (hypothesis_violation(base.coloring().class_sizes(), q))
            continue;
        replicate_to_class_size(base, q);
        ++extra;
    }
    for (const auto& [r, delta] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {2, 4}})
        example2(standard_net(r, 2), delta);
    small_n(standard_net(2, 3), 3, 9);

    for (std::size_t i = 0; i < audits().size(); ++i) {
        const auto& a = audits()[i];
        const std::string tag = "call " + str(i) + " ";
        const std::size_t m = a.base_sizes.size();
        const std::size_t k = formula_k(a.base_sizes, a.q);
        c.expect(a.bound_copies == k, tag + "reported bound differs from the formula");
        c.expect(a.copies <= k, tag + "copies " + str(a.copies) + " > k " + str(k));
        c.expect(!a.result_sizes.empty() &&
                     *std::min_element(a.result_sizes.begin(), a.result_sizes.end()) >= a.q,
                 tag + "min class below q");
        c.expect(a.result_sizes.size() == a.copies * (m - 1) + 1, tag + "class count");
    }
    c.detail = str(audits().size()) + " calls";
}

// Criterion 14.
void small_n_family(Checker& c)
{
    c.expect(small_n(standard_net(2, 2), 2, 4).instance == example1(2, 2, 1, 1).instance,
             "small_n(2,2,2,4) equals example1(2,2)");
    const auto inst = small_n(standard_net(2, 3), 3, 9).instance;
    c.expect(inst.num_classes() == 9, "nine classes");
    c.expect(inst.coloring().min_class_size() >= 5, "classes of size at least 5");
    c.expect(solver_free(inst), "FRM-free");
}

void cross_validate(Checker& c, const std::string& name, const ColoredHypergraph& inst)
{
    const auto search = find_frm(inst);
    const auto decomposed = decompose_and_solve(inst);
    c.expect(search.status != SolveStatus::inconclusive && decomposed.status != SolveStatus::inconclusive,
             name + " inconclusive");
    c.expect(search.found() == decomposed.found(), name + " find_frm vs decomposition");
    for (const auto* rep : {&search, &decomposed})
        if (rep->found())
            c.expect(validate_rainbow_matching(inst, *rep->witness, true), name + " witness");
    std::optional<SolveReport> brute;
    try {
        brute = brute_force_frm(inst);
    } catch (const std::length_error&) {
    }
    if (brute) {
        c.expect(brute->found() == search.found(), name + " brute force vs find_frm");
        if (brute->found())
            c.expect(validate_rainbow_matching(inst, *brute->witness, true), name + " brute witness");
    }

    const auto best = max_rainbow_matching(inst);
    const auto best_decomposed = decompose_max_rainbow(inst);
    c.expect(best.max_rainbow_size == best_decomposed.max_rainbow_size, name + " max size disagreement");
    for (const auto* rep : {&best, &best_decomposed})
        if (rep->witness)
            c.expect(validate_rainbow_matching(inst, *rep->witness, false) &&
                         rep->witness->picks.size() == rep->max_rainbow_size,
                     name + " max witness");
    c.expect(search.found() == (best.max_rainbow_size == inst.num_classes()), name + " max vs found");
    try {
        c.expect(brute_force_max_rainbow(inst).max_rainbow_size == best.max_rainbow_size, name + " brute max size");
    } catch (const std::length_error&) {
    }
}

// Criterion 15.
void corpus_cross_validation(Checker& c)
{
    std::size_t checked = 0;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(RAINBOW_TEST_DATA_DIR))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    c.expect(!files.empty(), "golden corpus is empty");
    for (const auto& path : files) {
        const auto doc = io::parse_document(rainbow::testing::read_file(path.string()));
        cross_validate(c, path.filename().string(), doc.instance());
        ++checked;
    }
    const std::vector<std::pair<std::string, FamilyInstance>> families{
        {"example1(2,3)", example1(2, 3, 1, 2)},
        {"knn_cayley(3)", knn_cayley(3)},
        {"knn_cayley(4)", knn_cayley(4)},
        {"bgs(3)", bgs_family(3)},
        {"sunflower(2,1,3)", sunflower_family(2, 1, 3)},
        {"thm15_1(shannon 2)", thm15_statement1(shannon_triangle(2))},
        {"thm15_2(2)", thm15_statement2(2)},
    };
    for (const auto& [name, fi] : families) {
        cross_validate(c, name, fi.instance);
        ++checked;
    }
    c.detail = str(checked) + " instances";
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no stated limit
    std::function<void(Checker&)> run;
};

}  // namespace

int main()
{
    set_replication_observer([](const ReplicationAudit& a) { audits().push_back(a); });

    const std::vector<Criterion> criteria{
        {1, "example1 r=2 delta=2: three 4-cycles", 1, three_four_cycles},
        {2, "example1 r=3 delta=2: five 3x3 grids", 1, five_grids},
        {3, "example1 sweep over (r, delta)", 60, example_one_sweep},
        {4, "padded random instances have an FRM", 0, padded_instances},
        {5, "sunflower family", 30, sunflowers},
        {6, "K_{n,n} Cayley tables", 0, cayley_tables},
        {7, "two-K4 families and k2m(3)", 0, cross_check_k4},
        {8, "Shannon triangle, statement 1", 0, shannon_statement_one},
        {9, "bipartite simple, statement 2", 0, bipartite_statement_two},
        {10, "class-one multigraph, statement 3", 600, class_one_statement_three},
        {11, "list edge coloring counterexample", 120, galvin},
        {12, "join preserves freeness", 0, join_preservation},
        {13, "replication copy bound", 0, replication_bound_audit},
        {14, "small-n family", 0, small_n_family},
        {15, "solver cross-validation on the corpus", 0, corpus_cross_validation},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds)
            checker.failures.push_back("took " + str(seconds) + "s, limit " + str(criterion.limit_seconds) + "s");

        const bool ok = checker.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s %2d %s (%.3fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id, criterion.title.c_str(), seconds,
                    checker.detail.empty() ? "" : ", ", checker.detail.c_str());
        for (std::size_t i = 0; i < checker.failures.size() && i < 10; ++i)
            std::printf("       - %s\n", checker.failures[i].c_str());
        if (checker.failures.size() > 10)
            std::printf("       - ... %zu more\n", checker.failures.size() - 10);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
