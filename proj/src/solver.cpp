#include "rainbow/solver.hpp"

#include "solver_search.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <memory>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rainbow {

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::found: return "found";
    case SolveStatus::exhausted: return "exhausted";
    case SolveStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string to_string(SolveMethod method)
{
    switch (method) {
    case SolveMethod::backtracking: return "backtracking";
    case SolveMethod::enumeration: return "enumeration";
    case SolveMethod::decomposition: return "decomposition";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

void finish(SolveReport& report, const ColoredHypergraph& instance, Clock::time_point start, bool full)
{
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    if (report.witness && !validate_rainbow_matching(instance, *report.witness, full))
        throw std::logic_error("solver produced an invalid rainbow matching");
}

/// Product of the given factors, saturating above the cap.
std::uint64_t capped_product(const std::vector<std::uint64_t>& factors, std::uint64_t cap)
{
    std::uint64_t total = 1;
    for (std::uint64_t f : factors) {
        if (f == 0)
            return 0;
        if (total > cap / f)
            return cap + 1;
        total *= f;
    }
    return total;
}

/// Vertex-disjointness of a tuple of edges, using a stamp array.
class DisjointChecker {
public:
    explicit DisjointChecker(const MultiHypergraph& g) : g_(g), stamp_(g.num_vertices(), 0) {}

    template <typename Picks>
    bool disjoint(const Picks& edges)
    {
        ++round_;
        for (EdgeId e : edges) {
            if (e == detail::no_edge)
                continue;
            for (VertexId v : g_.edge(e).vertices) {
                if (stamp_[v] == round_)
                    return false;
                stamp_[v] = round_;
            }
        }
        return true;
    }

private:
    const MultiHypergraph& g_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t round_ = 0;
};

RainbowMatching matching_from(const std::vector<EdgeId>& picks)
{
    RainbowMatching m;
    for (std::size_t c = 0; c < picks.size(); ++c)
        if (picks[c] != detail::no_edge)
            m.picks.emplace(c, picks[c]);
    return m;
}

/// Decodes a linear index into one edge per class, last class fastest.
void decode(std::uint64_t index, const EdgeColoring& coloring, std::vector<EdgeId>& picks)
{
    for (std::size_t c = coloring.num_classes(); c-- > 0;) {
        const auto& cls = coloring[c];
        picks[c] = cls[index % cls.size()];
        index /= cls.size();
    }
}

std::uint64_t enumeration_size(const ColoredHypergraph& instance, const SolveOptions& options)
{
    std::vector<std::uint64_t> sizes;
    for (const auto& cls : instance.coloring().classes())
        sizes.push_back(cls.size());
    const std::uint64_t total = capped_product(sizes, options.enumeration_cap);
    if (total > options.enumeration_cap)
        throw std::length_error("enumeration exceeds the configured cap");
    return total;
}

#ifdef _OPENMP

SolveReport find_frm_parallel(const ColoredHypergraph& instance, const SolveOptions& options)
{
    SolveReport report;
    report.method = SolveMethod::backtracking;

    detail::FrmSearch root(instance, options);
    std::size_t cls = 0;
    std::vector<EdgeId> live;
    if (!root.pick_class(cls, live)) {
        report.status = SolveStatus::found;
        report.witness = RainbowMatching{};
        report.nodes_explored = 1;
        return report;
    }

    enum : int { pending, found, exhausted, aborted, cancelled };
    const std::size_t branches = live.size();
    std::vector<int> outcome(branches, pending);
    std::vector<RainbowMatching> witnesses(branches);
    auto cancel = std::make_unique<std::atomic<bool>[]>(branches);
    for (std::size_t i = 0; i < branches; ++i)
        cancel[i].store(false);
    std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::uint64_t> nodes{1};

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
    for (std::size_t i = 0; i < branches; ++i) {
        if (first_found.load() < i || cancel[i].load()) {
            outcome[i] = cancelled;
            continue;
        }
        detail::FrmSearch search(instance, options);
        search.attach(&nodes, &cancel[i]);
        search.assign(cls, live[i]);
        if (search.solve()) {
            witnesses[i] = search.current_matching();
            outcome[i] = found;
            std::size_t prev = first_found.load();
            while (i < prev && !first_found.compare_exchange_weak(prev, i)) {
            }
            for (std::size_t k = i + 1; k < branches; ++k)
                cancel[k].store(true);
        } else if (search.aborted()) {
            outcome[i] = cancel[i].load() ? cancelled : aborted;
        } else {
            outcome[i] = exhausted;
        }
    }

    report.nodes_explored = nodes.load();
    report.status = SolveStatus::exhausted;
    for (std::size_t i = 0; i < branches; ++i) {
        if (outcome[i] == found) {
            report.status = SolveStatus::found;
            report.witness = witnesses[i];
            break;
        }
        if (outcome[i] != exhausted) {
            report.status = SolveStatus::inconclusive;
            break;
        }
    }
    return report;
}

SolveReport brute_force_frm_parallel(const ColoredHypergraph& instance, const SolveOptions& options)
{
    SolveReport report;
    report.method = SolveMethod::enumeration;
    const std::uint64_t total = enumeration_size(instance, options);
    const auto& coloring = instance.coloring();
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};

#pragma omp parallel num_threads(options.threads)
    {
        DisjointChecker checker(instance.graph());
        std::vector<EdgeId> picks(coloring.num_classes());
#pragma omp for schedule(dynamic, 4096)
        for (std::uint64_t i = 0; i < total; ++i) {
            if (i > best.load(std::memory_order_relaxed))
                continue;
            decode(i, coloring, picks);
            if (checker.disjoint(picks)) {
                std::uint64_t prev = best.load();
                while (i < prev && !best.compare_exchange_weak(prev, i)) {
                }
            }
        }
    }

    if (best.load() != none) {
        std::vector<EdgeId> picks(coloring.num_classes());
        decode(best.load(), coloring, picks);
        report.status = SolveStatus::found;
        report.witness = matching_from(picks);
        report.candidates_examined = best.load() + 1;
    } else {
        report.status = SolveStatus::exhausted;
        report.candidates_examined = total;
    }
    report.nodes_explored = report.candidates_examined;
    return report;
}

#endif  // _OPENMP

}  // namespace

namespace detail {

SolveReport find_frm_serial(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::backtracking;
    FrmSearch search(instance, options);
    if (search.solve()) {
        report.status = SolveStatus::found;
        report.witness = search.current_matching();
    } else {
        report.status = search.aborted() ? SolveStatus::inconclusive : SolveStatus::exhausted;
    }
    report.nodes_explored = search.nodes();
    finish(report, instance, start, true);
    return report;
}

SolveReport brute_force_frm_serial(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::enumeration;
    const std::uint64_t total = enumeration_size(instance, options);
    const auto& coloring = instance.coloring();
    const std::size_t n = coloring.num_classes();

    DisjointChecker checker(instance.graph());
    std::vector<std::size_t> digit(n, 0);
    std::vector<EdgeId> picks(n);
    for (std::size_t c = 0; c < n; ++c)
        picks[c] = coloring[c][0];

    report.status = SolveStatus::exhausted;
    for (std::uint64_t i = 0; i < total; ++i) {
        ++report.candidates_examined;
        if (checker.disjoint(picks)) {
            report.status = SolveStatus::found;
            report.witness = matching_from(picks);
            break;
        }
        for (std::size_t c = n; c-- > 0;) {
            if (++digit[c] < coloring[c].size()) {
                picks[c] = coloring[c][digit[c]];
                break;
            }
            digit[c] = 0;
            picks[c] = coloring[c][0];
        }
    }
    report.nodes_explored = report.candidates_examined;
    finish(report, instance, start, true);
    return report;
}

}  // namespace detail

SolveReport find_frm(const ColoredHypergraph& instance, const SolveOptions& options)
{
#ifdef _OPENMP
    if (options.threads > 1) {
        const auto start = Clock::now();
        SolveReport report = find_frm_parallel(instance, options);
        finish(report, instance, start, true);
        return report;
    }
#endif
    return detail::find_frm_serial(instance, options);
}

SolveReport brute_force_frm(const ColoredHypergraph& instance, const SolveOptions& options)
{
#ifdef _OPENMP
    if (options.threads > 1) {
        const auto start = Clock::now();
        SolveReport report = brute_force_frm_parallel(instance, options);
        finish(report, instance, start, true);
        return report;
    }
#endif
    return detail::brute_force_frm_serial(instance, options);
}

SolveReport max_rainbow_matching(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::backtracking;
    detail::FrmSearch search(instance, options);
    search.maximise();
    report.nodes_explored = search.nodes();
    report.max_rainbow_size = search.best_size();
    report.witness = search.best_matching();
    if (search.aborted())
        report.status = SolveStatus::inconclusive;
    else if (search.best_size() == instance.num_classes())
        report.status = SolveStatus::found;
    else
        report.status = SolveStatus::exhausted;
    finish(report, instance, start, false);
    return report;
}

SolveReport brute_force_max_rainbow(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::enumeration;
    const auto& coloring = instance.coloring();
    const std::size_t n = coloring.num_classes();
    std::vector<std::uint64_t> factors;
    for (const auto& cls : coloring.classes())
        factors.push_back(cls.size() + 1);
    const std::uint64_t total = capped_product(factors, options.enumeration_cap);
    if (total > options.enumeration_cap)
        throw std::length_error("enumeration exceeds the configured cap");

    // digit 0 means the class is not represented.
    DisjointChecker checker(instance.graph());
    std::vector<std::size_t> digit(n, 0);
    std::vector<EdgeId> picks(n, detail::no_edge);
    std::size_t represented = 0;
    std::size_t best = 0;
    std::vector<EdgeId> best_picks(n, detail::no_edge);
    for (std::uint64_t i = 0; i < total; ++i) {
        ++report.candidates_examined;
        if (represented > best && checker.disjoint(picks)) {
            best = represented;
            best_picks = picks;
            if (best == n)
                break;
        }
        for (std::size_t c = n; c-- > 0;) {
            if (digit[c] == 0)
                ++represented;
            if (++digit[c] <= coloring[c].size()) {
                picks[c] = coloring[c][digit[c] - 1];
                break;
            }
            digit[c] = 0;
            picks[c] = detail::no_edge;
            --represented;
        }
    }
    report.max_rainbow_size = best;
    report.witness = matching_from(best_picks);
    report.status = best == n ? SolveStatus::found : SolveStatus::exhausted;
    report.nodes_explored = report.candidates_examined;
    finish(report, instance, start, false);
    return report;
}

}  // namespace rainbow
