// Component decomposition: enumerate, per edge component, the sets of classes
// it can represent simultaneously, then search for a cover of all classes.

#include "rainbow/solver.hpp"

#include "capacity_matching.hpp"
#include "solver_search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

constexpr std::size_t max_local_classes = 62;

struct LocalSet {
    Mask mask = 0;
    std::vector<EdgeId> witness;  // one edge per set bit, in bit order
};

struct Component {
    std::vector<std::size_t> classes;  // local index -> global class
    std::vector<LocalSet> maximal;
};

/// Depth-first enumeration of the class sets one component can represent.
class LocalEnumerator {
public:
    LocalEnumerator(const MultiHypergraph& g, std::vector<std::vector<EdgeId>> candidates, std::uint64_t budget)
        : g_(g), candidates_(std::move(candidates)), budget_(budget), used_(g.num_vertices(), 0)
    {
    }

    bool run(std::vector<LocalSet>& out)
    {
        picks_.clear();
        dfs(0, 0);
        if (overflow_)
            return false;
        std::vector<LocalSet> sets;
        sets.reserve(found_.size());
        for (auto& [mask, witness] : found_)
            sets.push_back({mask, std::move(witness)});
        std::sort(sets.begin(), sets.end(), [](const LocalSet& a, const LocalSet& b) {
            const int pa = std::popcount(a.mask);
            const int pb = std::popcount(b.mask);
            return pa != pb ? pa > pb : a.mask < b.mask;
        });
        out.clear();
        for (auto& s : sets) {
            const bool dominated = std::any_of(out.begin(), out.end(), [&](const LocalSet& kept) {
                return (s.mask & ~kept.mask) == 0;
            });
            if (!dominated)
                out.push_back(std::move(s));
        }
        return true;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool free(EdgeId e) const
    {
        for (VertexId v : g_.edge(e).vertices)
            if (used_[v])
                return false;
        return true;
    }

    void mark(EdgeId e, char value)
    {
        for (VertexId v : g_.edge(e).vertices)
            used_[v] = value;
    }

    void dfs(std::size_t j, Mask mask)
    {
        if (overflow_)
            return;
        if (++nodes_ > budget_) {
            overflow_ = true;
            return;
        }
        if (j == candidates_.size()) {
            if (mask != 0 && !found_.contains(mask))
                found_.emplace(mask, picks_);
            return;
        }
        for (EdgeId e : candidates_[j]) {
            if (!free(e))
                continue;
            mark(e, 1);
            picks_.push_back(e);
            dfs(j + 1, mask | (Mask{1} << j));
            picks_.pop_back();
            mark(e, 0);
        }
        dfs(j + 1, mask);
    }

    const MultiHypergraph& g_;
    std::vector<std::vector<EdgeId>> candidates_;
    std::uint64_t budget_;
    std::vector<char> used_;
    std::vector<EdgeId> picks_;
    std::unordered_map<Mask, std::vector<EdgeId>> found_;
    std::uint64_t nodes_ = 0;
    bool overflow_ = false;
};

/// Builds the per-component tables; returns false when a component is too
/// large for the decomposition.
bool build_components(const ColoredHypergraph& instance, const SolveOptions& options,
                      std::vector<Component>& out, std::uint64_t& nodes)
{
    const auto& g = instance.graph();
    const auto class_of = instance.coloring().class_of_edges(g.num_edges());
    const auto comps = edge_components(g);
    out.clear();
    out.reserve(comps.size());
    for (const auto& edges : comps) {
        Component comp;
        std::vector<std::vector<EdgeId>> candidates;
        std::unordered_map<std::size_t, std::size_t> local_of;
        for (EdgeId e : edges) {
            const std::size_t c = class_of[e];
            auto [it, inserted] = local_of.emplace(c, comp.classes.size());
            if (inserted) {
                comp.classes.push_back(c);
                candidates.emplace_back();
            }
            // Parallel edges of one class are interchangeable.
            auto& list = candidates[it->second];
            const bool duplicate = std::any_of(list.begin(), list.end(), [&](EdgeId f) {
                return g.edge(f).vertices == g.edge(e).vertices;
            });
            if (!duplicate)
                list.push_back(e);
        }
        if (comp.classes.size() > max_local_classes)
            return false;
        LocalEnumerator enumerator(g, std::move(candidates), options.local_state_budget);
        const bool ok = enumerator.run(comp.maximal);
        nodes += enumerator.nodes();
        if (!ok)
            return false;
        out.push_back(std::move(comp));
    }
    return true;
}

/// Upper bound on how many of the `open` classes the unused components can
/// still represent: each component takes at most its largest intersection.
std::size_t flow_bound(const std::vector<Component>& comps, const std::vector<char>& comp_used,
                       const std::vector<char>& covered, std::size_t num_classes)
{
    std::vector<std::size_t> capacity(comps.size(), 0);
    std::vector<std::vector<std::size_t>> adj(num_classes);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (comp_used[k])
            continue;
        const auto& comp = comps[k];
        Mask open = 0;
        for (std::size_t j = 0; j < comp.classes.size(); ++j)
            if (!covered[comp.classes[j]])
                open |= Mask{1} << j;
        std::size_t best = 0;
        for (const auto& s : comp.maximal)
            best = std::max<std::size_t>(best, std::popcount(s.mask & open));
        capacity[k] = best;
        if (best == 0)
            continue;
        for (std::size_t j = 0; j < comp.classes.size(); ++j)
            if (open & (Mask{1} << j))
                adj[comp.classes[j]].push_back(k);
    }
    std::vector<std::vector<std::size_t>> left;
    for (std::size_t c = 0; c < num_classes; ++c)
        if (!covered[c])
            left.push_back(std::move(adj[c]));
    detail::CapacityMatching matching(left, capacity);
    return matching.solve();
}

class CoverSearch {
public:
    CoverSearch(const std::vector<Component>& comps, std::size_t num_classes, const SolveOptions& options)
        : comps_(comps),
          options_(options),
          n_(num_classes),
          covered_(num_classes, 0),
          comp_used_(comps.size(), 0),
          picks_(num_classes, detail::no_edge),
          covering_(num_classes)
    {
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (std::size_t c : comps[k].classes)
                covering_[c].push_back(k);
    }

    bool solve() { return cover(0); }

    void maximise()
    {
        best_ = 0;
        best_picks_ = picks_;
        grow(0, 0);
    }

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::size_t best() const noexcept { return best_; }
    RainbowMatching matching(bool best) const
    {
        RainbowMatching m;
        const auto& source = best ? best_picks_ : picks_;
        for (std::size_t c = 0; c < source.size(); ++c)
            if (source[c] != detail::no_edge)
                m.picks.emplace(c, source[c]);
        return m;
    }

private:
    bool tick()
    {
        ++nodes_;
        if (options_.node_budget != 0 && nodes_ > options_.node_budget)
            aborted_ = true;
        return !aborted_;
    }

    /// Applies a set to the uncovered classes; returns the classes it took.
    std::vector<std::size_t> apply(std::size_t k, const LocalSet& s)
    {
        std::vector<std::size_t> taken;
        const auto& comp = comps_[k];
        std::size_t bit = 0;
        for (std::size_t j = 0; j < comp.classes.size(); ++j) {
            if (!(s.mask & (Mask{1} << j)))
                continue;
            const std::size_t c = comp.classes[j];
            if (!covered_[c]) {
                covered_[c] = 1;
                picks_[c] = s.witness[bit];
                taken.push_back(c);
            }
            ++bit;
        }
        comp_used_[k] = 1;
        return taken;
    }

    void undo(std::size_t k, const std::vector<std::size_t>& taken)
    {
        for (std::size_t c : taken) {
            covered_[c] = 0;
            picks_[c] = detail::no_edge;
        }
        comp_used_[k] = 0;
    }

    bool cover(std::size_t done)
    {
        if (!tick())
            return false;
        if (done == n_)
            return true;
        if (done + flow_bound(comps_, comp_used_, covered_, n_) < n_)
            return false;

        // Fail-first: the uncovered class with the fewest usable components.
        std::size_t target = n_;
        std::size_t fewest = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            if (covered_[c])
                continue;
            std::size_t count = 0;
            for (std::size_t k : covering_[c])
                count += comp_used_[k] ? 0 : 1;
            if (target == n_ || count < fewest) {
                target = c;
                fewest = count;
            }
        }
        if (fewest == 0)
            return false;

        for (std::size_t k : covering_[target]) {
            if (comp_used_[k])
                continue;
            const auto& comp = comps_[k];
            const std::size_t j = static_cast<std::size_t>(
                std::find(comp.classes.begin(), comp.classes.end(), target) - comp.classes.begin());
            for (const auto& s : comp.maximal) {
                if (!(s.mask & (Mask{1} << j)))
                    continue;
                const auto taken = apply(k, s);
                if (cover(done + taken.size()))
                    return true;
                undo(k, taken);
                if (aborted_)
                    return false;
            }
        }
        return false;
    }

    void grow(std::size_t k, std::size_t done)
    {
        if (!tick())
            return;
        if (done > best_) {
            best_ = done;
            best_picks_ = picks_;
        }
        if (k == comps_.size() || best_ == n_)
            return;
        if (done + flow_bound(comps_, comp_used_, covered_, n_) <= best_)
            return;
        for (const auto& s : comps_[k].maximal) {
            const auto taken = apply(k, s);
            if (!taken.empty())
                grow(k + 1, done + taken.size());
            undo(k, taken);
            if (aborted_ || best_ == n_)
                return;
        }
        comp_used_[k] = 1;
        grow(k + 1, done);
        comp_used_[k] = 0;
    }

    const std::vector<Component>& comps_;
    const SolveOptions& options_;
    std::size_t n_;
    std::vector<char> covered_;
    std::vector<char> comp_used_;
    std::vector<EdgeId> picks_;
    std::vector<std::vector<std::size_t>> covering_;
    std::size_t best_ = 0;
    std::vector<EdgeId> best_picks_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

void finish(SolveReport& report, const ColoredHypergraph& instance, Clock::time_point start, bool full)
{
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    if (report.witness && !validate_rainbow_matching(instance, *report.witness, full))
        throw std::logic_error("decomposition produced an invalid rainbow matching");
}

}  // namespace

SolveReport decompose_and_solve(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    std::vector<Component> comps;
    std::uint64_t local_nodes = 0;
    if (!build_components(instance, options, comps, local_nodes))
        return find_frm(instance, options);

    SolveReport report;
    report.method = SolveMethod::decomposition;
    CoverSearch search(comps, instance.num_classes(), options);
    if (search.solve()) {
        report.status = SolveStatus::found;
        report.witness = search.matching(false);
    } else {
        report.status = search.aborted() ? SolveStatus::inconclusive : SolveStatus::exhausted;
    }
    report.nodes_explored = local_nodes + search.nodes();
    finish(report, instance, start, true);
    return report;
}

SolveReport decompose_max_rainbow(const ColoredHypergraph& instance, const SolveOptions& options)
{
    const auto start = Clock::now();
    std::vector<Component> comps;
    std::uint64_t local_nodes = 0;
    if (!build_components(instance, options, comps, local_nodes))
        return max_rainbow_matching(instance, options);

    SolveReport report;
    report.method = SolveMethod::decomposition;
    CoverSearch search(comps, instance.num_classes(), options);
    search.maximise();
    report.max_rainbow_size = search.best();
    report.witness = search.matching(true);
    if (search.aborted())
        report.status = SolveStatus::inconclusive;
    else
        report.status = search.best() == instance.num_classes() ? SolveStatus::found : SolveStatus::exhausted;
    report.nodes_explored = local_nodes + search.nodes();
    finish(report, instance, start, false);
    return report;
}

}  // namespace rainbow
