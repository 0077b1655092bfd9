#include "solver_search.hpp"

#include "capacity_matching.hpp"

#include <algorithm>

namespace rainbow::detail {

FrmSearch::FrmSearch(const ColoredHypergraph& instance, const SolveOptions& options)
    : instance_(instance),
      options_(options),
      used_(instance.graph().num_vertices(), 0),
      pick_(instance.num_classes(), no_edge),
      skipped_(instance.num_classes(), 0)
{
    if (options_.hall_pruning) {
        const auto& g = instance.graph();
        const auto comps = edge_components(g);
        component_of_edge_.resize(g.num_edges());
        component_vertices_.resize(comps.size());
        min_edge_size_ = g.num_edges() == 0 ? 1 : g.edge(0).vertices.size();
        for (std::size_t k = 0; k < comps.size(); ++k) {
            std::vector<VertexId> vs;
            for (EdgeId e : comps[k]) {
                component_of_edge_[e] = k;
                const auto& ev = g.edge(e).vertices;
                vs.insert(vs.end(), ev.begin(), ev.end());
                min_edge_size_ = std::min(min_edge_size_, ev.size());
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            component_vertices_[k] = std::move(vs);
        }
    }
}

bool FrmSearch::is_live(EdgeId e) const
{
    for (VertexId v : instance_.graph().edge(e).vertices)
        if (used_[v])
            return false;
    return true;
}

std::size_t FrmSearch::live_count(std::size_t cls) const
{
    std::size_t count = 0;
    for (EdgeId e : instance_.coloring()[cls])
        count += is_live(e) ? 1 : 0;
    return count;
}

bool FrmSearch::tick()
{
    ++nodes_;
    std::uint64_t total = nodes_;
    if (shared_nodes_ != nullptr)
        total = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.node_budget != 0 && total > options_.node_budget)
        aborted_ = true;
    if (cancel_ != nullptr && (nodes_ & 0xff) == 0 && cancel_->load(std::memory_order_relaxed))
        aborted_ = true;
    return !aborted_;
}

bool FrmSearch::pick_class(std::size_t& cls, std::vector<EdgeId>& live) const
{
    const std::size_t n = instance_.num_classes();
    std::size_t best = static_cast<std::size_t>(-1);
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (pick_[c] != no_edge || skipped_[c])
            continue;
        const std::size_t count = live_count(c);
        if (!any || count < best) {
            any = true;
            best = count;
            cls = c;
            if (count == 0)
                break;
        }
    }
    if (!any)
        return false;
    live.clear();
    for (EdgeId e : instance_.coloring()[cls])
        if (is_live(e))
            live.push_back(e);
    return true;
}

void FrmSearch::assign(std::size_t cls, EdgeId e)
{
    pick_[cls] = e;
    ++assigned_;
    for (VertexId v : instance_.graph().edge(e).vertices)
        used_[v] = 1;
}

void FrmSearch::unassign(std::size_t cls)
{
    for (VertexId v : instance_.graph().edge(pick_[cls]).vertices)
        used_[v] = 0;
    pick_[cls] = no_edge;
    --assigned_;
}

RainbowMatching FrmSearch::current_matching() const
{
    RainbowMatching m;
    for (std::size_t c = 0; c < pick_.size(); ++c)
        if (pick_[c] != no_edge)
            m.picks.emplace(c, pick_[c]);
    return m;
}

bool FrmSearch::hall_prune() const
{
    const std::size_t n = instance_.num_classes();
    std::vector<std::size_t> capacity(component_vertices_.size());
    for (std::size_t k = 0; k < capacity.size(); ++k) {
        std::size_t free = 0;
        for (VertexId v : component_vertices_[k])
            free += used_[v] ? 0 : 1;
        capacity[k] = free / min_edge_size_;
    }
    std::vector<std::vector<std::size_t>> adj;
    for (std::size_t c = 0; c < n; ++c) {
        if (pick_[c] != no_edge)
            continue;
        std::vector<std::size_t> comps;
        for (EdgeId e : instance_.coloring()[c])
            if (is_live(e))
                comps.push_back(component_of_edge_[e]);
        std::sort(comps.begin(), comps.end());
        comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
        adj.push_back(std::move(comps));
    }
    CapacityMatching matching(adj, capacity);
    return matching.solve() < adj.size();
}

bool FrmSearch::solve()
{
    if (!tick())
        return false;
    if (assigned_ == instance_.num_classes())
        return true;
    if (options_.hall_pruning && hall_prune())
        return false;
    std::size_t cls = 0;
    std::vector<EdgeId> live;
    pick_class(cls, live);
    for (EdgeId e : live) {
        assign(cls, e);
        if (solve())
            return true;
        unassign(cls);
        if (aborted_)
            return false;
    }
    return false;
}

void FrmSearch::maximise()
{
    if (!tick())
        return;
    if (assigned_ > best_size_) {
        best_size_ = assigned_;
        best_ = current_matching();
    }
    if (best_size_ == instance_.num_classes())
        return;

    std::size_t potential = 0;
    for (std::size_t c = 0; c < pick_.size(); ++c)
        if (pick_[c] == no_edge && !skipped_[c] && live_count(c) > 0)
            ++potential;
    if (assigned_ + potential <= best_size_)
        return;

    // Classes with no live edge are skipped outright.
    std::vector<std::size_t> dead;
    std::size_t cls = 0;
    std::vector<EdgeId> live;
    while (pick_class(cls, live) && live.empty()) {
        skipped_[cls] = 1;
        dead.push_back(cls);
    }
    if (!live.empty()) {
        for (EdgeId e : live) {
            assign(cls, e);
            maximise();
            unassign(cls);
            if (aborted_ || best_size_ == instance_.num_classes())
                break;
        }
        if (!aborted_ && best_size_ != instance_.num_classes()) {
            skipped_[cls] = 1;
            maximise();
            skipped_[cls] = 0;
        }
    }
    for (std::size_t c : dead)
        skipped_[c] = 0;
}

}  // namespace rainbow::detail
