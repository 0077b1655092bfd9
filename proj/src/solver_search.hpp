#pragma once

// Internal backtracking engine shared by the serial and OpenMP kernels.

#include "rainbow/solver.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <vector>

namespace rainbow::detail {

constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

class FrmSearch {
public:
    FrmSearch(const ColoredHypergraph& instance, const SolveOptions& options);

    /// Shared node counter for the budget, and a cancellation predicate
    /// polled every few hundred nodes. Both optional.
    void attach(std::atomic<std::uint64_t>* shared_nodes, const std::atomic<bool>* cancel)
    {
        shared_nodes_ = shared_nodes;
        cancel_ = cancel;
    }

    /// Depth-first search from the current partial assignment.
    bool solve();

    /// Branch and bound on the number of represented classes; updates best_.
    void maximise();

    /// The unassigned class with the fewest live candidates (lowest index on
    /// ties) and its live edges. Returns false when every class is assigned.
    bool pick_class(std::size_t& cls, std::vector<EdgeId>& live) const;

    void assign(std::size_t cls, EdgeId e);
    void unassign(std::size_t cls);

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    RainbowMatching current_matching() const;

    std::size_t best_size() const noexcept { return best_size_; }
    const RainbowMatching& best_matching() const noexcept { return best_; }
    void set_best(std::size_t size) { best_size_ = size; }

private:
    bool is_live(EdgeId e) const;
    bool tick();
    bool hall_prune() const;
    std::size_t live_count(std::size_t cls) const;

    const ColoredHypergraph& instance_;
    const SolveOptions& options_;
    std::vector<char> used_;
    std::vector<EdgeId> pick_;
    std::size_t assigned_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
    const std::atomic<bool>* cancel_ = nullptr;

    // Maximisation state.
    std::vector<char> skipped_;
    std::size_t best_size_ = 0;
    RainbowMatching best_;

    // Hall pruning data.
    std::vector<std::size_t> component_of_edge_;
    std::vector<std::vector<VertexId>> component_vertices_;
    std::size_t min_edge_size_ = 1;
};

}  // namespace rainbow::detail
