#pragma once

// Exact search for full rainbow matchings.
//
// find_frm and brute_force_frm each come in two flavours: a serial reference
// kernel and an OpenMP kernel selected with SolveOptions::threads > 1. Both
// return the same status and the same witness; only node counts differ.

#include "rainbow/hypergraph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace rainbow {

enum class SolveStatus {
    found,         // witness present and revalidated
    exhausted,     // complete search, no full rainbow matching
    inconclusive,  // node budget hit before the search completed
};

enum class SolveMethod { backtracking, enumeration, decomposition };

std::string to_string(SolveStatus status);
std::string to_string(SolveMethod method);

struct SolveReport {
    SolveStatus status = SolveStatus::inconclusive;
    std::optional<RainbowMatching> witness;
    /// Filled by the maximisation entry points.
    std::optional<std::size_t> max_rainbow_size;
    std::uint64_t nodes_explored = 0;
    /// Enumeration only: number of full tuples examined.
    std::uint64_t candidates_examined = 0;
    std::chrono::nanoseconds elapsed{0};
    SolveMethod method = SolveMethod::backtracking;

    bool found() const noexcept { return status == SolveStatus::found; }
    /// Exhaustion certificate: the search was complete.
    bool certified_free() const noexcept { return status == SolveStatus::exhausted; }
};

struct SolveOptions {
    /// 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// 1 selects the serial kernels.
    int threads = 1;
    /// Flow bound over components at every node of find_frm. Never changes
    /// results, only node counts.
    bool hall_pruning = false;
    /// Largest product of class sizes brute_force_frm will enumerate.
    std::uint64_t enumeration_cap = 10'000'000;
    /// Per-component cap on representable class sets in decompose_and_solve.
    std::uint64_t local_state_budget = 1'000'000;
};

/// MRV backtracking over classes; decides whether a full rainbow matching
/// exists.
SolveReport find_frm(const ColoredHypergraph& instance, const SolveOptions& options = {});

/// Branch and bound for the largest rainbow matching.
SolveReport max_rainbow_matching(const ColoredHypergraph& instance, const SolveOptions& options = {});

/// Plain Cartesian-product enumeration, no pruning. Throws
/// std::length_error when the product of class sizes exceeds the cap.
SolveReport brute_force_frm(const ColoredHypergraph& instance, const SolveOptions& options = {});

/// Enumerates every partial choice (each class picks an edge or nothing).
/// Throws std::length_error when the product of (size + 1) exceeds the cap.
SolveReport brute_force_max_rainbow(const ColoredHypergraph& instance, const SolveOptions& options = {});

/// Per-component enumeration of representable class sets followed by a cover
/// search over components. Falls back to find_frm when a component exceeds
/// the local state budget.
SolveReport decompose_and_solve(const ColoredHypergraph& instance, const SolveOptions& options = {});

/// Maximum rainbow matching through the same decomposition.
SolveReport decompose_max_rainbow(const ColoredHypergraph& instance, const SolveOptions& options = {});

namespace detail {

// Serial reference kernels, exposed for tests and benchmarks.
SolveReport find_frm_serial(const ColoredHypergraph& instance, const SolveOptions& options);
SolveReport brute_force_frm_serial(const ColoredHypergraph& instance, const SolveOptions& options);

}  // namespace detail

}  // namespace rainbow
