#pragma once

// The join method: absorb one color class of an instance into the classes of
// another, replicate an instance until every class reaches a target size,
// and blow up nets.

#include "rainbow/designs.hpp"
#include "rainbow/hypergraph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace rainbow {

enum class DistributionStrategy {
    round_robin,
    singleton_per_class,
    pairs_per_class,
    matching_parts,
    explicit_map,
};

/// Target class for every edge of the absorbed class, listed in ascending
/// edge-id order of that class.
struct DistributionPlan {
    std::vector<std::size_t> assignment;
    DistributionStrategy strategy = DistributionStrategy::explicit_map;
};

/// Edge i goes to targets[i mod |targets|].
DistributionPlan round_robin_plan(std::size_t absorbed_size, const std::vector<std::size_t>& targets);

/// Edge i goes to class i. Requires absorbed_size <= num_targets.
DistributionPlan singleton_plan(std::size_t absorbed_size, std::size_t num_targets);

/// groups[p] lists positions (indices into the absorbed class) that all go
/// to class p. Every group must have exactly two positions.
DistributionPlan pairs_plan(std::size_t absorbed_size, const std::vector<std::vector<std::size_t>>& groups);

/// Splits the absorbed class of `donor` into exactly `parts` nonempty
/// matchings and sends matching p to class p. Throws std::invalid_argument
/// when no such split exists (parts above the class size or below the
/// chromatic index of the class).
DistributionPlan matching_parts_plan(const ColoredHypergraph& donor, std::size_t absorbed, std::size_t parts);

/// Pairs up the edges of donor[absorbed] into disjoint pairs (the first
/// unpaired edge with the lowest-position partner that avoids it) and sends
/// pair p to class p. Throws std::invalid_argument when the class has odd
/// size or admits no such pairing.
DistributionPlan disjoint_pairs_plan(const ColoredHypergraph& donor, std::size_t absorbed);

DistributionPlan explicit_plan(std::vector<std::size_t> assignment);

enum class JoinLayout {
    receiver_first,  // receiver vertices and edges take the low ids
    donor_first,
};

/// Disjoint union of receiver and donor with classes E'_1..E'_m (receiver
/// classes plus the distributed edges of donor[absorbed]) followed by the
/// donor's remaining classes in order. Throws std::invalid_argument when the
/// plan does not cover the absorbed class or names an invalid target.
ColoredHypergraph join(const ColoredHypergraph& receiver, const ColoredHypergraph& donor,
                       std::size_t absorbed, const DistributionPlan& plan,
                       JoinLayout layout = JoinLayout::receiver_first);

/// Sum over I of |F_i| >= q(|I| - 1) + 1, checked on the sorted prefixes of
/// the smallest sizes (the binding subsets).
bool hypothesis_check(const std::vector<std::size_t>& sizes, std::size_t q);

/// The same inequality over every nonempty subset. Throws std::length_error
/// for more than 20 classes.
bool hypothesis_check_exhaustive(const std::vector<std::size_t>& sizes, std::size_t q);

/// A violating subset of class indices, if any.
std::optional<std::vector<std::size_t>> hypothesis_violation(const std::vector<std::size_t>& sizes, std::size_t q);

/// 1 + sum over J of ceil((q - |F_i|) / (|F_J| - q(|J| - 1))), where J holds
/// the classes smaller than q; 1 when J is empty. Requires the hypothesis.
std::size_t replication_bound(const std::vector<std::size_t>& sizes, std::size_t q);

struct ReplicationResult {
    ColoredHypergraph instance;
    std::size_t copies = 1;        // realized
    std::size_t bound_copies = 1;  // formula value
};

/// Disjoint copies of `base` recolored so that every class has at least q
/// edges, with copies*(m-1)+1 classes. Each step absorbs the smallest class
/// of the accumulated instance into a fresh copy, spreading its edges
/// round-robin over the copy's classes still below q (over all classes once
/// none are). Steps continue until every class reaches q and at least
/// `copies` (default: the formula bound) copies are used.
///
/// Throws std::invalid_argument for q < 1, a violated hypothesis, a single
/// class smaller than q, or an explicit copy count that is too small.
ReplicationResult replicate_to_class_size(const ColoredHypergraph& base, std::size_t q,
                                          std::optional<std::size_t> copies = std::nullopt);

/// One completed replicate_to_class_size call.
struct ReplicationAudit {
    std::vector<std::size_t> base_sizes;
    std::size_t q = 0;
    std::optional<std::size_t> requested_copies;
    std::size_t copies = 1;
    std::size_t bound_copies = 1;
    std::vector<std::size_t> result_sizes;
};

/// Installs a callback run after every successful replication (an empty
/// function removes it). Not synchronized; install it before building.
void set_replication_observer(std::function<void(const ReplicationAudit&)> observer);

/// Every edge of parallel class i replaced by a[i] parallel edges, edge ids
/// grouped class by class. Classes F'_1..F'_s.
ColoredHypergraph blow_up_net(const Net& net, const std::vector<std::size_t>& a);

/// s - 1 disjoint copies of the blow-up, with class i of every copy merged
/// into one class F'_i.
ColoredHypergraph g_construction(const Net& net, const std::vector<std::size_t>& a);

}  // namespace rainbow
