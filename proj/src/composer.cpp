#include "rainbow/composer.hpp"

#include "conflict_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

DistributionPlan round_robin_plan(std::size_t absorbed_size, const std::vector<std::size_t>& targets)
{
    if (targets.empty() && absorbed_size > 0)
        throw std::invalid_argument("round_robin_plan needs at least one target class");
    DistributionPlan plan;
    plan.strategy = DistributionStrategy::round_robin;
    for (std::size_t i = 0; i < absorbed_size; ++i)
        plan.assignment.push_back(targets[i % targets.size()]);
    return plan;
}

DistributionPlan singleton_plan(std::size_t absorbed_size, std::size_t num_targets)
{
    if (absorbed_size > num_targets)
        throw std::invalid_argument("singleton_plan: more edges than target classes");
    DistributionPlan plan;
    plan.strategy = DistributionStrategy::singleton_per_class;
    plan.assignment.resize(absorbed_size);
    std::iota(plan.assignment.begin(), plan.assignment.end(), std::size_t{0});
    return plan;
}

DistributionPlan pairs_plan(std::size_t absorbed_size, const std::vector<std::vector<std::size_t>>& groups)
{
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    DistributionPlan plan;
    plan.strategy = DistributionStrategy::pairs_per_class;
    plan.assignment.assign(absorbed_size, unset);
    for (std::size_t p = 0; p < groups.size(); ++p) {
        if (groups[p].size() != 2)
            throw std::invalid_argument("pairs_plan: every group must hold two edges");
        for (std::size_t pos : groups[p]) {
            if (pos >= absorbed_size || plan.assignment[pos] != unset)
                throw std::invalid_argument("pairs_plan: bad or repeated position");
            plan.assignment[pos] = p;
        }
    }
    if (std::find(plan.assignment.begin(), plan.assignment.end(), unset) != plan.assignment.end())
        throw std::invalid_argument("pairs_plan: groups do not cover the absorbed class");
    return plan;
}

DistributionPlan matching_parts_plan(const ColoredHypergraph& donor, std::size_t absorbed, std::size_t parts)
{
    const auto& edges = donor.coloring()[absorbed];
    if (parts == 0 || parts > edges.size())
        throw std::invalid_argument("matching_parts_plan: part count must lie in 1..class size");
    const auto adj = detail::conflict_matrix(donor.graph(), edges);
    std::optional<std::vector<std::size_t>> colors;
    for (std::size_t k = 1; k <= parts && !colors; ++k)
        colors = detail::color_graph(adj, k);
    if (!colors)
        throw std::invalid_argument("matching_parts_plan: class cannot be split into that many matchings");

    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
        const std::size_t c = (*colors)[pos];
        if (c >= groups.size())
            groups.resize(c + 1);
        groups[c].push_back(pos);
    }
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    // Halves of a matching are matchings.
    while (groups.size() < parts) {
        auto largest = std::max_element(groups.begin(), groups.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
        const auto half = static_cast<std::ptrdiff_t>(largest->size() / 2);
        std::vector<std::size_t> tail(largest->end() - half, largest->end());
        largest->erase(largest->end() - half, largest->end());
        groups.push_back(std::move(tail));
    }
    std::sort(groups.begin(), groups.end());

    DistributionPlan plan;
    plan.strategy = DistributionStrategy::matching_parts;
    plan.assignment.assign(edges.size(), 0);
    for (std::size_t p = 0; p < groups.size(); ++p)
        for (std::size_t pos : groups[p])
            plan.assignment[pos] = p;
    return plan;
}

namespace {

bool pair_up(const std::vector<std::vector<char>>& adj, std::vector<char>& paired,
             std::vector<std::vector<std::size_t>>& groups)
{
    const std::size_t n = adj.size();
    std::size_t first = 0;
    while (first < n && paired[first])
        ++first;
    if (first == n)
        return true;
    paired[first] = 1;
    for (std::size_t other = first + 1; other < n; ++other) {
        if (paired[other] || adj[first][other])
            continue;
        paired[other] = 1;
        groups.push_back({first, other});
        if (pair_up(adj, paired, groups))
            return true;
        groups.pop_back();
        paired[other] = 0;
    }
    paired[first] = 0;
    return false;
}

}  // namespace

DistributionPlan disjoint_pairs_plan(const ColoredHypergraph& donor, std::size_t absorbed)
{
    const auto& edges = donor.coloring()[absorbed];
    if (edges.size() % 2 != 0)
        throw std::invalid_argument("disjoint_pairs_plan: class has odd size");
    const auto adj = detail::conflict_matrix(donor.graph(), edges);
    std::vector<char> paired(edges.size(), 0);
    std::vector<std::vector<std::size_t>> groups;
    if (!pair_up(adj, paired, groups))
        throw std::invalid_argument("disjoint_pairs_plan: class cannot be split into disjoint pairs");
    return pairs_plan(edges.size(), groups);
}

DistributionPlan explicit_plan(std::vector<std::size_t> assignment)
{
    return DistributionPlan{std::move(assignment), DistributionStrategy::explicit_map};
}

ColoredHypergraph join(const ColoredHypergraph& receiver, const ColoredHypergraph& donor,
                       std::size_t absorbed, const DistributionPlan& plan, JoinLayout layout)
{
    const std::size_t m = receiver.num_classes();
    if (absorbed >= donor.num_classes())
        throw std::invalid_argument("join: absorbed class index out of range");
    const auto& moved = donor.coloring()[absorbed];
    if (plan.assignment.size() != moved.size())
        throw std::invalid_argument("join: plan does not cover the absorbed class");
    for (std::size_t target : plan.assignment)
        if (target >= m)
            throw std::invalid_argument("join: plan names a target class out of range");

    const bool receiver_low = layout == JoinLayout::receiver_first;
    const auto receiver_edges = static_cast<EdgeId>(receiver_low ? 0 : donor.graph().num_edges());
    const auto donor_edges = static_cast<EdgeId>(receiver_low ? receiver.graph().num_edges() : 0);
    const std::vector<MultiHypergraph> graphs = receiver_low
        ? std::vector<MultiHypergraph>{receiver.graph(), donor.graph()}
        : std::vector<MultiHypergraph>{donor.graph(), receiver.graph()};

    std::vector<std::vector<EdgeId>> classes;
    classes.reserve(m + donor.num_classes() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        auto members = receiver.coloring()[i];
        for (auto& e : members)
            e += receiver_edges;
        classes.push_back(std::move(members));
    }
    for (std::size_t pos = 0; pos < moved.size(); ++pos)
        classes[plan.assignment[pos]].push_back(moved[pos] + donor_edges);
    std::vector<std::string> labels;
    const bool keep_labels = !receiver.coloring().labels().empty() && !donor.coloring().labels().empty();
    if (keep_labels)
        labels = receiver.coloring().labels();
    for (std::size_t c = 0; c < donor.num_classes(); ++c) {
        if (c == absorbed)
            continue;
        auto members = donor.coloring()[c];
        for (auto& e : members)
            e += donor_edges;
        classes.push_back(std::move(members));
        if (keep_labels)
            labels.push_back(donor.coloring().labels()[c]);
    }
    return ColoredHypergraph(disjoint_union(std::span<const MultiHypergraph>(graphs)),
                             EdgeColoring(std::move(classes), std::move(labels)));
}

namespace {

/// Class indices ordered by size, lowest index first among equals.
std::vector<std::size_t> by_size(const std::vector<std::size_t>& sizes)
{
    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    return order;
}

std::string describe(const std::vector<std::size_t>& subset)
{
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i)
        out += (i ? "," : "") + std::to_string(subset[i]);
    return out + "}";
}

}  // namespace

std::optional<std::vector<std::size_t>> hypothesis_violation(const std::vector<std::size_t>& sizes, std::size_t q)
{
    const auto order = by_size(sizes);
    std::size_t sum = 0;
    for (std::size_t t = 1; t <= order.size(); ++t) {
        sum += sizes[order[t - 1]];
        if (sum < q * (t - 1) + 1) {
            std::vector<std::size_t> subset(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
            std::sort(subset.begin(), subset.end());
            return subset;
        }
    }
    return std::nullopt;
}

bool hypothesis_check(const std::vector<std::size_t>& sizes, std::size_t q)
{
    return !hypothesis_violation(sizes, q).has_value();
}

bool hypothesis_check_exhaustive(const std::vector<std::size_t>& sizes, std::size_t q)
{
    const std::size_t m = sizes.size();
    if (m > 20)
        throw std::length_error("hypothesis_check_exhaustive: more than 20 classes");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::size_t sum = 0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                sum += sizes[i];
                ++count;
            }
        }
        if (sum < q * (count - 1) + 1)
            return false;
    }
    return true;
}

std::size_t replication_bound(const std::vector<std::size_t>& sizes, std::size_t q)
{
    std::size_t f_j = 0;
    std::size_t j = 0;
    for (std::size_t s : sizes) {
        if (s < q) {
            f_j += s;
            ++j;
        }
    }
    if (j == 0)
        return 1;
    if (f_j < q * (j - 1) + 1)
        throw std::invalid_argument("replication_bound: hypothesis fails on the deficient classes");
    const std::size_t denom = f_j - q * (j - 1);
    std::size_t k = 1;
    for (std::size_t s : sizes)
        if (s < q)
            k += (q - s + denom - 1) / denom;
    return k;
}

namespace {

std::function<void(const ReplicationAudit&)>& replication_observer()
{
    static std::function<void(const ReplicationAudit&)> observer;
    return observer;
}

ReplicationResult audited(ReplicationResult result, const ColoredHypergraph& base, std::size_t q,
                          std::optional<std::size_t> copies)
{
    if (const auto& observer = replication_observer())
        observer({base.coloring().class_sizes(), q, copies, result.copies, result.bound_copies,
                  result.instance.coloring().class_sizes()});
    return result;
}

}  // namespace

void set_replication_observer(std::function<void(const ReplicationAudit&)> observer)
{
    replication_observer() = std::move(observer);
}

ReplicationResult replicate_to_class_size(const ColoredHypergraph& base, std::size_t q,
                                          std::optional<std::size_t> copies)
{
    if (q < 1)
        throw std::invalid_argument("replicate_to_class_size: q must be at least 1");
    const auto sizes = base.coloring().class_sizes();
    const std::size_t m = sizes.size();
    if (m == 0)
        throw std::invalid_argument("replicate_to_class_size: instance has no classes");
    if (copies && *copies < 1)
        throw std::invalid_argument("replicate_to_class_size: copy count must be at least 1");
    if (m == 1) {
        if (sizes[0] < q)
            throw std::invalid_argument("replicate_to_class_size: a single class smaller than q cannot grow");
        if (copies && *copies != 1)
            throw std::invalid_argument("replicate_to_class_size: a single class admits only one copy");
        return audited({base, 1, 1}, base, q, copies);
    }

    if (auto bad = hypothesis_violation(sizes, q))
        throw std::invalid_argument("replicate_to_class_size: hypothesis fails for classes " + describe(*bad));
    if (m <= 20 && !hypothesis_check_exhaustive(sizes, q))
        throw std::logic_error("replicate_to_class_size: prefix and subset hypothesis checks disagree");

    const std::size_t bound = replication_bound(sizes, q);
    const std::size_t target = copies.value_or(bound);

    ColoredHypergraph acc = base;
    std::size_t used = 1;
    while (acc.coloring().min_class_size() < q || used < target) {
        if (copies && used >= *copies)
            throw std::invalid_argument("replicate_to_class_size: " + std::to_string(*copies) +
                                        " copies are not enough to reach q");
        const auto acc_sizes = acc.coloring().class_sizes();
        const std::size_t absorbed = by_size(acc_sizes).front();

        std::vector<std::size_t> current = sizes;
        std::vector<std::size_t> assignment;
        std::size_t cursor = 0;
        for (std::size_t pos = 0; pos < acc_sizes[absorbed]; ++pos) {
            std::size_t target_class = cursor % m;
            for (std::size_t step = 0; step < m; ++step) {
                const std::size_t i = (cursor + step) % m;
                if (current[i] < q) {
                    target_class = i;
                    break;
                }
            }
            assignment.push_back(target_class);
            ++current[target_class];
            cursor = target_class + 1;
        }
        DistributionPlan plan = explicit_plan(std::move(assignment));
        plan.strategy = DistributionStrategy::round_robin;
        acc = join(base, acc, absorbed, plan, JoinLayout::donor_first);
        ++used;
    }
    if (!copies && used > bound)
        throw std::logic_error("replicate_to_class_size: schedule exceeded the copy bound");
    if (acc.num_classes() != used * (m - 1) + 1 || acc.coloring().min_class_size() < q)
        throw std::logic_error("replicate_to_class_size: class arithmetic broken");
    return audited({std::move(acc), used, bound}, base, q, copies);
}

ColoredHypergraph blow_up_net(const Net& net, const std::vector<std::size_t>& a)
{
    if (a.size() != net.parallel_classes.size())
        throw std::invalid_argument("blow_up_net: need one multiplicity per parallel class");
    if (std::find(a.begin(), a.end(), std::size_t{0}) != a.end())
        throw std::invalid_argument("blow_up_net: multiplicities must be positive");
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::vector<EdgeId>> classes(a.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (EdgeId e : net.parallel_classes[i]) {
            for (std::size_t copy = 0; copy < a[i]; ++copy) {
                classes[i].push_back(static_cast<EdgeId>(edges.size()));
                edges.push_back(net.hypergraph.edge(e).vertices);
            }
        }
        labels.push_back("F" + std::to_string(i + 1));
    }
    return ColoredHypergraph(MultiHypergraph(net.hypergraph.num_vertices(), std::move(edges)),
                             EdgeColoring(std::move(classes), std::move(labels)));
}

ColoredHypergraph g_construction(const Net& net, const std::vector<std::size_t>& a)
{
    const std::size_t s = net.parallel_classes.size();
    if (s < 2)
        throw std::invalid_argument("g_construction: the net needs at least two parallel classes");
    const ColoredHypergraph one = blow_up_net(net, a);
    const std::vector<ColoredHypergraph> copies(s - 1, one);
    const ColoredHypergraph all = disjoint_union(std::span<const ColoredHypergraph>(copies));
    std::vector<std::vector<EdgeId>> classes(s);
    for (std::size_t k = 0; k < s - 1; ++k)
        for (std::size_t i = 0; i < s; ++i) {
            const auto& members = all.coloring()[k * s + i];
            classes[i].insert(classes[i].end(), members.begin(), members.end());
        }
    return ColoredHypergraph(all.graph(), EdgeColoring(std::move(classes), one.coloring().labels()));
}

}  // namespace rainbow
