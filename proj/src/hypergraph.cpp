#include "rainbow/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;  // root is always the least member
    }

private:
    std::vector<std::size_t> parent_;
};

std::size_t intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

MultiHypergraph::MultiHypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges)
    : num_vertices_(num_vertices)
{
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& vs = edges[i];
        if (vs.empty())
            throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
        if (vs.back() >= num_vertices)
            throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex out of range");
        edges_.push_back(Edge{static_cast<EdgeId>(i), std::move(vs)});
    }
}

std::optional<std::size_t> MultiHypergraph::uniformity() const
{
    if (edges_.empty())
        return std::nullopt;
    const std::size_t r = edges_.front().vertices.size();
    for (const auto& e : edges_)
        if (e.vertices.size() != r)
            return std::nullopt;
    return r;
}

std::vector<std::size_t> MultiHypergraph::degrees() const
{
    std::vector<std::size_t> deg(num_vertices_, 0);
    for (const auto& e : edges_)
        for (VertexId v : e.vertices)
            ++deg[v];
    return deg;
}

VertexId HypergraphBuilder::add_vertices(std::size_t count)
{
    const auto first = static_cast<VertexId>(num_vertices_);
    num_vertices_ += count;
    return first;
}

EdgeId HypergraphBuilder::add_edge(std::vector<VertexId> vertices)
{
    edges_.push_back(std::move(vertices));
    return static_cast<EdgeId>(edges_.size() - 1);
}

EdgeColoring::EdgeColoring(std::vector<std::vector<EdgeId>> classes, std::vector<std::string> labels)
    : classes_(std::move(classes)), labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != classes_.size())
        throw std::invalid_argument("label count does not match class count");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto& c = classes_[i];
        if (c.empty())
            throw std::invalid_argument("color class " + std::to_string(i) + " is empty");
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw std::invalid_argument("color class " + std::to_string(i) + " repeats an edge");
    }
}

std::vector<std::size_t> EdgeColoring::class_sizes() const
{
    std::vector<std::size_t> sizes;
    sizes.reserve(classes_.size());
    for (const auto& c : classes_)
        sizes.push_back(c.size());
    return sizes;
}

std::size_t EdgeColoring::min_class_size() const
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        best = i == 0 ? classes_[i].size() : std::min(best, classes_[i].size());
    return best;
}

std::vector<std::size_t> EdgeColoring::class_of_edges(std::size_t num_edges) const
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(num_edges, unset);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (EdgeId e : classes_[i]) {
            if (e >= num_edges)
                throw std::invalid_argument("color class " + std::to_string(i) + " names missing edge " +
                                            std::to_string(e));
            if (owner[e] != unset)
                throw std::invalid_argument("edge " + std::to_string(e) + " lies in two color classes");
            owner[e] = i;
        }
    }
    for (std::size_t e = 0; e < num_edges; ++e)
        if (owner[e] == unset)
            throw std::invalid_argument("edge " + std::to_string(e) + " has no color class");
    return owner;
}

bool is_partition(const EdgeColoring& coloring, std::size_t num_edges)
{
    std::vector<EdgeId> all;
    for (const auto& c : coloring.classes())
        all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    if (all.size() != num_edges)
        return false;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i)
            return false;
    return true;
}

ColoredHypergraph::ColoredHypergraph(MultiHypergraph graph, EdgeColoring coloring)
    : graph_(std::move(graph)), coloring_(std::move(coloring))
{
    (void)coloring_.class_of_edges(graph_.num_edges());
}

std::size_t max_degree(const MultiHypergraph& g)
{
    const auto deg = g.degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t max_codegree(const MultiHypergraph& g)
{
    if (g.num_vertices() < 2)
        throw std::invalid_argument("codegree needs at least two vertices");
    std::map<std::pair<VertexId, VertexId>, std::size_t> tally;
    std::size_t best = 0;
    for (const auto& e : g.edges())
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
                best = std::max(best, ++tally[{e.vertices[i], e.vertices[j]}]);
    return best;
}

bool is_uniform(const MultiHypergraph& g, std::size_t r)
{
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [r](const Edge& e) { return e.vertices.size() == r; });
}

bool is_proper(const MultiHypergraph& g, const EdgeColoring& coloring)
{
    std::vector<std::size_t> seen(g.num_vertices(), static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < coloring.num_classes(); ++c) {
        for (EdgeId e : coloring[c]) {
            for (VertexId v : g.edge(e).vertices) {
                if (seen[v] == c)
                    return false;
                seen[v] = c;
            }
        }
    }
    return true;
}

bool is_proper(const ColoredHypergraph& instance)
{
    return is_proper(instance.graph(), instance.coloring());
}

bool is_t_simple(const MultiHypergraph& g, std::size_t t)
{
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (intersection_size(edges[i].vertices, edges[j].vertices) > t)
                return false;
    return true;
}

bool is_simple(const MultiHypergraph& g)
{
    std::vector<std::vector<VertexId>> lists;
    lists.reserve(g.num_edges());
    for (const auto& e : g.edges())
        lists.push_back(e.vertices);
    std::sort(lists.begin(), lists.end());
    return std::adjacent_find(lists.begin(), lists.end()) == lists.end();
}

bool verify_r_partition(const MultiHypergraph& g, const PartitionWitness& witness, std::size_t r)
{
    if (!is_uniform(g, r))
        throw std::invalid_argument("hypergraph is not " + std::to_string(r) + "-uniform");
    if (witness.parts.size() != r)
        return false;
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> part_of(g.num_vertices(), unset);
    for (std::size_t p = 0; p < witness.parts.size(); ++p) {
        for (VertexId v : witness.parts[p]) {
            if (v >= g.num_vertices() || part_of[v] != unset)
                return false;
            part_of[v] = p;
        }
    }
    if (std::find(part_of.begin(), part_of.end(), unset) != part_of.end())
        return false;
    for (const auto& e : g.edges()) {
        std::vector<std::size_t> hit;
        for (VertexId v : e.vertices)
            hit.push_back(part_of[v]);
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end())
            return false;
    }
    return true;
}

PartitionSearch find_r_partition(const MultiHypergraph& g, std::size_t r)
{
    if (!is_uniform(g, r))
        throw std::invalid_argument("hypergraph is not " + std::to_string(r) + "-uniform");
    if (r > 3 || r == 0)
        return {};

    // An r-partition is a proper r-coloring of the 2-section.
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& e : g.edges())
        for (VertexId u : e.vertices)
            for (VertexId v : e.vertices)
                if (u != v)
                    adj[u].push_back(v);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> color(n, none);
    // Vertex i may only open color (max used so far + 1): removes part symmetry.
    auto search = [&](auto&& self, std::size_t v, std::size_t used) -> bool {
        if (v == n)
            return true;
        const std::size_t limit = std::min(r, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            bool ok = true;
            for (VertexId u : adj[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1)))
                return true;
            color[v] = none;
        }
        return false;
    };

    PartitionSearch result;
    if (!search(search, 0, 0)) {
        result.decision = Decision::no;
        return result;
    }
    PartitionWitness w;
    w.parts.resize(r);
    for (std::size_t v = 0; v < n; ++v)
        w.parts[color[v]].push_back(static_cast<VertexId>(v));
    result.decision = Decision::yes;
    result.witness = std::move(w);
    return result;
}

std::optional<PartitionWitness> bipartition(const MultiHypergraph& g)
{
    if (!is_uniform(g, 2))
        throw std::invalid_argument("bipartition needs a 2-uniform multigraph");
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.vertices[0]].push_back(e.vertices[1]);
        adj[e.vertices[1]].push_back(e.vertices[0]);
    }
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<VertexId> queue;
        queue.push(static_cast<VertexId>(s));
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (VertexId v : adj[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    PartitionWitness w;
    w.parts.resize(2);
    for (std::size_t v = 0; v < n; ++v)
        w.parts[static_cast<std::size_t>(side[v])].push_back(static_cast<VertexId>(v));
    return w;
}

MultiHypergraph disjoint_union(std::span<const MultiHypergraph> parts)
{
    std::size_t offset = 0;
    std::vector<std::vector<VertexId>> edges;
    for (const auto& g : parts) {
        for (const auto& e : g.edges()) {
            auto vs = e.vertices;
            for (auto& v : vs)
                v += static_cast<VertexId>(offset);
            edges.push_back(std::move(vs));
        }
        offset += g.num_vertices();
    }
    return MultiHypergraph(offset, std::move(edges));
}

ColoredHypergraph disjoint_union(std::span<const ColoredHypergraph> parts)
{
    std::vector<MultiHypergraph> graphs;
    graphs.reserve(parts.size());
    for (const auto& p : parts)
        graphs.push_back(p.graph());

    std::vector<std::vector<EdgeId>> classes;
    std::vector<std::string> labels;
    bool any_labels = false;
    std::size_t edge_offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& coloring = parts[k].coloring();
        any_labels = any_labels || !coloring.labels().empty();
        for (std::size_t c = 0; c < coloring.num_classes(); ++c) {
            auto members = coloring[c];
            for (auto& e : members)
                e += static_cast<EdgeId>(edge_offset);
            classes.push_back(std::move(members));
            const std::string local = coloring.labels().empty() ? std::to_string(c) : coloring.labels()[c];
            labels.push_back(std::to_string(k) + "/" + local);
        }
        edge_offset += parts[k].graph().num_edges();
    }
    if (!any_labels)
        labels.clear();
    return ColoredHypergraph(disjoint_union(std::span<const MultiHypergraph>(graphs)),
                             EdgeColoring(std::move(classes), std::move(labels)));
}

std::vector<std::vector<VertexId>> components(const MultiHypergraph& g)
{
    DisjointSets sets(g.num_vertices());
    for (const auto& e : g.edges())
        for (std::size_t i = 1; i < e.vertices.size(); ++i)
            sets.unite(e.vertices[0], e.vertices[i]);
    std::vector<std::vector<VertexId>> out;
    std::vector<std::size_t> slot(g.num_vertices(), static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const std::size_t root = sets.find(v);
        if (slot[root] == static_cast<std::size_t>(-1)) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::vector<std::vector<EdgeId>> edge_components(const MultiHypergraph& g)
{
    const auto comps = components(g);
    std::vector<std::size_t> comp_of(g.num_vertices());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
            comp_of[v] = c;
    std::vector<std::vector<EdgeId>> by_comp(comps.size());
    for (const auto& e : g.edges())
        by_comp[comp_of[e.vertices.front()]].push_back(e.id);
    std::vector<std::vector<EdgeId>> out;
    for (auto& c : by_comp)
        if (!c.empty())
            out.push_back(std::move(c));
    return out;
}

bool validate_rainbow_matching(const ColoredHypergraph& instance, const RainbowMatching& matching, bool full)
{
    const auto& coloring = instance.coloring();
    if (full && matching.picks.size() != coloring.num_classes())
        return false;
    std::vector<char> used(instance.graph().num_vertices(), 0);
    for (const auto& [cls, e] : matching.picks) {
        if (cls >= coloring.num_classes())
            return false;
        const auto& members = coloring[cls];
        if (!std::binary_search(members.begin(), members.end(), e))
            return false;
        for (VertexId v : instance.graph().edge(e).vertices) {
            if (used[v])
                return false;
            used[v] = 1;
        }
    }
    return true;
}

}  // namespace rainbow
