#include "rainbow/families.hpp"

#include "conflict_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

void require(bool condition, const std::string& message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

/// Part index of every net vertex for an r-partition of the net, if one is
/// known or found.
std::optional<std::vector<std::size_t>> net_partition(const Net& net)
{
    const std::uint32_t r = net.r;
    const std::size_t n = std::size_t{r} * r;
    if (r == 1)
        return std::vector<std::size_t>(n, 0);

    std::vector<LatinSquare> candidates;
    if (GaloisField::is_supported(r)) {
        auto squares = field_mols(r, r - 1);
        candidates.insert(candidates.end(), squares.begin(), squares.end());
    }
    candidates.push_back(cyclic_latin_square(r));
    if (r % 2 == 1) {
        // (i - j) mod r, a mate of the cyclic square for odd r.
        std::vector<std::vector<std::uint32_t>> grid(r, std::vector<std::uint32_t>(r));
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j)
                grid[i][j] = (i + r - j) % r;
        candidates.emplace_back(std::move(grid));
    }
    for (const auto& square : candidates) {
        PartitionWitness witness;
        witness.parts.resize(r);
        std::vector<std::size_t> part(n);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j) {
                part[grid_vertex(r, i, j)] = square.at(i, j);
                witness.parts[square.at(i, j)].push_back(grid_vertex(r, i, j));
            }
        if (verify_r_partition(net.hypergraph, witness, r))
            return part;
    }
    if (r <= 3) {
        const auto search = find_r_partition(net.hypergraph, r);
        if (search.decision == Decision::yes) {
            std::vector<std::size_t> part(n);
            for (std::size_t p = 0; p < search.witness->parts.size(); ++p)
                for (VertexId v : search.witness->parts[p])
                    part[v] = p;
            return part;
        }
    }
    return std::nullopt;
}

/// Repeats a partition of one block of `block` vertices over consecutive
/// blocks.
PartitionWitness tile_partition(const std::vector<std::size_t>& block_part, std::size_t num_vertices,
                                std::size_t parts)
{
    PartitionWitness witness;
    witness.parts.resize(parts);
    for (std::size_t v = 0; v < num_vertices; ++v)
        witness.parts[block_part[v % block_part.size()]].push_back(static_cast<VertexId>(v));
    return witness;
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

FamilyInstance net_family(const Net& net, const std::vector<std::size_t>& a, std::size_t delta, std::size_t q,
                          std::optional<std::size_t> copies, const std::string& note)
{
    const ColoredHypergraph base = g_construction(net, a);
    ReplicationResult rep = replicate_to_class_size(base, q, copies);

    FamilyInstance out{std::move(rep.instance), {}};
    auto& m = out.manifest;
    m.r = net.r;
    m.delta = delta;
    m.min_class_size = q;
    m.n_classes = out.instance.num_classes();
    m.proper = is_proper(out.instance);
    m.frm_free = true;
    if (auto part = net_partition(net)) {
        m.partition_witness = tile_partition(*part, out.instance.graph().num_vertices(), net.r);
    } else if (net.r <= 3) {
        m.notes.push_back("the net is maximal: no " + std::to_string(net.r) + "-partition exists");
    } else {
        m.notes.push_back("r-partiteness not decided");
    }
    m.notes.push_back(note);
    m.notes.push_back("copies=" + std::to_string(rep.copies) + " bound=" + std::to_string(rep.bound_copies));
    return out;
}

std::string vector_text(const std::vector<std::size_t>& a)
{
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

/// Joins one fresh gadget onto each class of `base`, last class first, so the
/// gadgets end up in class order. `plan_for` builds the plan for a class.
template <typename PlanFor>
ColoredHypergraph absorb_into_gadgets(const ColoredHypergraph& base, const ColoredHypergraph& gadget, PlanFor plan_for)
{
    ColoredHypergraph acc = base;
    for (std::size_t done = 0; done < base.num_classes(); ++done) {
        const std::size_t absorbed = acc.num_classes() - 1;
        acc = join(gadget, acc, absorbed, plan_for(acc, absorbed), JoinLayout::receiver_first);
    }
    return acc;
}

}  // namespace

FamilyInstance example1(std::size_t r, std::size_t delta, std::size_t a1, std::size_t a2)
{
    require(r >= 1, "example1: r must be at least 1");
    require(delta >= 2, "example1: Delta must be at least 2");
    require(a1 >= 1 && a2 >= 1, "example1: a1 and a2 must be positive");
    require(a1 + a2 == delta, "example1: a1 + a2 must equal Delta");
    const Net net = standard_net(static_cast<std::uint32_t>(r), 2);
    return net_family(net, {a1, a2}, delta, r * delta - 1, std::nullopt,
                      "example1 a=" + vector_text({a1, a2}));
}

FamilyInstance example2(const Net& net, std::size_t delta)
{
    const std::size_t s = net.parallel_classes.size();
    require(s >= 2, "example2: the net needs at least two parallel classes");
    require(delta >= s && delta % s == 0, "example2: Delta must be a positive multiple of s");
    const std::vector<std::size_t> a(s, delta / s);
    return net_family(net, a, delta, net.r * delta - 1, std::nullopt, "example2 a=" + vector_text(a));
}

std::optional<std::vector<std::size_t>> example_conditions_violation(std::size_t r, const std::vector<std::size_t>& a,
                                                                     std::size_t delta)
{
    const std::size_t s = a.size();
    if (std::accumulate(a.begin(), a.end(), std::size_t{0}) != delta)
        return std::vector<std::size_t>{};
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
    // The smallest entries give the binding subset of each size.
    std::size_t sum = 0;
    for (std::size_t t = 1; t <= s; ++t) {
        sum += r * (s - 1) * a[order[t - 1]];
        if (sum <= (r * delta - 1) * (t - 1)) {
            std::vector<std::size_t> subset(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
            std::sort(subset.begin(), subset.end());
            return subset;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> example3_multiplicities(std::size_t r, std::size_t s, std::size_t delta,
                                                 Example3Variant variant)
{
    require(r >= 1 && s >= 2, "example3: need r >= 1 and s >= 2");
    require(delta >= 1, "example3: Delta must be positive");
    std::vector<std::size_t> a(s);
    if (variant == Example3Variant::residue_s) {
        const std::size_t l = delta % s;
        require(l >= 1, "example3: Delta = 0 mod s is covered by example2");
        require(delta >= s, "example3: Delta must be at least s");
        // Delta > (s-1)(s-l) - s(s-1-l)/(r l), multiplied through by r l.
        const auto lhs = static_cast<long long>(delta * r * l);
        const auto rhs = static_cast<long long>((s - 1) * (s - l) * r * l) - static_cast<long long>(s * (s - 1 - l));
        require(lhs > rhs, "example3: Delta > (s-1)(s-l) - s(s-1-l)/(r l) fails");
        for (std::size_t i = 0; i < s; ++i)
            a[i] = i < l ? (delta + s - 1) / s : delta / s;
    } else {
        const std::size_t l = (delta - 1) % (s - 1);
        require(delta > (l + 1) * (s - 1), "example3: Delta > (l+1)(s-1) fails");
        const std::size_t base = (delta - 1) / (s - 1);
        for (std::size_t i = 0; i + 1 < s; ++i)
            a[i] = base;
        a[s - 1] = delta - (s - 1) * base;
    }
    return a;
}

FamilyInstance example3(const Net& net, std::size_t delta, Example3Variant variant)
{
    const std::size_t s = net.parallel_classes.size();
    const std::size_t r = net.r;
    const auto a = example3_multiplicities(r, s, delta, variant);
    if (auto bad = example_conditions_violation(r, a, delta)) {
        std::string which = bad->empty() ? "sum of multiplicities differs from Delta"
                                         : "class-size condition fails for I=" + vector_text(*bad);
        throw std::invalid_argument("example3: " + which);
    }
    return net_family(net, a, delta, r * delta - 1, std::nullopt,
                      std::string("example3 ") + (variant == Example3Variant::residue_s ? "residue_s" : "residue_s_minus_1") +
                          " a=" + vector_text(a));
}

FamilyInstance small_n(const Net& net, std::size_t delta, std::size_t n)
{
    const std::size_t s = net.parallel_classes.size();
    const std::size_t r = net.r;
    require(s >= 2, "small_n: the net needs at least two parallel classes");
    require(delta >= s && delta % s == 0, "small_n: Delta must be a positive multiple of s");
    require(n >= s && (n - s) % (s * (s - 1)) == 0, "small_n: n must be congruent to s mod s(s-1)");
    const std::size_t q = (n - 1) * r * delta / n;
    const std::size_t copies = (n - 1) / (s - 1);
    const std::vector<std::size_t> a(s, delta / s);
    FamilyInstance out = net_family(net, a, delta, q, copies, "small_n n=" + std::to_string(n));
    if (out.instance.num_classes() != n)
        throw std::logic_error("small_n: class count differs from n");
    return out;
}

ColoredHypergraph sunflower_base(std::size_t r, std::size_t t, std::size_t delta)
{
    require(t >= 1 && t <= r, "sunflower: need 1 <= t <= r");
    require(delta >= 2, "sunflower: Delta must be at least 2");
    HypergraphBuilder builder;
    std::vector<std::vector<VertexId>> kernels(r);
    std::vector<std::vector<EdgeId>> classes(2);
    for (std::size_t i = 0; i < r; ++i) {
        const VertexId k0 = builder.add_vertices(t);
        for (std::size_t j = 0; j < t; ++j)
            kernels[i].push_back(k0 + static_cast<VertexId>(j));
        for (std::size_t petal = 0; petal + 1 < delta; ++petal) {
            std::vector<VertexId> edge = kernels[i];
            const VertexId p0 = builder.add_vertices(r - t);
            for (std::size_t x = 0; x < r - t; ++x)
                edge.push_back(p0 + static_cast<VertexId>(x));
            classes[0].push_back(builder.add_edge(std::move(edge)));
        }
    }
    for (std::size_t j = 0; j < t; ++j) {
        std::vector<VertexId> edge;
        for (std::size_t i = 0; i < r; ++i)
            edge.push_back(kernels[i][j]);
        classes[1].push_back(builder.add_edge(std::move(edge)));
    }
    return ColoredHypergraph(builder.build(), EdgeColoring(std::move(classes), {"F1", "F2"}));
}

FamilyInstance sunflower_family(std::size_t r, std::size_t t, std::size_t delta)
{
    const ColoredHypergraph base = sunflower_base(r, t, delta);
    const std::size_t q = r * (delta - 1) + t - 1;
    ReplicationResult rep = replicate_to_class_size(base, q);

    // Kernel vertex v_ij sits in part (i + j) mod r; petals fill the other
    // parts in increasing order.
    std::vector<std::size_t> block(base.graph().num_vertices());
    std::size_t v = 0;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<char> used(r, 0);
        for (std::size_t j = 0; j < t; ++j) {
            block[v++] = (i + j) % r;
            used[(i + j) % r] = 1;
        }
        for (std::size_t petal = 0; petal + 1 < delta; ++petal)
            for (std::size_t p = 0; p < r; ++p)
                if (!used[p])
                    block[v++] = p;
    }

    FamilyInstance out{std::move(rep.instance), {}};
    auto& m = out.manifest;
    m.r = r;
    m.delta = delta;
    m.min_class_size = q;
    m.n_classes = out.instance.num_classes();
    m.t_simple = t;
    m.proper = is_proper(out.instance);
    m.frm_free = true;
    m.partition_witness = tile_partition(block, out.instance.graph().num_vertices(), r);
    m.simple = is_simple(out.instance.graph());
    if (r == 2)
        m.bipartite = true;
    m.notes.push_back("copies=" + std::to_string(rep.copies) + " bound=" + std::to_string(rep.bound_copies));
    return out;
}

MultiHypergraph shannon_triangle(std::size_t delta)
{
    require(delta >= 2, "shannon_triangle: Delta must be at least 2");
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < delta / 2; ++i)
        edges.push_back({0, 1});
    for (std::size_t i = 0; i < delta / 2; ++i)
        edges.push_back({1, 2});
    for (std::size_t i = 0; i < (delta + 1) / 2; ++i)
        edges.push_back({0, 2});
    return MultiHypergraph(3, std::move(edges));
}

namespace {

constexpr std::size_t component_edge_cap = 64;

void require_graph(const MultiHypergraph& g)
{
    for (const auto& e : g.edges())
        if (e.vertices.size() != 2)
            throw std::invalid_argument("chromatic_index: the input must be a multigraph");
}

/// Max over odd vertex subsets S of ceil(e(S) / floor(|S|/2)); all subsets
/// for small components, triangles otherwise.
std::size_t odd_subset_bound(const MultiHypergraph& g, const std::vector<EdgeId>& edges)
{
    std::vector<VertexId> vs;
    for (EdgeId e : edges)
        for (VertexId v : g.edge(e).vertices)
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const std::size_t n = vs.size();
    auto local = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (EdgeId e : edges)
        ends.emplace_back(local(g.edge(e).vertices[0]), local(g.edge(e).vertices[1]));

    std::size_t best = 0;
    std::vector<char> in(n, 0);
    auto consider = [&](std::size_t size) {
        std::size_t inside = 0;
        for (auto [a, b] : ends)
            if (in[a] && in[b])
                ++inside;
        const std::size_t half = size / 2;
        best = std::max(best, (inside + half - 1) / half);
    };
    if (n <= 16) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const auto size = static_cast<std::size_t>(std::popcount(mask));
            if (size < 3 || size % 2 == 0)
                continue;
            for (std::size_t v = 0; v < n; ++v)
                in[v] = static_cast<char>(mask >> v & 1u);
            consider(size);
        }
    } else {
        for (auto [a, b] : ends)
            for (std::size_t c = 0; c < n; ++c) {
                if (c == a || c == b)
                    continue;
                std::fill(in.begin(), in.end(), 0);
                in[a] = in[b] = in[c] = 1;
                consider(3);
            }
    }
    return best;
}

std::vector<std::size_t> component_coloring(const MultiHypergraph& g, const std::vector<EdgeId>& edges)
{
    if (edges.size() > component_edge_cap)
        throw std::length_error("chromatic_index: component exceeds the edge cap");
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    std::size_t max_deg = 0;
    for (EdgeId e : edges)
        for (VertexId v : g.edge(e).vertices)
            max_deg = std::max(max_deg, ++deg[v]);
    const std::size_t lower = std::max(max_deg, odd_subset_bound(g, edges));
    const auto adj = detail::conflict_matrix(g, edges);
    const auto greedy = detail::greedy_coloring(adj);
    const std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    for (std::size_t k = lower; k < upper; ++k)
        if (auto colors = detail::color_graph(adj, k))
            return *colors;
    return greedy;
}

}  // namespace

std::vector<std::size_t> optimal_edge_coloring(const MultiHypergraph& g)
{
    require_graph(g);
    std::vector<std::size_t> color(g.num_edges(), 0);
    for (const auto& edges : edge_components(g)) {
        const auto local = component_coloring(g, edges);
        for (std::size_t i = 0; i < edges.size(); ++i)
            color[edges[i]] = local[i];
    }
    return color;
}

std::size_t chromatic_index(const MultiHypergraph& g)
{
    const auto colors = optimal_edge_coloring(g);
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

FamilyInstance prop_chromatic_index(const MultiHypergraph& h)
{
    const std::size_t chi = chromatic_index(h);
    require(chi >= 2, "prop41: chromatic index must be at least 2 (a matching gives no copies)");
    const std::vector<MultiHypergraph> copies(chi - 1, h);
    MultiHypergraph g = disjoint_union(std::span<const MultiHypergraph>(copies));
    const std::size_t m = h.num_edges();
    std::vector<std::vector<EdgeId>> classes(m);
    for (std::size_t k = 0; k < chi - 1; ++k)
        for (std::size_t e = 0; e < m; ++e)
            classes[e].push_back(static_cast<EdgeId>(k * m + e));

    FamilyInstance out{ColoredHypergraph(std::move(g), EdgeColoring(std::move(classes))), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = max_degree(h);
    mf.min_class_size = chi - 1;
    mf.n_classes = m;
    mf.proper = true;
    mf.chromatic_index = chi;
    mf.frm_free = true;
    mf.bipartite = bipartition(h).has_value();
    mf.simple = is_simple(h);
    return out;
}

FamilyInstance knn_cayley(std::size_t n)
{
    require(n >= 1, "knn_cayley: n must be at least 1");
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::vector<EdgeId>> classes(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            classes[(i + j) % n].push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(n + j)});
        }
    FamilyInstance out{ColoredHypergraph(MultiHypergraph(2 * n, std::move(edges)), EdgeColoring(std::move(classes))), {}};
    auto& m = out.manifest;
    m.r = 2;
    m.delta = n;
    m.min_class_size = n;
    m.n_classes = n;
    m.proper = true;
    m.chromatic_index = n;
    m.bipartite = true;
    m.simple = true;
    PartitionWitness sides;
    sides.parts.resize(2);
    for (std::size_t i = 0; i < n; ++i) {
        sides.parts[0].push_back(static_cast<VertexId>(i));
        sides.parts[1].push_back(static_cast<VertexId>(n + i));
    }
    m.partition_witness = sides;
    if (n % 2 == 0) {
        m.frm_free = true;
    } else {
        m.frm_free = std::nullopt;
        m.notes.push_back("odd order: a transversal may exist, freeness not claimed");
    }
    return out;
}

FamilyInstance bgs_family(std::size_t n)
{
    require(n >= 3 && n % 4 == 3, "bgs: n must be at least 3 and congruent to 3 mod 4");
    const std::size_t m = (n + 1) / 2;
    const std::size_t cycle = 2 * m;
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::size_t> color;
    // Side k joins v_k and v_{k+1} (ids k-1 and k mod 2m); its copy c takes
    // color c on odd sides and m-1+c on even sides.
    for (std::size_t k = 1; k <= cycle; ++k) {
        const auto a = static_cast<VertexId>(k - 1);
        const auto b = static_cast<VertexId>(k % cycle);
        for (std::size_t c = 0; c + 1 < m; ++c) {
            edges.push_back({a, b});
            color.push_back(k % 2 == 1 ? c : m - 1 + c);
        }
    }
    for (std::size_t k = 1; k <= m / 2; ++k) {
        edges.push_back({static_cast<VertexId>(4 * k - 4), static_cast<VertexId>(4 * k - 2)});
        edges.push_back({static_cast<VertexId>(4 * k - 3), static_cast<VertexId>(4 * k - 1)});
        color.push_back(2 * m - 2);
        color.push_back(2 * m - 2);
    }
    const MultiHypergraph h(cycle, edges);
    const std::vector<MultiHypergraph> copies(2, h);
    MultiHypergraph g = disjoint_union(std::span<const MultiHypergraph>(copies));
    std::vector<std::vector<EdgeId>> classes(n);
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t e = 0; e < edges.size(); ++e)
            classes[color[e]].push_back(static_cast<EdgeId>(copy * edges.size() + e));

    FamilyInstance out{ColoredHypergraph(std::move(g), EdgeColoring(std::move(classes))), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = n;
    mf.min_class_size = n + 1;
    mf.n_classes = n;
    mf.proper = true;
    mf.chromatic_index = n;
    mf.frm_free = true;
    mf.bipartite = false;
    mf.simple = m == 2;
    return out;
}

FamilyInstance k2m_family(std::size_t m)
{
    require(m >= 2, "k2m: m must be at least 2");
    require(m <= 8, "k2m: m above 8 is beyond desk scale");
    const std::size_t size = std::size_t{1} << m;
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::size_t> color;
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = x + 1; y < size; ++y) {
            edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y)});
            color.push_back((x ^ y) - 1);
        }
    const MultiHypergraph h(size, edges);
    const std::vector<MultiHypergraph> copies(2, h);
    MultiHypergraph g = disjoint_union(std::span<const MultiHypergraph>(copies));
    std::vector<std::vector<EdgeId>> classes(size - 1);
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t e = 0; e < edges.size(); ++e)
            classes[color[e]].push_back(static_cast<EdgeId>(copy * edges.size() + e));

    FamilyInstance out{ColoredHypergraph(std::move(g), EdgeColoring(std::move(classes))), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = size - 1;
    mf.min_class_size = size;
    mf.n_classes = size - 1;
    mf.proper = true;
    mf.chromatic_index = size - 1;
    mf.frm_free = true;
    mf.bipartite = false;
    mf.simple = true;
    return out;
}

FamilyInstance thm15_statement1(const MultiHypergraph& h)
{
    require_graph(h);
    const std::size_t delta = max_degree(h);
    require(delta >= 2, "thm15_1: H must have maximum degree at least 2");
    const std::size_t chi = chromatic_index(h);
    const std::size_t m = h.num_edges();
    FamilyInstance gadget = prop_chromatic_index(h);
    if (m >= 2 * delta) {
        gadget.manifest.notes.push_back("at least 2*Delta edges: the chromatic-index gadget alone");
        return gadget;
    }

    // Each class of the base has 2*Delta - 1 >= m edges and is bipartite with
    // degree at most Delta <= chi' <= m, so m nonempty matchings exist.
    const ColoredHypergraph base = example1(2, delta, 1, delta - 1).instance;
    ColoredHypergraph g = absorb_into_gadgets(base, gadget.instance, [&](const ColoredHypergraph& acc, std::size_t c) {
        return matching_parts_plan(acc, c, m);
    });

    FamilyInstance out{std::move(g), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = delta;
    mf.min_class_size = chi;
    mf.n_classes = 2 * delta * m;
    mf.proper = true;
    mf.chromatic_index = chi;
    mf.frm_free = true;
    mf.bipartite = bipartition(h).has_value();
    mf.simple = is_simple(out.instance.graph());
    mf.notes.push_back("base example1(2," + std::to_string(delta) + ",1," + std::to_string(delta - 1) +
                       ") with one chromatic-index gadget per class");
    return out;
}

FamilyInstance thm15_statement2(std::size_t delta)
{
    require(delta >= 2, "thm15_2: Delta must be at least 2");
    const ColoredHypergraph base = sunflower_family(2, 1, delta).instance;
    const bool even = delta % 2 == 0;
    const FamilyInstance gadget = knn_cayley(even ? delta : delta - 1);
    const std::size_t parts = gadget.instance.num_classes();
    ColoredHypergraph g = absorb_into_gadgets(base, gadget.instance, [&](const ColoredHypergraph& acc, std::size_t c) {
        return even ? matching_parts_plan(acc, c, parts) : disjoint_pairs_plan(acc, c);
    });

    FamilyInstance out{std::move(g), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = delta;
    mf.min_class_size = delta + 1;
    mf.n_classes = (2 * delta - 1) * parts;
    mf.proper = true;
    mf.chromatic_index = delta;
    mf.frm_free = true;
    mf.bipartite = true;
    mf.simple = true;
    mf.notes.push_back(even ? "gadget K_{Delta,Delta}, one matching per class"
                            : "gadget K_{Delta-1,Delta-1}, two disjoint edges per class");
    return out;
}

FamilyInstance thm15_statement3(std::size_t delta)
{
    require(delta >= 3, "thm15_3: Delta must be at least 3");
    FamilyInstance gadget;
    bool pairs = false;
    std::string note;
    if (is_power_of_two(delta + 1)) {
        gadget = k2m_family(static_cast<std::size_t>(std::countr_zero(delta + 1)));
        note = "gadget k2m, one matching per class";
    } else if (is_power_of_two(delta)) {
        gadget = k2m_family(static_cast<std::size_t>(std::countr_zero(delta)));
        pairs = true;
        note = "gadget k2m, two disjoint edges per class";
    } else if (delta % 4 == 3) {
        gadget = bgs_family(delta);
        note = "gadget bgs, one matching per class";
    } else if (delta % 4 == 0) {
        gadget = bgs_family(delta - 1);
        pairs = true;
        note = "gadget bgs, two disjoint edges per class";
    } else {
        throw std::invalid_argument("thm15_3: Delta must be 0 or 3 mod 4, or 2^m - 1 or 2^m");
    }
    const ColoredHypergraph base = sunflower_family(2, 1, delta).instance;
    const std::size_t parts = gadget.instance.num_classes();
    ColoredHypergraph g = absorb_into_gadgets(base, gadget.instance, [&](const ColoredHypergraph& acc, std::size_t c) {
        return pairs ? disjoint_pairs_plan(acc, c) : matching_parts_plan(acc, c, parts);
    });

    FamilyInstance out{std::move(g), {}};
    auto& mf = out.manifest;
    mf.r = 2;
    mf.delta = delta;
    mf.min_class_size = delta + 2;
    mf.n_classes = (2 * delta - 1) * parts;
    mf.proper = true;
    mf.chromatic_index = delta;
    mf.frm_free = true;
    mf.bipartite = false;
    mf.simple = is_simple(out.instance.graph());
    mf.notes.push_back(note);
    return out;
}

}  // namespace rainbow
