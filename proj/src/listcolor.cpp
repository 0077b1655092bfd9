#include "rainbow/listcolor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rainbow {

ListInstance make_list_instance(MultiHypergraph host, std::vector<std::vector<Color>> lists)
{
    if (lists.size() != host.num_edges())
        throw std::invalid_argument("list instance: need one list per edge");
    for (auto& list : lists) {
        std::sort(list.begin(), list.end());
        if (list.empty())
            throw std::invalid_argument("list instance: lists must be nonempty");
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("list instance: repeated color in a list");
    }
    return ListInstance{std::move(host), std::move(lists)};
}

namespace {

std::vector<Color> all_colors(const ListInstance& li)
{
    std::set<Color> colors;
    for (const auto& list : li.lists)
        colors.insert(list.begin(), list.end());
    return {colors.begin(), colors.end()};
}

bool contains(const std::vector<Color>& list, Color c)
{
    return std::binary_search(list.begin(), list.end(), c);
}

/// Host edges whose list holds c, in id order.
std::vector<EdgeId> edges_with(const ListInstance& li, Color c)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < li.lists.size(); ++e)
        if (contains(li.lists[e], c))
            out.push_back(e);
    return out;
}

std::size_t intersection_size(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    std::size_t count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

}  // namespace

CoverInstance list_edge_cover(const ListInstance& li)
{
    CoverInstance out;
    out.colors = all_colors(li);
    HypergraphBuilder builder;
    std::vector<std::vector<EdgeId>> classes(li.host.num_edges());
    for (Color c : out.colors) {
        const auto edges = edges_with(li, c);
        std::vector<VertexId> vs;
        for (EdgeId e : edges)
            for (VertexId v : li.host.edge(e).vertices)
                vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        const VertexId first = builder.add_vertices(vs.size());
        for (VertexId v : vs)
            out.vertex_origin.emplace_back(c, v);
        for (EdgeId e : edges) {
            std::vector<VertexId> mapped;
            for (VertexId v : li.host.edge(e).vertices)
                mapped.push_back(first + static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()));
            classes[e].push_back(builder.add_edge(std::move(mapped)));
            out.edge_origin.emplace_back(e, c);
        }
    }
    out.cover = ColoredHypergraph(builder.build(), EdgeColoring(std::move(classes)));
    return out;
}

CoverConditionReport check_cover_conditions(const ColoredHypergraph& instance)
{
    CoverConditionReport report;
    const auto& g = instance.graph();
    const auto class_of = instance.coloring().class_of_edges(g.num_edges());
    const auto comps = edge_components(g);

    // (class i, class j) -> (component, intersection size) observations.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> seen;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        std::map<std::size_t, std::vector<EdgeId>> by_class;
        for (EdgeId e : comps[k])
            by_class[class_of[e]].push_back(e);
        for (const auto& [cls, edges] : by_class) {
            if (edges.size() > 1 && report.a_holds) {
                report.a_holds = false;
                report.a_witness = std::make_pair(k, cls);
            }
        }
        for (auto it = by_class.begin(); it != by_class.end(); ++it)
            for (auto jt = std::next(it); jt != by_class.end(); ++jt)
                for (EdgeId e : it->second)
                    for (EdgeId f : jt->second)
                        seen[{it->first, jt->first}].emplace_back(
                            k, intersection_size(g.edge(e).vertices, g.edge(f).vertices));
    }
    for (const auto& [pair, obs] : seen) {
        for (std::size_t x = 0; x < obs.size() && report.b_holds; ++x)
            for (std::size_t y = x + 1; y < obs.size(); ++y) {
                if (obs[x].first != obs[y].first && obs[x].second != obs[y].second) {
                    report.b_holds = false;
                    report.b_witness = std::vector<std::size_t>{obs[x].first, obs[y].first, pair.first, pair.second};
                    break;
                }
            }
        if (!report.b_holds)
            break;
    }
    return report;
}

std::size_t color_degree(const ListInstance& li)
{
    std::size_t best = 0;
    for (Color c : all_colors(li)) {
        std::vector<std::size_t> deg(li.host.num_vertices(), 0);
        for (EdgeId e : edges_with(li, c))
            for (VertexId v : li.host.edge(e).vertices)
                best = std::max(best, ++deg[v]);
    }
    return best;
}

std::size_t color_codegree(const ListInstance& li)
{
    if (li.host.num_vertices() < 2)
        return 0;
    std::size_t best = 0;
    for (Color c : all_colors(li)) {
        std::map<std::pair<VertexId, VertexId>, std::size_t> tally;
        for (EdgeId e : edges_with(li, c)) {
            const auto& vs = li.host.edge(e).vertices;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    best = std::max(best, ++tally[{vs[i], vs[j]}]);
        }
    }
    return best;
}

bool is_proper_l_coloring(const ListInstance& li, const std::vector<Color>& phi)
{
    if (phi.size() != li.host.num_edges())
        return false;
    std::set<std::pair<VertexId, Color>> used;
    for (EdgeId e = 0; e < phi.size(); ++e) {
        if (!contains(li.lists[e], phi[e]))
            return false;
        for (VertexId v : li.host.edge(e).vertices)
            if (!used.emplace(v, phi[e]).second)
                return false;
    }
    return true;
}

std::optional<std::vector<Color>> l_coloring_exists(const ListInstance& li, const SolveOptions& options)
{
    const CoverInstance cover = list_edge_cover(li);
    const SolveReport report = find_frm(cover.cover, options);
    if (report.status == SolveStatus::inconclusive)
        throw std::runtime_error("l_coloring_exists: search budget exhausted");
    if (!report.found())
        return std::nullopt;
    std::vector<Color> phi(li.host.num_edges());
    for (const auto& [cls, e] : report.witness->picks)
        phi[cls] = cover.edge_origin[e].second;
    if (!is_proper_l_coloring(li, phi))
        throw std::logic_error("l_coloring_exists: pulled-back coloring is not proper");
    return phi;
}

std::optional<std::vector<Color>> direct_l_coloring(const ListInstance& li, std::uint64_t cap)
{
    const std::size_t m = li.host.num_edges();
    std::uint64_t total = 1;
    for (const auto& list : li.lists) {
        if (total > cap / list.size())
            throw std::length_error("direct_l_coloring: too many assignments");
        total *= list.size();
    }
    std::vector<std::size_t> digit(m, 0);
    std::vector<Color> phi(m);
    for (std::size_t e = 0; e < m; ++e)
        phi[e] = li.lists[e][0];
    for (std::uint64_t i = 0; i < total; ++i) {
        if (is_proper_l_coloring(li, phi))
            return phi;
        for (std::size_t e = m; e-- > 0;) {
            if (++digit[e] < li.lists[e].size()) {
                phi[e] = li.lists[e][digit[e]];
                break;
            }
            digit[e] = 0;
            phi[e] = li.lists[e][0];
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Color>> search_l_coloring(const ListInstance& li)
{
    const std::size_t m = li.host.num_edges();
    std::vector<std::set<Color>> taken(li.host.num_vertices());
    std::vector<Color> phi(m);
    auto extend = [&](auto& self, std::size_t e) -> bool {
        if (e == m)
            return true;
        const auto& verts = li.host.edge(static_cast<EdgeId>(e)).vertices;
        for (Color c : li.lists[e]) {
            if (std::any_of(verts.begin(), verts.end(), [&](VertexId v) { return taken[v].count(c) > 0; }))
                continue;
            for (VertexId v : verts)
                taken[v].insert(c);
            phi[e] = c;
            if (self(self, e + 1))
                return true;
            for (VertexId v : verts)
                taken[v].erase(c);
        }
        return false;
    };
    if (extend(extend, 0))
        return phi;
    return std::nullopt;
}

GalvinInstance galvin_g0(std::size_t delta)
{
    if (delta < 2)
        throw std::invalid_argument("galvin: Delta must be at least 2");
    const auto d = static_cast<VertexId>(delta);
    auto x = [](std::size_t i) { return static_cast<VertexId>(i); };
    auto y = [&](std::size_t j) { return static_cast<VertexId>(delta + j); };
    const VertexId z = 2 * d;

    // Host edge ids equal their labels.
    std::vector<std::vector<VertexId>> host_edges(delta * delta + 1);
    host_edges[0] = {x(0), y(0)};
    host_edges[1] = {x(0), z};
    for (std::size_t i = 0; i < delta; ++i)
        for (std::size_t j = 0; j < delta; ++j)
            if (i != 0 || j != 0)
                host_edges[1 + j + i * delta] = {x(i), y(j)};

    GalvinInstance out;
    HypergraphBuilder builder;
    std::vector<std::vector<EdgeId>> classes(delta * delta + 1);
    Color component = 0;
    auto vertex = [&](VertexId host) {
        out.vertex_origin.emplace_back(component, host);
        return builder.add_vertex();
    };
    auto edge = [&](VertexId a, VertexId b, std::size_t cls) {
        classes[cls].push_back(builder.add_edge({a, b}));
        out.edge_origin.emplace_back(static_cast<EdgeId>(cls), component);
    };

    // Broom: v = x_0, w = y_0, u_0 = z, u_i = x_i hanging off w.
    {
        const VertexId v = vertex(x(0));
        const VertexId w = vertex(y(0));
        const VertexId u0 = vertex(z);
        edge(v, w, 0);
        edge(u0, v, 1);
        for (std::size_t i = 1; i < delta; ++i)
            edge(vertex(x(i)), w, 1 + i * delta);
    }
    // S_0: star K^i centered at y_i, edge to x_j in class 1 + i + j*Delta.
    for (std::size_t i = 1; i < delta; ++i) {
        ++component;
        const VertexId center = vertex(y(i));
        for (std::size_t j = 0; j < delta; ++j)
            edge(center, vertex(x(j)), 1 + i + j * delta);
    }
    // S_i: Delta - 1 stars centered at x_{i-1}; edge j of star c goes to leaf
    // (j + c) mod Delta and takes class (i-1)*Delta + 1 + that leaf.
    for (std::size_t i = 1; i <= delta; ++i) {
        for (std::size_t c = 0; c + 1 < delta; ++c) {
            ++component;
            const VertexId center = vertex(x(i - 1));
            std::vector<VertexId> leaves;
            for (std::size_t leaf = 0; leaf < delta; ++leaf)
                leaves.push_back(vertex(i == 1 && leaf == 0 ? z : y(leaf)));
            for (std::size_t j = 0; j < delta; ++j) {
                const std::size_t leaf = (j + c) % delta;
                edge(center, leaves[leaf], (i - 1) * delta + 1 + leaf);
            }
        }
    }

    std::vector<std::vector<Color>> lists(host_edges.size());
    for (const auto& [host_edge, color] : out.edge_origin)
        lists[host_edge].push_back(color);
    out.graph = ColoredHypergraph(builder.build(), EdgeColoring(std::move(classes)));
    out.list = make_list_instance(MultiHypergraph(2 * delta + 1, std::move(host_edges)), std::move(lists));
    return out;
}

GalvinInstance galvin_counterexample(std::size_t delta)
{
    const GalvinInstance g0 = galvin_g0(delta);
    const std::size_t per_copy_colors = delta * delta;  // components of G_0
    const std::size_t labels = delta * delta + 1;
    const std::size_t fresh = 2 * delta - 1;  // host vertices other than x_0, y_0

    auto host_vertex = [&](std::size_t copy, VertexId h) -> VertexId {
        if (h == 0)
            return 0;
        if (h == delta)
            return 1;
        const std::size_t local = h < delta ? h - 1 : h - 2;
        return static_cast<VertexId>(2 + copy * fresh + local);
    };
    auto host_edge = [&](std::size_t copy, EdgeId label) -> EdgeId {
        return label == 0 ? 0 : static_cast<EdgeId>(1 + copy * (labels - 1) + (label - 1));
    };

    std::vector<std::vector<VertexId>> host_edges(1 + delta * (labels - 1));
    std::vector<std::vector<Color>> lists(host_edges.size());
    host_edges[0] = {0, 1};
    for (std::size_t copy = 0; copy < delta; ++copy) {
        const auto offset = static_cast<Color>(copy * per_copy_colors);
        for (EdgeId label = 0; label < labels; ++label) {
            const EdgeId id = host_edge(copy, label);
            if (label != 0) {
                for (VertexId h : g0.list.host.edge(label).vertices)
                    host_edges[id].push_back(host_vertex(copy, h));
            }
            for (Color c : g0.list.lists[label])
                lists[id].push_back(offset + c);
        }
    }

    GalvinInstance out;
    const std::vector<ColoredHypergraph> copies(delta, g0.graph);
    const ColoredHypergraph all = disjoint_union(std::span<const ColoredHypergraph>(copies));
    std::vector<std::vector<EdgeId>> classes(host_edges.size());
    const std::size_t g0_edges = g0.graph.graph().num_edges();
    for (std::size_t copy = 0; copy < delta; ++copy) {
        const auto offset = static_cast<Color>(copy * per_copy_colors);
        for (std::size_t e = 0; e < g0_edges; ++e) {
            const auto [label, color] = g0.edge_origin[e];
            const EdgeId id = host_edge(copy, label);
            classes[id].push_back(static_cast<EdgeId>(copy * g0_edges + e));
            out.edge_origin.emplace_back(id, offset + color);
        }
        for (const auto& [color, h] : g0.vertex_origin)
            out.vertex_origin.emplace_back(offset + color, host_vertex(copy, h));
    }
    out.graph = ColoredHypergraph(all.graph(), EdgeColoring(std::move(classes)));
    out.list = make_list_instance(MultiHypergraph(2 + delta * fresh, std::move(host_edges)), std::move(lists));
    return out;
}

bool cover_correspondence(const GalvinInstance& gi)
{
    const CoverInstance cover = list_edge_cover(gi.list);
    const auto& g = gi.graph.graph();
    const auto& c = cover.cover.graph();
    if (g.num_vertices() != c.num_vertices() || g.num_edges() != c.num_edges())
        return false;
    if (gi.vertex_origin.size() != g.num_vertices() || gi.edge_origin.size() != g.num_edges())
        return false;
    if (gi.graph.num_classes() != cover.cover.num_classes())
        return false;

    std::map<std::pair<Color, VertexId>, VertexId> cover_vertex;
    for (VertexId v = 0; v < cover.vertex_origin.size(); ++v)
        cover_vertex.emplace(cover.vertex_origin[v], v);
    std::map<std::pair<EdgeId, Color>, EdgeId> cover_edge;
    for (EdgeId e = 0; e < cover.edge_origin.size(); ++e)
        cover_edge.emplace(cover.edge_origin[e], e);

    std::vector<VertexId> vmap(g.num_vertices());
    std::set<VertexId> image;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto it = cover_vertex.find(gi.vertex_origin[v]);
        if (it == cover_vertex.end() || !image.insert(it->second).second)
            return false;
        vmap[v] = it->second;
    }
    const auto g_class = gi.graph.coloring().class_of_edges(g.num_edges());
    const auto c_class = cover.cover.coloring().class_of_edges(c.num_edges());
    std::set<EdgeId> edge_image;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto it = cover_edge.find(gi.edge_origin[e]);
        if (it == cover_edge.end() || !edge_image.insert(it->second).second)
            return false;
        std::vector<VertexId> mapped;
        for (VertexId v : g.edge(e).vertices)
            mapped.push_back(vmap[v]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != c.edge(it->second).vertices)
            return false;
        if (g_class[e] != c_class[it->second])
            return false;
    }
    return true;
}

}  // namespace rainbow
