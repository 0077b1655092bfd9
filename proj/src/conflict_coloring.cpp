#include "conflict_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow::detail {

std::vector<std::vector<char>> conflict_matrix(const MultiHypergraph& g, const std::vector<EdgeId>& edges)
{
    const std::size_t n = edges.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = g.edge(edges[i]).vertices;
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& b = g.edge(edges[j]).vertices;
            std::size_t x = 0;
            std::size_t y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) {
                    adj[i][j] = adj[j][i] = 1;
                    break;
                }
                if (a[x] < b[y])
                    ++x;
                else
                    ++y;
            }
        }
    }
    return adj;
}

std::vector<std::size_t> greedy_coloring(const std::vector<std::vector<char>>& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> taken(n + 1, 0);
        for (std::size_t j = 0; j < i; ++j)
            if (adj[i][j])
                taken[color[j]] = 1;
        std::size_t c = 0;
        while (taken[c])
            ++c;
        color[i] = c;
    }
    return color;
}

namespace {

class Dsatur {
public:
    Dsatur(const std::vector<std::vector<char>>& adj, std::size_t k, std::uint64_t cap)
        : adj_(adj), k_(k), cap_(cap), color_(adj.size(), none), forbidden_(adj.size(), std::vector<int>(k, 0))
    {
    }

    bool run() { return step(0, 0); }
    const std::vector<std::size_t>& colors() const { return color_; }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t saturation(std::size_t v) const
    {
        std::size_t s = 0;
        for (int f : forbidden_[v])
            s += f > 0 ? 1 : 0;
        return s;
    }

    void set(std::size_t v, std::size_t c, int delta)
    {
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (adj_[v][u])
                forbidden_[u][c] += delta;
    }

    bool step(std::size_t colored, std::size_t used)
    {
        if (++nodes_ > cap_)
            throw std::length_error("coloring search exceeded its node cap");
        const std::size_t n = adj_.size();
        if (colored == n)
            return true;
        std::size_t pick = none;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color_[v] != none)
                continue;
            const std::size_t sat = saturation(v);
            std::size_t deg = 0;
            for (std::size_t u = 0; u < n; ++u)
                deg += (adj_[v][u] && color_[u] == none) ? 1 : 0;
            if (pick == none || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat == k_)
            return false;
        // A fresh color is interchangeable with any other fresh color.
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbidden_[pick][c] > 0)
                continue;
            color_[pick] = c;
            set(pick, c, 1);
            if (step(colored + 1, std::max(used, c + 1)))
                return true;
            set(pick, c, -1);
            color_[pick] = none;
        }
        return false;
    }

    const std::vector<std::vector<char>>& adj_;
    std::size_t k_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> color_;
    std::vector<std::vector<int>> forbidden_;
};

}  // namespace

std::optional<std::vector<std::size_t>> color_graph(const std::vector<std::vector<char>>& adj, std::size_t k,
                                                    std::uint64_t node_cap)
{
    if (adj.empty())
        return std::vector<std::size_t>{};
    if (k == 0)
        return std::nullopt;
    Dsatur search(adj, k, node_cap);
    if (!search.run())
        return std::nullopt;
    return search.colors();
}

}  // namespace rainbow::detail
