#include "rainbow/designs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

namespace {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct PrimePowerSpec {
    std::uint32_t q;
    std::uint32_t p;
    std::uint32_t degree;
    std::vector<std::uint32_t> low;  // x^degree = -(low[0] + low[1] x + ...)
};

const std::vector<PrimePowerSpec>& prime_power_specs()
{
    static const std::vector<PrimePowerSpec> specs = {
        {4, 2, 2, {1, 1}},         // x^2 + x + 1
        {8, 2, 3, {1, 1, 0}},      // x^3 + x + 1
        {9, 3, 2, {1, 0}},         // x^2 + 1
        {16, 2, 4, {1, 1, 0, 0}},  // x^4 + x + 1
        {25, 5, 2, {3, 2}},        // x^2 + 2x + 3
        {27, 3, 3, {1, 2, 0}},     // x^3 + 2x + 1
    };
    return specs;
}

const PrimePowerSpec* find_spec(std::uint32_t q)
{
    for (const auto& s : prime_power_specs())
        if (s.q == q)
            return &s;
    return nullptr;
}

std::vector<std::uint32_t> digits(std::uint32_t value, std::uint32_t p, std::uint32_t degree)
{
    std::vector<std::uint32_t> out(degree);
    for (auto& d : out) {
        d = value % p;
        value /= p;
    }
    return out;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& ds, std::uint32_t p)
{
    std::uint32_t value = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        value = value * p + *it;
    return value;
}

}  // namespace

bool GaloisField::is_supported(std::uint32_t q)
{
    return is_prime(q) || find_spec(q) != nullptr;
}

GaloisField::GaloisField(std::uint32_t q) : q_(q)
{
    if (is_prime(q)) {
        p_ = q;
        degree_ = 1;
        return;
    }
    const PrimePowerSpec* spec = find_spec(q);
    if (spec == nullptr)
        throw std::invalid_argument("unsupported field order " + std::to_string(q));
    p_ = spec->p;
    degree_ = spec->degree;

    add_table_.resize(static_cast<std::size_t>(q) * q);
    mul_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
        const auto da = digits(a, p_, degree_);
        for (std::uint32_t b = 0; b < q; ++b) {
            const auto db = digits(b, p_, degree_);
            std::vector<std::uint32_t> sum(degree_);
            for (std::uint32_t k = 0; k < degree_; ++k)
                sum[k] = (da[k] + db[k]) % p_;
            add_table_[a * q + b] = from_digits(sum, p_);

            std::vector<std::uint32_t> prod(2 * degree_ - 1, 0);
            for (std::uint32_t i = 0; i < degree_; ++i)
                for (std::uint32_t j = 0; j < degree_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (std::size_t top = prod.size() - 1; top >= degree_; --top) {
                const std::uint32_t c = prod[top];
                prod[top] = 0;
                for (std::uint32_t k = 0; k < degree_; ++k) {
                    const std::size_t at = top - degree_ + k;
                    prod[at] = (prod[at] + (p_ - spec->low[k]) % p_ * c) % p_;
                }
            }
            prod.resize(degree_);
            mul_table_[a * q + b] = from_digits(prod, p_);
        }
    }
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const
{
    if (degree_ == 1)
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p_);
    return add_table_[a * q_ + b];
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const
{
    if (degree_ == 1)
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    return mul_table_[a * q_ + b];
}

LatinSquare::LatinSquare(std::vector<std::vector<std::uint32_t>> grid) : grid_(std::move(grid))
{
    const std::size_t n = grid_.size();
    for (const auto& row : grid_)
        if (row.size() != n)
            throw std::invalid_argument("latin square is not square");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> in_row(n, 0);
        std::vector<char> in_col(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const auto a = grid_[i][j];
            const auto b = grid_[j][i];
            if (a >= n || b >= n || in_row[a] || in_col[b])
                throw std::invalid_argument("not a latin square: line " + std::to_string(i) +
                                            " is not a permutation");
            in_row[a] = 1;
            in_col[b] = 1;
        }
    }
}

LatinSquare LatinSquare::transposed() const
{
    const std::size_t n = grid_.size();
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[j][i] = grid_[i][j];
    return LatinSquare(std::move(t));
}

LatinSquare cyclic_latin_square(std::uint32_t n)
{
    if (n == 0)
        throw std::invalid_argument("latin square order must be positive");
    std::vector<std::vector<std::uint32_t>> grid(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            grid[i][j] = (i + j) % n;
    return LatinSquare(std::move(grid));
}

std::vector<LatinSquare> field_mols(std::uint32_t q, std::uint32_t count)
{
    if (!GaloisField::is_supported(q))
        throw std::invalid_argument("unsupported prime power " + std::to_string(q));
    if (count < 1 || count > q - 1)
        throw std::invalid_argument("count must lie in 1.." + std::to_string(q - 1));
    const GaloisField field(q);
    std::vector<LatinSquare> squares;
    squares.reserve(count);
    for (std::uint32_t a = 1; a <= count; ++a) {
        std::vector<std::vector<std::uint32_t>> grid(q, std::vector<std::uint32_t>(q));
        for (std::uint32_t i = 0; i < q; ++i)
            for (std::uint32_t j = 0; j < q; ++j)
                grid[i][j] = field.add(field.mul(a, i), j);
        squares.emplace_back(std::move(grid));
    }
    return squares;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("latin squares of different orders");
    const std::uint32_t n = a.order();
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::size_t key = static_cast<std::size_t>(a.at(i, j)) * n + b.at(i, j);
            if (seen[key])
                return false;
            seen[key] = 1;
        }
    }
    return true;
}

Net net_from_mols(std::uint32_t r, std::span<const LatinSquare> mols)
{
    if (r == 0)
        throw std::invalid_argument("net order must be positive");
    for (std::size_t t = 0; t < mols.size(); ++t) {
        if (mols[t].order() != r)
            throw std::invalid_argument("latin square " + std::to_string(t) + " has the wrong order");
        for (std::size_t u = 0; u < t; ++u)
            if (!are_orthogonal(mols[u], mols[t]))
                throw std::invalid_argument("latin squares " + std::to_string(u) + " and " +
                                            std::to_string(t) + " are not orthogonal");
    }

    Net net;
    net.r = r;
    net.s = static_cast<std::uint32_t>(mols.size() + 2);
    HypergraphBuilder builder;
    builder.add_vertices(static_cast<std::size_t>(r) * r);

    std::vector<EdgeId> rows;
    std::vector<EdgeId> cols;
    for (std::uint32_t i = 0; i < r; ++i) {
        std::vector<VertexId> row;
        for (std::uint32_t j = 0; j < r; ++j)
            row.push_back(grid_vertex(r, i, j));
        rows.push_back(builder.add_edge(std::move(row)));
    }
    for (std::uint32_t j = 0; j < r; ++j) {
        std::vector<VertexId> col;
        for (std::uint32_t i = 0; i < r; ++i)
            col.push_back(grid_vertex(r, i, j));
        cols.push_back(builder.add_edge(std::move(col)));
    }
    net.parallel_classes.push_back(std::move(rows));
    net.parallel_classes.push_back(std::move(cols));

    for (const auto& square : mols) {
        std::vector<std::vector<VertexId>> levels(r);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j)
                levels[square.at(i, j)].push_back(grid_vertex(r, i, j));
        std::vector<EdgeId> cls;
        for (auto& level : levels)
            cls.push_back(builder.add_edge(std::move(level)));
        net.parallel_classes.push_back(std::move(cls));
    }
    net.hypergraph = builder.build();
    net.source_mols.assign(mols.begin(), mols.end());
    return net;
}

Net net_from_classes(std::uint32_t r, const std::vector<std::vector<std::vector<VertexId>>>& classes)
{
    Net net;
    net.r = r;
    net.s = static_cast<std::uint32_t>(classes.size());
    std::vector<std::vector<VertexId>> edges;
    for (const auto& cls : classes) {
        std::vector<EdgeId> ids;
        for (const auto& e : cls) {
            ids.push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back(e);
        }
        net.parallel_classes.push_back(std::move(ids));
    }
    net.hypergraph = MultiHypergraph(static_cast<std::size_t>(r) * r, std::move(edges));
    return net;
}

bool validate_net(const Net& net)
{
    const auto& g = net.hypergraph;
    const std::size_t r = net.r;
    if (g.num_vertices() != r * r || g.num_edges() != r * net.s)
        return false;
    if (net.parallel_classes.size() != net.s || !is_uniform(g, r))
        return false;

    std::vector<int> class_of(g.num_edges(), -1);
    for (std::size_t c = 0; c < net.parallel_classes.size(); ++c) {
        const auto& cls = net.parallel_classes[c];
        if (cls.size() != r)
            return false;
        std::vector<char> covered(g.num_vertices(), 0);
        for (EdgeId e : cls) {
            if (e >= g.num_edges() || class_of[e] != -1)
                return false;
            class_of[e] = static_cast<int>(c);
            for (VertexId v : g.edge(e).vertices) {
                if (covered[v])
                    return false;
                covered[v] = 1;
            }
        }
    }

    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (class_of[i] == class_of[j])
                continue;
            std::vector<VertexId> common;
            std::set_intersection(edges[i].vertices.begin(), edges[i].vertices.end(),
                                  edges[j].vertices.begin(), edges[j].vertices.end(),
                                  std::back_inserter(common));
            if (common.size() != 1)
                return false;
        }
    }
    return true;
}

std::vector<LatinSquare> mols_from_net(const Net& net)
{
    const std::uint32_t r = net.r;
    if (net.parallel_classes.size() < 2)
        throw std::invalid_argument("a net needs at least two parallel classes");
    auto is_line = [&](EdgeId e, bool row, std::uint32_t index) {
        for (std::uint32_t k = 0; k < r; ++k) {
            const VertexId want = row ? grid_vertex(r, index, k) : grid_vertex(r, k, index);
            const auto& vs = net.hypergraph.edge(e).vertices;
            if (!std::binary_search(vs.begin(), vs.end(), want))
                return false;
        }
        return true;
    };
    for (std::uint32_t i = 0; i < r; ++i)
        if (!is_line(net.parallel_classes[0].at(i), true, i) || !is_line(net.parallel_classes[1].at(i), false, i))
            throw std::invalid_argument("net classes 0 and 1 are not the grid rows and columns");

    std::vector<LatinSquare> out;
    for (std::size_t c = 2; c < net.parallel_classes.size(); ++c) {
        std::vector<std::vector<std::uint32_t>> grid(r, std::vector<std::uint32_t>(r));
        const auto& cls = net.parallel_classes[c];
        for (std::uint32_t k = 0; k < cls.size(); ++k)
            for (VertexId v : net.hypergraph.edge(cls[k]).vertices)
                grid[v / r][v % r] = k;
        out.emplace_back(std::move(grid));
    }
    return out;
}

Net standard_net(std::uint32_t r, std::uint32_t s)
{
    if (s < 2)
        throw std::invalid_argument("a net needs s >= 2");
    if (s == 2)
        return net_from_mols(r, {});
    if (s == 3) {
        const LatinSquare square = cyclic_latin_square(r);
        return net_from_mols(r, std::span<const LatinSquare>(&square, 1));
    }
    if (!GaloisField::is_supported(r))
        throw std::invalid_argument("no built-in net of order " + std::to_string(r) + " with " +
                                    std::to_string(s) + " classes: order is not a supported prime power");
    if (s > r + 1)
        throw std::invalid_argument("an (r,s)-net needs s <= r + 1");
    const auto squares = field_mols(r, s - 2);
    return net_from_mols(r, squares);
}

}  // namespace rainbow
