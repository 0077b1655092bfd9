// Regenerates the frozen documents under tests/data.
//
//   make_fixtures <output-dir>
//
// The three-cycles fixture is found by a seeded local search over 3-per-class
// colorings of C4 + C4 + C7 that minimises the number of full rainbow
// matchings; the first coloring with none is kept.

#include "rainbow/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

namespace {

using namespace rainbow;
namespace rio = rainbow::io;

MultiHypergraph three_cycles()
{
    std::vector<std::vector<VertexId>> edges;
    VertexId base = 0;
    for (VertexId len : {4u, 4u, 7u}) {
        for (VertexId i = 0; i < len; ++i)
            edges.push_back({base + i, base + (i + 1) % len});
        base += len;
    }
    return MultiHypergraph(base, std::move(edges));
}

/// Full rainbow matchings of a coloring, counted over all 3^5 choices.
std::size_t count_frms(const MultiHypergraph& g, const std::vector<std::size_t>& slot_edge)
{
    std::size_t count = 0;
    std::vector<std::size_t> pick(5, 0);
    for (std::size_t code = 0; code < 243; ++code) {
        std::size_t c = code;
        std::vector<char> used(g.num_vertices(), 0);
        bool ok = true;
        for (std::size_t k = 0; k < 5 && ok; ++k, c /= 3) {
            for (VertexId v : g.edge(static_cast<EdgeId>(slot_edge[3 * k + c % 3])).vertices) {
                if (used[v])
                    ok = false;
                used[v] = 1;
            }
        }
        count += ok;
    }
    return count;
}

ColoredHypergraph three_cycles_fixture()
{
    const MultiHypergraph g = three_cycles();
    std::mt19937 rng(20240601);
    std::vector<std::size_t> slot_edge(15);
    for (int restart = 0; restart < 1000; ++restart) {
        std::iota(slot_edge.begin(), slot_edge.end(), std::size_t{0});
        std::shuffle(slot_edge.begin(), slot_edge.end(), rng);
        std::size_t score = count_frms(g, slot_edge);
        for (int step = 0; step < 2000 && score > 0; ++step) {
            std::uniform_int_distribution<std::size_t> slot(0, 14);
            const std::size_t a = slot(rng);
            const std::size_t b = slot(rng);
            if (a / 3 == b / 3)
                continue;
            std::swap(slot_edge[a], slot_edge[b]);
            const std::size_t next = count_frms(g, slot_edge);
            if (next <= score)
                score = next;
            else
                std::swap(slot_edge[a], slot_edge[b]);
        }
        if (score == 0) {
            std::vector<std::vector<EdgeId>> classes(5);
            for (std::size_t s = 0; s < 15; ++s)
                classes[s / 3].push_back(static_cast<EdgeId>(slot_edge[s]));
            for (auto& cls : classes)
                std::sort(cls.begin(), cls.end());
            std::sort(classes.begin(), classes.end());
            ColoredHypergraph out(g, EdgeColoring(std::move(classes)));
            if (!find_frm(out).certified_free())
                throw std::logic_error("local search and solver disagree");
            return out;
        }
    }
    throw std::runtime_error("no FRM-free coloring found");
}

void write(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

rio::InstanceDocument built(const std::string& family, std::map<std::string, long long> values)
{
    return rio::build_family(family, rio::FamilyParams{std::move(values), std::nullopt});
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    const ColoredHypergraph cycles = three_cycles_fixture();
    ClaimManifest m;
    m.r = 2;
    m.delta = 2;
    m.min_class_size = 3;
    m.n_classes = 5;
    m.proper = is_proper(cycles);
    m.frm_free = true;
    m.bipartite = false;
    m.simple = true;
    m.notes.push_back("C4 + C4 + C7 with a solver-discovered 3-per-class coloring");
    write(dir / "three_cycles.json",
          rio::serialize(rio::make_document(cycles, m, rio::Provenance{"three_cycles_fixture", {{"seed", 20240601}}})));

    write(dir / "three_c4.json", rio::serialize(built("example1", {{"r", 2}, {"delta", 2}})));
    write(dir / "five_grids.json", rio::serialize(built("example1", {{"r", 3}, {"delta", 2}})));
    write(dir / "knn_cayley3.json", rio::serialize(built("knn_cayley", {{"n", 3}})));
    write(dir / "galvin2.json", rio::serialize(built("galvin", {{"delta", 2}})));

    const Net grid = standard_net(3, 2);
    const ColoredHypergraph grid_instance(grid.hypergraph, EdgeColoring(grid.parallel_classes));
    write(dir / "grid3.dot", rio::export_dot(grid_instance));
    return 0;
}
