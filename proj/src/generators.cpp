#include "discut/generators.hpp"

#include "discut/random.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace discut {
namespace {

std::pair<std::size_t, std::size_t> grid_shape(std::size_t n) {
    std::size_t rows = 1;
    for (std::size_t r = 1; r * r <= n; ++r)
        if (n % r == 0) rows = r;
    return {rows, n / rows};
}

void check_args(std::size_t n, Cost max_cost) {
    if (n < 2) throw InvalidInput("generators need n >= 2");
    if (max_cost < 1) throw InvalidInput("maximum cost must be at least 1");
}

struct GridBuild {
    WeightedMultigraph graph;
    std::vector<std::pair<double, double>> coords;
};

GridBuild build_grid(std::size_t n, Cost max_cost, Rng& rng, bool diagonals) {
    const auto [rows, cols] = grid_shape(n);
    GridBuild out{WeightedMultigraph(n), {}};
    auto id = [&, cols = cols](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * cols + j); };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.coords.emplace_back(static_cast<double>(j), -static_cast<double>(i));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j) out.graph.add_edge(id(i, j), id(i, j + 1), rng.between(1, max_cost));
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.graph.add_edge(id(i, j), id(i + 1, j), rng.between(1, max_cost));
    if (diagonals) {
        for (std::size_t i = 0; i + 1 < rows; ++i) {
            for (std::size_t j = 0; j + 1 < cols; ++j) {
                if (rng.coin())
                    out.graph.add_edge(id(i, j), id(i + 1, j + 1), rng.between(1, max_cost));
                else
                    out.graph.add_edge(id(i, j + 1), id(i + 1, j), rng.between(1, max_cost));
            }
        }
    }
    return out;
}

bool is_bridge(const WeightedMultigraph& g, EdgeId e, std::span<const EdgeId> removed) {
    std::vector<EdgeId> gone(removed.begin(), removed.end());
    gone.push_back(e);
    return !component_of(g, g.edge(e).u, gone)[g.edge(e).v];
}

}  // namespace

Instance generate_grid(std::size_t n, Cost max_cost, std::uint64_t seed) {
    check_args(n, max_cost);
    Rng rng(seed);
    auto grid = build_grid(n, max_cost, rng, false);
    Instance inst;
    inst.embedding = embedding_from_coordinates(grid.graph, grid.coords);
    inst.graph = std::move(grid.graph);
    inst.terminals = Terminals{0, static_cast<VertexId>(n - 1)};
    const auto [rows, cols] = grid_shape(n);
    inst.comments.push_back("grid " + std::to_string(rows) + "x" + std::to_string(cols) + " seed " +
                            std::to_string(seed));
    return inst;
}

Instance generate_random_planar(std::size_t n, Cost max_cost, std::uint64_t seed, RandomPlanarOptions options) {
    check_args(n, max_cost);
    Rng rng(seed);
    auto grid = build_grid(n, max_cost, rng, options.diagonals);
    WeightedMultigraph g = std::move(grid.graph);
    PlaneEmbedding emb = embedding_from_coordinates(g, grid.coords);

    // a parallel copy sits right after its twin at u and right before it at v
    for (std::size_t i = 0; i < options.parallel_edges && g.edge_count() > 0; ++i) {
        const auto twin = static_cast<EdgeId>(rng.below(g.edge_count()));
        const auto u = g.edge(twin).u, v = g.edge(twin).v;
        auto rotation = emb.rotations();
        const auto id = g.add_edge(u, v, rng.between(1, max_cost));
        auto& ru = rotation[u];
        ru.insert(std::find(ru.begin(), ru.end(), forward_dart(twin)) + 1, forward_dart(id));
        auto& rv = rotation[v];
        rv.insert(std::find(rv.begin(), rv.end(), reverse_dart(forward_dart(twin))), reverse_dart(forward_dart(id)));
        emb = PlaneEmbedding(g, std::move(rotation));
    }

    std::vector<EdgeId> order(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<EdgeId> removed;
    for (auto e : order) {
        if (rng.below(100) >= options.removal_percent) continue;
        if (is_bridge(g, e, removed)) continue;
        removed.push_back(e);
    }
    Instance inst;
    inst.embedding = remove_edges(g, emb, removed, inst.graph);
    inst.terminals = Terminals{0, static_cast<VertexId>(n - 1)};
    inst.comments.push_back("random-planar n " + std::to_string(n) + " seed " + std::to_string(seed));
    return inst;
}

Instance generate_random(std::size_t n, Cost max_cost, std::uint64_t seed, std::uint32_t edge_percent) {
    check_args(n, max_cost);
    Rng rng(seed);
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Instance inst;
    inst.graph = WeightedMultigraph(n);
    std::set<std::pair<VertexId, VertexId>> used;
    for (std::size_t i = 1; i < n; ++i) {
        const auto u = perm[i], v = perm[rng.below(i)];
        inst.graph.add_edge(u, v, rng.between(1, max_cost));
        used.insert(std::minmax(u, v));
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!used.count({u, v}) && rng.below(100) < edge_percent) inst.graph.add_edge(u, v, rng.between(1, max_cost));
    inst.terminals = Terminals{0, static_cast<VertexId>(n - 1)};
    inst.comments.push_back("random n " + std::to_string(n) + " seed " + std::to_string(seed));
    return inst;
}

WeightedMultigraph generate_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d >= n || (n * d) % 2) throw InvalidInput("no simple d-regular graph with these parameters");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<VertexId> stubs;
        for (VertexId v = 0; v < n; ++v)
            for (std::size_t i = 0; i < d; ++i) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::set<std::pair<VertexId, VertexId>> pairs;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            const auto key = std::minmax(stubs[i], stubs[i + 1]);
            ok = key.first != key.second && pairs.insert(key).second;
        }
        if (!ok) continue;
        WeightedMultigraph g(n);
        for (const auto& [u, v] : pairs) g.add_edge(u, v, 1);
        if (is_connected(g)) return g;
    }
    throw InvalidInput("could not sample a connected regular graph");
}

}  // namespace discut
