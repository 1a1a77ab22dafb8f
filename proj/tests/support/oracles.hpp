#pragma once

// Independent reference implementations for tests. Nothing here calls the
// engine under test; they share only the graph container.

#include "discut/graph.hpp"
#include "discut/random.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace discut::testing {

inline constexpr Cost kInf = std::numeric_limits<Cost>::max();

/// Fixpoint of Bellman-Ford on the explicit layered state graph: states
/// (k', parity, v), a paid move (k', p, u) -> (k', 1-p, v) of cost c(uv) and a
/// free move to (k'+1, 1-p, v) of cost 0, both directions of every edge.
/// Layout matches OddWalkTable: ((k' * 2) + p) * n + v.
inline std::vector<Cost> bellman_ford_states(const WeightedMultigraph& g, VertexId source, std::uint64_t k) {
    const std::size_t n = g.vertex_count();
    auto id = [n](std::uint64_t kp, unsigned p, VertexId v) { return (static_cast<std::size_t>(kp) * 2 + p) * n + v; };
    struct Arc {
        std::size_t from, to;
        Cost cost;
    };
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) {
        for (std::uint64_t kp = 0; kp <= k; ++kp) {
            for (unsigned p = 0; p < 2; ++p) {
                for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                    arcs.push_back({id(kp, p, a), id(kp, p ^ 1u, b), e.cost});
                    if (kp < k) arcs.push_back({id(kp, p, a), id(kp + 1, p ^ 1u, b), 0});
                }
            }
        }
    }
    std::vector<Cost> dist((k + 1) * 2 * n, kInf);
    dist[id(0, 0, source)] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : arcs) {
            if (dist[a.from] == kInf) continue;
            const Cost nd = dist[a.from] + a.cost;
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                changed = true;
            }
        }
    }
    return dist;
}

/// k-clique existence by scanning every k-subset bitmask (n <= 20).
inline bool has_clique_brute(const WeightedMultigraph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges())
        if (e.u != e.v) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v)
            if (mask >> v & 1u) ok = (adj[v] | (1u << v) | ~mask) == ~0u;
        if (ok) return true;
    }
    return false;
}

/// Sum after removing the k largest (expensive) or k smallest (cheap) entries.
inline Cost discounted_reference(std::vector<Cost> costs, std::uint64_t k, bool expensive) {
    if (costs.size() <= k) return 0;
    std::sort(costs.begin(), costs.end());
    Cost s = 0;
    if (expensive)
        for (std::size_t i = 0; i + k < costs.size(); ++i) s += costs[i];
    else
        for (std::size_t i = k; i < costs.size(); ++i) s += costs[i];
    return s;
}

/// Connected random multigraph: random spanning tree plus `extra` random
/// edges (parallel edges allowed, loops when the graph allows them).
inline WeightedMultigraph random_connected(std::size_t n, std::size_t extra, Cost max_cost, std::uint64_t seed,
                                           bool loops = false) {
    Rng rng(seed);
    WeightedMultigraph g(n, loops);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v, static_cast<VertexId>(rng.below(v)), rng.between(1, max_cost));
    for (std::size_t i = 0; i < extra; ++i) {
        const auto u = static_cast<VertexId>(rng.below(n));
        auto v = static_cast<VertexId>(rng.below(n));
        if (u == v && !loops) v = static_cast<VertexId>((u + 1) % n);
        g.add_edge(u, v, rng.between(1, max_cost));
    }
    return g;
}

/// Costs in [0, max_cost] (zero allowed) on an arbitrary random multigraph.
inline WeightedMultigraph random_multigraph(std::size_t n, std::size_t m, Cost max_cost, std::uint64_t seed,
                                            bool loops) {
    Rng rng(seed);
    WeightedMultigraph g(n, loops);
    for (std::size_t i = 0; i < m; ++i) {
        const auto u = static_cast<VertexId>(rng.below(n));
        auto v = static_cast<VertexId>(rng.below(n));
        if (u == v && !loops) v = static_cast<VertexId>((u + 1) % n);
        g.add_edge(u, v, rng.below(max_cost + 1));
    }
    return g;
}

}  // namespace discut::testing
