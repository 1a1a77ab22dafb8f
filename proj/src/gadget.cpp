#include "discut/gadget.hpp"

#include <algorithm>
#include <functional>

namespace discut {

std::optional<std::size_t> regular_degree(const WeightedMultigraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    if (std::adjacent_find(degree.begin(), degree.end(), std::not_equal_to<>()) != degree.end()) return std::nullopt;
    return degree.front();
}

bool is_clique(const WeightedMultigraph& g, std::span<const VertexId> vertices) {
    const auto n = g.vertex_count();
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const auto& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= n) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !adj[vertices[i] * n + vertices[j]]) return false;
    }
    return true;
}

std::optional<std::vector<VertexId>> find_clique(const WeightedMultigraph& g, std::size_t k) {
    const auto n = g.vertex_count();
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const auto& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    std::vector<VertexId> chosen;
    std::function<bool(VertexId)> grow = [&](VertexId from) {
        if (chosen.size() == k) return true;
        for (VertexId v = from; v < n; ++v) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](VertexId u) { return adj[u * n + v] != 0; }))
                continue;
            chosen.push_back(v);
            if (grow(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (grow(0)) return chosen;
    return std::nullopt;
}

GadgetInstance build_gadget(const WeightedMultigraph& source, std::uint64_t k, GadgetVariant variant, bool simple) {
    const auto d = regular_degree(source);
    if (!d) throw InvalidInput("gadget source graph must be regular");
    if (source.has_loops()) throw InvalidInput("gadget source graph must be loop-free");
    if (k < 2) throw InvalidInput("clique size must be at least 2");
    if (*d + 1 <= k) throw InvalidInput("degenerate gadget: p = (d-k+1)k must be positive");

    GadgetInstance inst;
    const auto n = source.vertex_count();
    inst.variant = variant;
    inst.simple = simple;
    inst.source_vertices = n;
    inst.k = k;
    inst.d = *d;
    inst.p = checked_mul(*d - k + 1, k);
    inst.q = checked_add(checked_mul(2, inst.p), 2);
    const auto t_edges = checked_add(checked_add(inst.p, inst.q), 1);
    inst.k_prime = variant == GadgetVariant::NP ? checked_mul(k, inst.q) : k;
    if (k > n) throw InvalidInput("clique size exceeds the vertex count");
    inst.beta = checked_add(inst.p, checked_mul(n - k, t_edges));

    const auto s = static_cast<VertexId>(n), t = static_cast<VertexId>(n + 1);
    inst.terminals = {s, t};
    WeightedMultigraph g(n + 2);
    for (const auto& e : source.edges()) g.add_edge(e.u, e.v, 1);
    for (VertexId v = 0; v < n; ++v) {
        if (variant == GadgetVariant::NP) {
            for (std::uint64_t i = 0; i < inst.q; ++i) g.add_edge(s, v, 2);
        } else {
            g.add_edge(s, v, inst.q);
        }
        for (std::uint64_t i = 0; i < t_edges; ++i) g.add_edge(t, v, 1);
    }
    inst.multigraph = g;
    inst.graph = simple ? subdivide_to_simple(g) : std::move(g);
    return inst;
}

SideMask canonical_side(const GadgetInstance& inst, std::span<const std::uint8_t> in_x) {
    const auto n = inst.source_vertices;
    SideMask side(n + 2, 0);
    for (std::size_t v = 0; v < n; ++v) side[v] = in_x[v] ? 0 : 1;
    side[inst.terminals.s] = 1;
    return inst.simple ? lift_side_to_subdivision(inst.multigraph, side) : side;
}

Cut planted_cut(const GadgetInstance& inst, const WeightedMultigraph& source, std::span<const VertexId> clique) {
    if (clique.size() != inst.k) throw InvalidInput("planted clique has the wrong size");
    if (!is_clique(source, clique)) throw InvalidInput("planted vertices do not form a clique");
    std::vector<std::uint8_t> in_x(inst.source_vertices, 0);
    for (auto v : clique) in_x[v] = 1;
    DiscountSpec spec;
    spec.terminals = inst.terminals;
    spec.mode = Mode::Expensive;
    spec.k = inst.k_prime;
    return cut_from_side(inst.graph, canonical_side(inst, in_x), spec);
}

Cost canonical_family_scan(const GadgetInstance& inst) {
    const auto n = inst.source_vertices;
    if (n > 20) throw InstanceTooLarge("canonical scan limited to 20 source vertices");
    const auto& g = inst.graph;
    std::optional<Cost> best;
    std::vector<std::uint8_t> in_x(n);
    std::vector<Cost> costs;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        for (std::size_t v = 0; v < n; ++v) in_x[v] = static_cast<std::uint8_t>((x >> v) & 1u);
        const auto side = canonical_side(inst, in_x);
        costs.clear();
        for (const auto& e : g.edges())
            if (side[e.u] != side[e.v]) costs.push_back(e.cost);
        const auto value = discounted_cost(costs, inst.k_prime, Mode::Expensive);
        if (!best || value < *best) best = value;
    }
    return *best;
}

}  // namespace discut
