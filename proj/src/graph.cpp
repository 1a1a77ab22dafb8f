#include "discut/graph.hpp"

#include <algorithm>
#include <numeric>

namespace discut {

Cost checked_add(Cost a, Cost b) {
    Cost r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cost sum overflows 64 bits");
    return r;
}

Cost checked_mul(Cost a, Cost b) {
    Cost r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cost product overflows 64 bits");
    return r;
}

WeightedMultigraph::WeightedMultigraph(std::size_t vertex_count, bool allow_loops)
    : incidence_(vertex_count), allow_loops_(allow_loops) {}

EdgeId WeightedMultigraph::add_edge(VertexId u, VertexId v, Cost cost) {
    if (u >= vertex_count() || v >= vertex_count())
        throw InvalidInput("edge endpoint out of range");
    if (u == v && !allow_loops_) throw InvalidInput("self-loop in a graph that does not allow loops");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, u, v, cost});
    incidence_[u].push_back(id);
    if (v != u) incidence_[v].push_back(id);
    return id;
}

Cost WeightedMultigraph::total_cost() const {
    Cost sum = 0;
    for (const auto& e : edges_) sum = checked_add(sum, e.cost);
    return sum;
}

std::vector<Cost> WeightedMultigraph::costs() const {
    std::vector<Cost> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.cost);
    return out;
}

WeightedMultigraph WeightedMultigraph::with_costs(std::span<const Cost> costs) const {
    if (costs.size() != edges_.size()) throw InvalidInput("cost vector size does not match edge count");
    WeightedMultigraph g = *this;
    for (std::size_t i = 0; i < costs.size(); ++i) g.edges_[i].cost = costs[i];
    return g;
}

bool WeightedMultigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

void DiscountSpec::validate(const WeightedMultigraph& g) const {
    if (terminals) {
        if (terminals->s >= g.vertex_count() || terminals->t >= g.vertex_count())
            throw InvalidInput("terminal out of range");
        if (terminals->s == terminals->t) throw InvalidInput("terminals must be distinct");
    } else if (g.vertex_count() < 2) {
        throw InvalidInput("global cuts need at least two vertices");
    }
}

DiscountSpec parse_variant(std::string_view name) {
    DiscountSpec spec;
    auto take = [&](std::string_view word) {
        if (name.substr(0, word.size()) != word) return false;
        name.remove_prefix(word.size());
        return true;
    };
    if (take("min-"))
        spec.objective = Objective::Min;
    else if (take("max-"))
        spec.objective = Objective::Max;
    else
        throw InvalidInput("variant must start with min- or max-");
    if (take("st-"))
        spec.terminals = Terminals{0, 0};
    else if (!take("global-"))
        throw InvalidInput("variant scope must be st or global");
    if (name == "exp")
        spec.mode = Mode::Expensive;
    else if (name == "cheap")
        spec.mode = Mode::Cheap;
    else
        throw InvalidInput("variant mode must be exp or cheap");
    return spec;
}

std::string variant_name(const DiscountSpec& spec) {
    std::string out = spec.objective == Objective::Min ? "min-" : "max-";
    out += spec.is_st() ? "st-" : "global-";
    out += spec.mode == Mode::Expensive ? "exp" : "cheap";
    return out;
}

SideMask Cut::mask(std::size_t vertex_count) const {
    SideMask m(vertex_count, 0);
    for (auto v : side_a) m.at(v) = 1;
    return m;
}

Cost discounted_cost(std::span<const Cost> costs, std::uint64_t k, Mode mode) {
    if (costs.size() <= k) return 0;
    std::vector<Cost> sorted(costs.begin(), costs.end());
    std::sort(sorted.begin(), sorted.end());
    const auto keep = sorted.size() - k;
    Cost sum = 0;
    if (mode == Mode::Expensive) {
        for (std::size_t i = 0; i < keep; ++i) sum = checked_add(sum, sorted[i]);
    } else {
        for (std::size_t i = k; i < sorted.size(); ++i) sum = checked_add(sum, sorted[i]);
    }
    return sum;
}

std::vector<EdgeId> discount_set(const WeightedMultigraph& g, std::span<const EdgeId> cut_edges,
                                 std::uint64_t k, Mode mode) {
    std::vector<EdgeId> order(cut_edges.begin(), cut_edges.end());
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const Cost ca = g.edge(a).cost, cb = g.edge(b).cost;
        if (ca != cb) return mode == Mode::Expensive ? ca > cb : ca < cb;
        return a < b;
    });
    if (order.size() > k) order.resize(k);
    std::sort(order.begin(), order.end());
    return order;
}

Cut cut_from_side(const WeightedMultigraph& g, const SideMask& side_in, const DiscountSpec& spec) {
    const auto n = g.vertex_count();
    if (side_in.size() != n) throw InvalidInput("side mask size does not match vertex count");
    SideMask side = side_in;
    const auto in_a = std::count_if(side.begin(), side.end(), [](auto x) { return x != 0; });
    if (in_a == 0 || static_cast<std::size_t>(in_a) == n) throw InvalidInput("cut side must be a proper nonempty subset");
    if (spec.terminals) {
        if (!side[spec.terminals->s]) throw InvalidInput("terminal s must lie on side A");
        if (side[spec.terminals->t]) throw InvalidInput("terminal t must lie on side B");
    } else if (!side[0]) {
        for (auto& x : side) x = x ? 0 : 1;
    }

    Cut cut;
    for (VertexId v = 0; v < n; ++v)
        if (side[v]) cut.side_a.push_back(v);
    std::vector<Cost> costs;
    for (const auto& e : g.edges()) {
        if ((side[e.u] != 0) != (side[e.v] != 0)) {
            cut.cut_edges.push_back(e.id);
            costs.push_back(e.cost);
            cut.raw_cost = checked_add(cut.raw_cost, e.cost);
        }
    }
    cut.discount_set = discount_set(g, cut.cut_edges, spec.k, spec.mode);
    Cost discount = 0;
    for (auto e : cut.discount_set) discount += g.edge(e).cost;
    cut.discounted_cost = cut.raw_cost - discount;
    return cut;
}

Cut cut_from_side(const WeightedMultigraph& g, std::span<const VertexId> side_a, const DiscountSpec& spec) {
    SideMask side(g.vertex_count(), 0);
    for (auto v : side_a) side.at(v) = 1;
    return cut_from_side(g, side, spec);
}

WeightedMultigraph subdivide_to_simple(const WeightedMultigraph& g) {
    if (g.has_loops()) throw InvalidInput("cannot subdivide a graph with self-loops");
    const auto n = g.vertex_count();
    WeightedMultigraph out(n + g.edge_count());
    for (const auto& e : g.edges()) {
        const auto w = static_cast<VertexId>(n + e.id);
        out.add_edge(e.u, w, e.cost);
        out.add_edge(w, e.v, e.cost);
    }
    return out;
}

SideMask lift_side_to_subdivision(const WeightedMultigraph& g, const SideMask& side) {
    SideMask out(g.vertex_count() + g.edge_count(), 0);
    std::copy(side.begin(), side.end(), out.begin());
    for (const auto& e : g.edges()) out[g.vertex_count() + e.id] = side.at(e.u);
    return out;
}

std::vector<std::uint32_t> connected_components(const WeightedMultigraph& g) {
    const auto n = g.vertex_count();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(n, unset);
    std::uint32_t next = 0;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (comp[root] != unset) continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto eid : g.incident(v)) {
                const auto w = g.edge(eid).other(v);
                if (comp[w] == unset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::size_t component_count(const WeightedMultigraph& g) {
    const auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const WeightedMultigraph& g) { return component_count(g) <= 1; }

SideMask component_of(const WeightedMultigraph& g, VertexId v, std::span<const EdgeId> removed) {
    std::vector<std::uint8_t> gone(g.edge_count(), 0);
    for (auto e : removed) gone.at(e) = 1;
    SideMask seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{v};
    seen.at(v) = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (auto eid : g.incident(x)) {
            if (gone[eid]) continue;
            const auto y = g.edge(eid).other(x);
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace discut
