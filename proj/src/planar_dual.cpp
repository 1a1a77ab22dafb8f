#include "discut/planar_dual.hpp"

#include "discut/random.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace discut {

std::vector<EdgeId> find_st_path(const WeightedMultigraph& g, VertexId s, VertexId t,
                                 std::optional<std::uint64_t> seed) {
    const auto n = g.vertex_count();
    if (s >= n || t >= n) throw InvalidInput("terminal out of range");
    std::optional<Rng> rng;
    if (seed) rng.emplace(*seed);
    constexpr auto none = static_cast<EdgeId>(-1);
    std::vector<EdgeId> via(n, none);
    std::vector<std::uint8_t> seen(n, 0);
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
        if (rng)
            for (std::size_t i = inc.size(); i > 1; --i) std::swap(inc[i - 1], inc[rng->below(i)]);
        for (auto eid : inc) {
            const auto w = g.edge(eid).other(v);
            if (seen[w]) continue;
            seen[w] = 1;
            via[w] = eid;
            q.push(w);
        }
    }
    if (!seen[t] || s == t) return {};
    std::vector<EdgeId> path;
    for (VertexId v = t; v != s; v = g.edge(via[v]).other(v)) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

GStar build_gstar(const WeightedMultigraph& g, const DualGraph& dual, std::span<const EdgeId> path, VertexId s,
                  VertexId t) {
    if (path.empty()) throw InvalidInput("an s-t path needs at least one edge");
    std::vector<std::uint8_t> on_path(g.edge_count(), 0), visited(g.vertex_count(), 0);
    VertexId at = s;
    visited[s] = 1;
    for (auto e : path) {
        const auto& edge = g.edge(e);
        if (edge.u != at && edge.v != at) throw InvalidInput("path edges are not consecutive");
        at = edge.other(at);
        if (visited[at]) throw InvalidInput("path repeats a vertex");
        visited[at] = 1;
        on_path[e] = 1;
    }
    if (at != t) throw InvalidInput("path does not end at t");

    GStar out;
    const auto faces = dual.graph.vertex_count();
    out.face_count = faces;
    std::size_t splits = 0;
    for (const auto& e : dual.graph.edges()) splits += on_path[e.id] ? 0 : 1;
    out.graph = WeightedMultigraph(faces + splits, true);
    VertexId next = static_cast<VertexId>(faces);
    for (const auto& e : dual.graph.edges()) {
        if (on_path[e.id]) {
            out.graph.add_edge(e.u, e.v, e.cost);
            out.primal.push_back(e.id);
            out.intact.push_back(1);
        } else {
            const auto w = next++;
            out.graph.add_edge(e.u, w, e.cost);
            out.graph.add_edge(w, e.v, 0);
            out.primal.insert(out.primal.end(), {e.id, e.id});
            out.intact.insert(out.intact.end(), {0, 0});
        }
    }
    return out;
}

OddWalkTable::OddWalkTable(const WeightedMultigraph& g, VertexId source, std::uint64_t k)
    : g_(&g), n_(g.vertex_count()), k_(k), source_(source) {
    if (source >= n_) throw InvalidInput("source out of range");
    const std::size_t states = static_cast<std::size_t>(k + 1) * 2 * n_;
    dist_.assign(states, kUnreachable);
    pred_state_.assign(states, static_cast<std::size_t>(-1));
    pred_edge_.assign(states, 0);
    pred_free_.assign(states, 0);

    using Entry = std::tuple<Cost, std::uint64_t, unsigned, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist_[index(0, 0, source)] = 0;
    heap.emplace(0, 0, 0, source);
    while (!heap.empty()) {
        const auto [d, kp, par, v] = heap.top();
        heap.pop();
        const auto here = index(kp, par, v);
        if (d > dist_[here]) continue;  // dominated entry
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            const auto u = e.other(v);
            const unsigned np = par ^ 1u;
            auto relax = [&](std::uint64_t nk, Cost nd, bool free) {
                const auto there = index(nk, np, u);
                if (nd >= dist_[there]) return;
                dist_[there] = nd;
                pred_state_[there] = here;
                pred_edge_[there] = eid;
                pred_free_[there] = free ? 1 : 0;
                heap.emplace(nd, nk, np, u);
            };
            relax(kp, checked_add(d, e.cost), false);
            if (kp < k) relax(kp + 1, d, true);
        }
    }
}

std::pair<Cost, std::uint64_t> OddWalkTable::best_odd(VertexId v) const {
    Cost best = kUnreachable;
    std::uint64_t at = 0;
    for (std::uint64_t kp = 0; kp <= k_; ++kp) {
        if (dist(kp, 1, v) < best) {
            best = dist(kp, 1, v);
            at = kp;
        }
    }
    return {best, at};
}

std::vector<WalkStep> OddWalkTable::walk_to(std::uint64_t kp, unsigned parity, VertexId v) const {
    auto state = index(kp, parity, v);
    if (dist_[state] == kUnreachable) throw InvalidInput("state is unreachable");
    std::vector<WalkStep> steps;
    const auto start = index(0, 0, source_);
    while (state != start) {
        const auto prev = pred_state_[state];
        const auto to = static_cast<VertexId>(state % n_);
        const auto from = static_cast<VertexId>(prev % n_);
        steps.push_back({pred_edge_[state], from, to, pred_free_[state] != 0});
        state = prev;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

OddWalk odd_walk_min_cost(const WeightedMultigraph& g, VertexId source, std::uint64_t k,
                          std::optional<VertexId> target) {
    const OddWalkTable table(g, source, k);
    const auto [cost, kp] = table.best_odd(target.value_or(source));
    OddWalk out;
    out.cost = cost;
    if (cost != kUnreachable) out.steps = table.walk_to(kp, 1, target.value_or(source));
    return out;
}

std::vector<EdgeId> extract_odd_cycle(const WeightedMultigraph& g, std::span<const WalkStep> walk) {
    if (walk.empty()) throw InvalidInput("empty walk");
    if (walk.size() % 2 == 0) throw InvalidInput("walk is even");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (walk[i].to != walk[i + 1].from) throw InvalidInput("walk steps are not consecutive");
    if (walk.front().from != walk.back().to) throw InvalidInput("walk is not closed");

    std::vector<EdgeId> support;
    for (const auto& step : walk) {
        if (g.edge(step.edge).is_loop()) return {step.edge};
        support.push_back(step.edge);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    // BFS two-colouring of the support; the first monochromatic edge closes
    // an odd cycle with the two tree paths to their common ancestor.
    const auto n = g.vertex_count();
    std::vector<std::vector<EdgeId>> adj(n);
    for (auto e : support) {
        adj[g.edge(e).u].push_back(e);
        adj[g.edge(e).v].push_back(e);
    }
    std::vector<int> depth(n, -1);
    std::vector<EdgeId> up(n, 0);
    const auto root = walk.front().from;
    std::queue<VertexId> q;
    q.push(root);
    depth[root] = 0;
    std::vector<std::uint8_t> tree(g.edge_count(), 0);
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (auto e : adj[v]) {
            const auto w = g.edge(e).other(v);
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                up[w] = e;
                tree[e] = 1;
                q.push(w);
            }
        }
    }
    for (auto e : support) {
        if (tree[e]) continue;
        auto x = g.edge(e).u, y = g.edge(e).v;
        if ((depth[x] - depth[y]) % 2 != 0) continue;
        std::vector<EdgeId> left, right;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                left.push_back(up[x]);
                x = g.edge(up[x]).other(x);
            } else {
                right.push_back(up[y]);
                y = g.edge(up[y]).other(y);
            }
        }
        std::vector<EdgeId> cycle(left.rbegin(), left.rend());
        cycle.push_back(e);
        cycle.insert(cycle.end(), right.begin(), right.end());
        return cycle;
    }
    throw std::logic_error("odd walk support is bipartite");
}

PlanarCutResult planar_min_st_cut_k_exp(const WeightedMultigraph& g, const PlaneEmbedding& emb, VertexId s,
                                        VertexId t, std::uint64_t k, const PlanarCutOptions& options) {
    DiscountSpec spec;
    spec.terminals = Terminals{s, t};
    spec.mode = Mode::Expensive;
    spec.k = k;
    spec.validate(g);

    PlanarCutResult out;
    const auto reach = component_of(g, s);
    if (!reach[t]) {
        out.witness = cut_from_side(g, reach, spec);
        return out;
    }
    if (!is_connected(g)) throw CapabilityError("the planar dual engine needs a connected graph");

    const auto dual = build_dual(g, emb);
    out.path = options.path ? *options.path : find_st_path(g, s, t);
    const auto gstar = build_gstar(g, dual, out.path, s, t);
    const auto& h = gstar.graph;
    const std::uint64_t kk = std::min<std::uint64_t>(k, h.edge_count());

    std::vector<VertexId> sources;
    if (options.restrict_sources) {
        for (const auto& e : h.edges()) {
            if (!gstar.intact[e.id]) continue;
            sources.push_back(e.u);
            sources.push_back(e.v);
        }
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    } else {
        for (VertexId v = 0; v < h.vertex_count(); ++v) sources.push_back(v);
    }

    Cost best = kUnreachable;
    VertexId best_source = 0;
    for (auto x : sources) {
        const OddWalkTable table(h, x, kk);
        const auto [cost, kp] = table.best_odd(x);
        ++out.sources_scanned;
        if (cost < best) {
            best = cost;
            best_source = x;
        }
    }
    if (best == kUnreachable) throw std::logic_error("no odd closed walk in the split dual");

    const auto walk = odd_walk_min_cost(h, best_source, kk);
    const auto cycle = extract_odd_cycle(h, walk.steps);
    std::vector<EdgeId> removed;
    for (auto e : cycle) removed.push_back(gstar.primal[e]);
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    const auto side = component_of(g, s, removed);
    if (side[t]) throw std::logic_error("odd dual cycle does not separate s from t");

    out.value = best;
    out.witness = cut_from_side(g, side, spec);
    if (out.witness.discounted_cost != best) throw std::logic_error("recovered cut does not attain the walk cost");
    return out;
}

}  // namespace discut
