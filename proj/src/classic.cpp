#include "discut/classic.hpp"

#include "discut/cut_polynomial.hpp"
#include "discut/oracle.hpp"
#include "discut/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>

namespace discut {
namespace {

DiscountSpec classic_spec(std::optional<Terminals> terminals, Objective objective = Objective::Min) {
    DiscountSpec spec;
    spec.objective = objective;
    spec.terminals = terminals;
    return spec;
}

// Residual network over merged parallel edges. Every undirected pair {u,v}
// becomes two arcs u->v and v->u, each with the summed capacity.
class FlowNetwork {
public:
    FlowNetwork(const WeightedMultigraph& g) : head_(g.vertex_count(), -1) {
        std::map<std::pair<VertexId, VertexId>, Cost> merged;
        for (const auto& e : g.edges()) {
            if (e.is_loop() || e.cost == 0) continue;
            auto key = std::minmax(e.u, e.v);
            auto& c = merged[{key.first, key.second}];
            c = checked_add(c, e.cost);
        }
        for (const auto& [key, c] : merged) {
            add_arc(key.first, key.second, c);
            add_arc(key.second, key.first, c);
        }
    }

    Cost max_flow(VertexId s, VertexId t) {
        Cost top = 0;
        for (const auto& a : arcs_) top = std::max(top, a.cap);
        Cost delta = 1;
        while (delta <= top / 2) delta <<= 1;
        Cost flow = 0;
        for (; delta > 0; delta >>= 1) {
            while (bfs(s, t, delta)) {
                iter_.assign(head_.begin(), head_.end());
                while (Cost f = dfs(s, t, std::numeric_limits<Cost>::max(), delta)) flow = checked_add(flow, f);
            }
        }
        return flow;
    }

    SideMask reachable(VertexId s) const {
        SideMask seen(head_.size(), 0);
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap == 0 || seen[arcs_[a].to]) continue;
                seen[arcs_[a].to] = 1;
                stack.push_back(arcs_[a].to);
            }
        }
        return seen;
    }

private:
    struct Arc {
        VertexId to;
        int next;
        Cost cap;
    };

    void add_arc(VertexId u, VertexId v, Cost cap) {
        // arc pairs (2i, 2i+1) are each other's reverse
        arcs_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(arcs_.size() - 1);
    }

    bool bfs(VertexId s, VertexId t, Cost delta) {
        level_.assign(head_.size(), -1);
        std::queue<VertexId> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap < delta || level_[arcs_[a].to] >= 0) continue;
                level_[arcs_[a].to] = level_[v] + 1;
                q.push(arcs_[a].to);
            }
        }
        return level_[t] >= 0;
    }

    Cost dfs(VertexId v, VertexId t, Cost limit, Cost delta) {
        if (v == t) return limit;
        for (int& a = iter_[v]; a >= 0; a = arcs_[a].next) {
            auto& arc = arcs_[a];
            if (arc.cap < delta || level_[arc.to] != level_[v] + 1) continue;
            const Cost got = dfs(arc.to, t, std::min(limit, arc.cap), delta);
            if (got > 0) {
                arc.cap -= got;
                arcs_[a ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace

Cost max_flow_value(const WeightedMultigraph& g, VertexId s, VertexId t) {
    if (s >= g.vertex_count() || t >= g.vertex_count() || s == t) throw InvalidInput("invalid terminals");
    FlowNetwork net(g);
    return net.max_flow(s, t);
}

Cut min_st_cut(const WeightedMultigraph& g, VertexId s, VertexId t) {
    const auto spec = classic_spec(Terminals{s, t});
    spec.validate(g);
    FlowNetwork net(g);
    const Cost flow = net.max_flow(s, t);
    auto side = net.reachable(s);
    Cut cut = cut_from_side(g, side, spec);
    if (cut.raw_cost != flow) throw std::logic_error("max-flow value differs from residual cut value");
    return cut;
}

Cut global_min_cut(const WeightedMultigraph& g) {
    const auto n = g.vertex_count();
    const auto spec = classic_spec(std::nullopt);
    spec.validate(g);
    if (!is_connected(g)) return cut_from_side(g, component_of(g, 0), spec);

    // Stoer-Wagner on the merged adjacency matrix
    std::vector<std::vector<Cost>> w(n, std::vector<Cost>(n, 0));
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        w[e.u][e.v] = checked_add(w[e.u][e.v], e.cost);
        w[e.v][e.u] = w[e.u][e.v];
    }
    std::vector<std::vector<VertexId>> group(n);
    for (VertexId v = 0; v < n; ++v) group[v] = {v};
    std::vector<VertexId> alive(n);
    for (VertexId v = 0; v < n; ++v) alive[v] = v;

    Cost best = std::numeric_limits<Cost>::max();
    std::vector<VertexId> best_side;
    while (alive.size() > 1) {
        std::vector<Cost> key(n, 0);
        std::vector<std::uint8_t> added(n, 0);
        VertexId prev = alive[0], last = alive[0];
        for (std::size_t step = 0; step < alive.size(); ++step) {
            VertexId pick = n;
            for (auto v : alive)
                if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
            added[pick] = 1;
            prev = last;
            last = pick;
            for (auto v : alive)
                if (!added[v]) key[v] += w[pick][v];
        }
        if (key[last] < best) {
            best = key[last];
            best_side = group[last];
        }
        group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
        for (auto v : alive) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    Cut cut = cut_from_side(g, best_side, spec);
    if (cut.raw_cost != best) throw std::logic_error("minimum cut phase value differs from witness");
    return cut;
}

namespace {

struct WeightedArc {
    std::uint32_t a, b;
    Cost w;
};

// One recursive contraction run over supervertices 0..nv-1; `label` maps the
// original vertices to supervertices.
class Contractor {
public:
    Contractor(std::size_t n, Rng& rng, const ContractionVisitor& visit) : n_(n), rng_(rng), visit_(visit) {}

    void run(std::uint32_t nv, std::vector<WeightedArc> arcs, std::vector<std::uint32_t> label) {
        if (stopped_) return;
        if (nv <= 6) {
            leaf(nv, arcs, label);
            return;
        }
        const auto target = static_cast<std::uint32_t>(std::ceil(1.0 + nv / std::numbers::sqrt2));
        for (int branch = 0; branch < 2 && !stopped_; ++branch) {
            auto a = arcs;
            auto l = label;
            const auto left = contract(nv, target, a, l);
            run(left, std::move(a), std::move(l));
        }
    }

private:
    std::uint32_t contract(std::uint32_t nv, std::uint32_t target, std::vector<WeightedArc>& arcs,
                           std::vector<std::uint32_t>& label) {
        while (nv > target) {
            Cost total = 0;
            for (const auto& arc : arcs) total = checked_add(total, arc.w);
            std::uint32_t x, y;
            if (total == 0) {
                x = static_cast<std::uint32_t>(rng_.below(nv));
                y = static_cast<std::uint32_t>(rng_.below(nv - 1));
                if (y >= x) ++y;
            } else {
                Cost r = rng_.below(total);
                std::size_t i = 0;
                while (r >= arcs[i].w) r -= arcs[i++].w;
                x = arcs[i].a;
                y = arcs[i].b;
            }
            if (x > y) std::swap(x, y);
            // merge y into x, then move supervertex nv-1 into slot y
            const auto last = nv - 1;
            auto relabel = [&](std::uint32_t v) { return v == y ? x : (v == last ? y : v); };
            std::size_t keep = 0;
            for (auto arc : arcs) {
                arc.a = relabel(arc.a);
                arc.b = relabel(arc.b);
                if (arc.a != arc.b) arcs[keep++] = arc;
            }
            arcs.resize(keep);
            for (auto& l : label) l = relabel(l);
            --nv;
        }
        return nv;
    }

    void leaf(std::uint32_t nv, const std::vector<WeightedArc>& arcs, const std::vector<std::uint32_t>& label) {
        if (nv < 2) return;
        SideMask side(n_, 0);
        const std::uint32_t limit = 1u << (nv - 1);
        for (std::uint32_t s = 1; s < limit; ++s) {
            Cost weight = 0;
            for (const auto& arc : arcs)
                if (((s >> arc.a) & 1u) != ((s >> arc.b) & 1u)) weight += arc.w;
            for (std::size_t v = 0; v < n_; ++v) side[v] = static_cast<std::uint8_t>((s >> label[v]) & 1u);
            if (!visit_(side, weight)) {
                stopped_ = true;
                return;
            }
        }
    }

    std::size_t n_;
    Rng& rng_;
    const ContractionVisitor& visit_;
    bool stopped_ = false;
};

}  // namespace

void contraction_run(const WeightedMultigraph& g, std::span<const Cost> weight, std::uint64_t seed,
                     const ContractionVisitor& visit) {
    const auto n = g.vertex_count();
    if (weight.size() != g.edge_count()) throw InvalidInput("one weight per edge required");
    if (n < 2) return;
    std::vector<WeightedArc> arcs;
    for (const auto& e : g.edges())
        if (!e.is_loop()) arcs.push_back({e.u, e.v, weight[e.id]});
    std::vector<std::uint32_t> label(n);
    for (std::uint32_t v = 0; v < n; ++v) label[v] = v;
    Rng rng(seed);
    Contractor c(n, rng, visit);
    c.run(static_cast<std::uint32_t>(n), std::move(arcs), std::move(label));
}

Cut contraction_sample(const WeightedMultigraph& g, std::span<const Cost> weight, std::uint64_t seed) {
    const auto spec = classic_spec(std::nullopt);
    spec.validate(g);
    std::optional<SideMask> best;
    Cost best_weight = 0;
    contraction_run(g, weight, seed, [&](const SideMask& side, Cost w) {
        if (!best || w < best_weight) {
            best = side;
            best_weight = w;
        }
        return true;
    });
    return cut_from_side(g, *best, spec);
}

namespace {

Cost max_support_value(const WeightedMultigraph& g, const PlaneEmbedding& emb) {
    PolyOptions options;
    options.backend = PolyBackend::Pfaffian;
    options.primes = PrimePolicy::All;
    return recover_support(g, &emb, options).max();
}

}  // namespace

MaxCutResult max_cut(const WeightedMultigraph& g, const PlaneEmbedding* emb, MaxCutOptions options) {
    const auto n = g.vertex_count();
    MaxCutResult result;
    if (n < 2) return result;
    const auto spec = classic_spec(std::nullopt, Objective::Max);
    if (n <= kOracleMaxVertices && !options.force_polynomial) {
        auto r = oracle_opt(g, spec);
        result.value = r.optimum;
        result.witness = std::move(r.witness);
        result.path = MaxCutPath::Enumeration;
        return result;
    }
    if (!emb || !emb->is_planar() || !is_connected(g))
        throw CapabilityError("max cut beyond enumeration size needs a connected planar embedding");

    result.path = MaxCutPath::CutPolynomial;
    result.value = max_support_value(g, *emb);
    // Greedy edge fixing: an edge joins F when some maximum cut still contains
    // all of F plus that edge, detected through a bonus B per fixed edge.
    const Cost bonus = checked_add(g.total_cost(), 1);
    std::vector<std::uint8_t> fixed(g.edge_count(), 0);
    std::size_t fixed_count = 0;
    auto costs = g.costs();
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        auto trial = costs;
        trial[e.id] = checked_add(trial[e.id], bonus);
        const auto value = max_support_value(g.with_costs(trial), *emb);
        if (value == checked_add(result.value, checked_mul(bonus, fixed_count + 1))) {
            costs = std::move(trial);
            fixed[e.id] = 1;
            ++fixed_count;
        }
    }
    // two-colour: fixed edges switch sides, the rest keep them
    std::vector<int> colour(n, -1);
    std::vector<VertexId> stack{0};
    colour[0] = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            const auto w = e.other(v);
            const int want = fixed[eid] ? 1 - colour[v] : colour[v];
            if (colour[w] < 0) {
                colour[w] = want;
                stack.push_back(w);
            } else if (colour[w] != want) {
                throw std::logic_error("fixed edge set is not a cut");
            }
        }
    }
    SideMask side(n);
    for (VertexId v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(colour[v]);
    result.witness = cut_from_side(g, side, spec);
    if (result.witness.raw_cost != result.value) throw std::logic_error("reconstructed max cut has the wrong value");
    return result;
}

Cut MaxFlowSolver::solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const {
    if (!terminals) throw CapabilityError("max-flow solver needs terminals");
    return min_st_cut(g, terminals->s, terminals->t);
}

Cut StoerWagnerSolver::solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const {
    if (terminals) throw CapabilityError("Stoer-Wagner solves global cuts only");
    return global_min_cut(g);
}

Cut EnumerationSolver::solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const {
    return oracle_opt(g, classic_spec(terminals, objective_)).witness;
}

Cut MaxCutSolver::solve(const WeightedMultigraph& g, std::optional<Terminals> terminals) const {
    if (terminals) throw CapabilityError("max-cut solver handles global cuts only");
    return max_cut(g, emb_, options_).witness;
}

}  // namespace discut
