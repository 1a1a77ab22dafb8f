#include "discut/bicriteria.hpp"

#include "discut/classic.hpp"
#include "discut/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_set>

namespace discut {
namespace {

BicriteriaPath resolve_path(std::size_t n, BicriteriaPath requested) {
    if (requested == BicriteriaPath::Exact && n > kBicriteriaExactLimit)
        throw InstanceTooLarge("exact bicriteria path limited to " + std::to_string(kBicriteriaExactLimit) +
                               " vertices");
    if (requested == BicriteriaPath::Auto)
        return n <= kBicriteriaExactLimit ? BicriteriaPath::Exact : BicriteriaPath::Randomized;
    return requested;
}

// Keeps the first cut seen for every Pareto-minimal (w1, w2) pair.
class Frontier {
public:
    void offer(Cost w1, Cost w2, const SideMask& side) {
        auto it = best_.find(w2);
        if (it != best_.end() && it->second.w1 <= w1) return;
        best_[w2] = {side, w1, w2};
    }

    std::vector<BicriteriaCandidate> take() {
        std::vector<BicriteriaCandidate> out;
        for (auto& [w2, cand] : best_) {
            if (!out.empty() && out.back().w1 <= cand.w1) continue;
            out.push_back(std::move(cand));
        }
        std::reverse(out.begin(), out.end());  // increasing w1, decreasing w2
        return out;
    }

private:
    std::map<Cost, BicriteriaCandidate> best_;
};

void exact_candidates(const WeightedMultigraph& g, std::span<const Cost> w1, std::span<const Cost> w2,
                      CandidatePool& pool) {
    const auto n = g.vertex_count();
    Frontier frontier;
    std::uint32_t mask = 1u;
    Cost a = 0, b = 0;
    for (const auto& e : g.edges())
        if (!e.is_loop() && (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u))) a += w1[e.id], b += w2[e.id];
    SideMask side(n, 0);
    auto offer = [&]() {
        for (VertexId v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>((mask >> v) & 1u);
        frontier.offer(a, b, side);
    };
    const std::uint32_t full = (1u << n) - 1;
    offer();
    ++pool.cuts_seen;
    const std::uint64_t states = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < states; ++i) {
        const auto v = static_cast<VertexId>(1 + std::countr_zero(i));
        mask ^= 1u << v;
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) {
                a += w1[eid];
                b += w2[eid];
            } else {
                a -= w1[eid];
                b -= w2[eid];
            }
        }
        if (mask == full) continue;  // A = V is not a cut
        offer();
        ++pool.cuts_seen;
    }
    pool.frontier = frontier.take();
}

void randomized_candidates(const WeightedMultigraph& g, std::span<const Cost> w1, std::span<const Cost> w2,
                           const BicriteriaOptions& options, std::uint64_t stream, CandidatePool& pool) {
    const auto n = g.vertex_count();
    Cost total_w1 = 0;
    for (auto x : w1) total_w1 = checked_add(total_w1, x);
    const auto reps = options.repetitions.value_or(default_repetitions(n));
    const auto grid = lambda_grid(total_w1);

    Frontier frontier;
    std::unordered_set<std::string> seen;
    std::string key;
    std::vector<Cost> scalar(g.edge_count());
    for (std::size_t li = 0; li < grid.size(); ++li) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) scalar[e] = checked_add(w1[e], checked_mul(grid[li], w2[e]));
        for (std::uint64_t run = 0; run < reps; ++run) {
            contraction_run(g, scalar, mix_seed(options.seed, stream, li, run), [&](const SideMask& side, Cost) {
                // canonical orientation: vertex 0 on side A
                const std::uint8_t flip = side[0] ? 0 : 1;
                key.assign(n, '0');
                for (std::size_t v = 0; v < n; ++v) key[v] = static_cast<char>('0' + (side[v] ^ flip));
                if (!seen.insert(key).second) return true;
                Cost a = 0, b = 0;
                for (const auto& e : g.edges())
                    if (side[e.u] != side[e.v]) a += w1[e.id], b += w2[e.id];
                SideMask canon(side);
                for (auto& x : canon) x ^= flip;
                frontier.offer(a, b, canon);
                return true;
            });
        }
    }
    pool.cuts_seen = seen.size();
    pool.frontier = frontier.take();
}

}  // namespace

std::uint64_t default_repetitions(std::size_t n) {
    if (n < 2) return 1;
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(x * x * std::log(x)));
}

std::vector<Cost> lambda_grid(Cost total_w1) {
    std::vector<Cost> grid{0};
    const Cost top = checked_add(total_w1, 1);
    const auto jmax = static_cast<unsigned>(std::bit_width(top - 1));  // ceil(log2(top)) for top >= 1
    for (unsigned j = 0; j <= jmax && j < 63; ++j) grid.push_back(Cost{1} << j);
    grid.push_back(top);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

CandidatePool bicriteria_candidates(const WeightedMultigraph& g, std::span<const Cost> w1,
                                    std::span<const Cost> w2, const BicriteriaOptions& options) {
    if (w1.size() != g.edge_count() || w2.size() != g.edge_count())
        throw InvalidInput("one weight per edge required in both criteria");
    if (g.vertex_count() < 2) throw InvalidInput("global cuts need at least two vertices");
    CandidatePool pool;
    pool.path = resolve_path(g.vertex_count(), options.path);
    if (pool.path == BicriteriaPath::Exact)
        exact_candidates(g, w1, w2, pool);
    else
        randomized_candidates(g, w1, w2, options, 0, pool);
    return pool;
}

BicriteriaResult solve_bicriteria(const BicriteriaInstance& inst, const BicriteriaOptions& options) {
    const auto pool = bicriteria_candidates(inst.graph, inst.w1, inst.w2, options);
    BicriteriaResult out;
    out.path = pool.path;
    for (const auto& c : pool.frontier) {
        if (c.w1 > inst.b1 || c.w2 > inst.b2) continue;
        Cost a = 0, b = 0;
        for (const auto& e : inst.graph.edges())
            if (c.side[e.u] != c.side[e.v]) a += inst.w1[e.id], b += inst.w2[e.id];
        if (a > inst.b1 || b > inst.b2) throw std::logic_error("bicriteria candidate failed re-verification");
        out.side = c.side;
        break;
    }
    return out;
}

GlobalKExpSweep::GlobalKExpSweep(const WeightedMultigraph& g, const BicriteriaOptions& options) : g_(&g) {
    if (g.vertex_count() < 2) throw InvalidInput("global cuts need at least two vertices");
    const auto m = g.edge_count();
    order_.resize(m);
    for (EdgeId e = 0; e < m; ++e) order_[e] = e;
    std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
        return g.edge(a).cost != g.edge(b).cost ? g.edge(a).cost < g.edge(b).cost : a < b;
    });
    path_ = resolve_path(g.vertex_count(), options.path);
    for (std::size_t t = 0; t <= m; ++t) {
        const auto [w1, w2] = weights(t);
        CandidatePool pool;
        pool.path = path_;
        if (path_ == BicriteriaPath::Exact)
            exact_candidates(g, w1, w2, pool);
        else
            randomized_candidates(g, w1, w2, options, t, pool);
        pools_.push_back(std::move(pool));
    }
}

std::pair<std::vector<Cost>, std::vector<Cost>> GlobalKExpSweep::weights(std::size_t t) const {
    const auto m = g_->edge_count();
    std::vector<Cost> w1(m, 0), w2(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) {
        const auto e = order_[pos];
        if (pos < t)
            w1[e] = g_->edge(e).cost;
        else
            w2[e] = 1;
    }
    return {w1, w2};
}

GlobalKExpSweep::Answer GlobalKExpSweep::decide(std::uint64_t k, Cost W) const {
    Answer out;
    DiscountSpec spec;
    spec.mode = Mode::Expensive;
    spec.k = k;
    for (std::size_t t = 0; t < pools_.size(); ++t) {
        for (const auto& c : pools_[t].frontier) {
            if (c.w1 > W || c.w2 > k) continue;
            auto cut = cut_from_side(*g_, c.side, spec);
            if (cut.discounted_cost > W) throw std::logic_error("bicriteria witness exceeds the budget");
            out.yes = true;
            out.witness = std::move(cut);
            out.t = t;
            return out;
        }
    }
    return out;
}

Cost GlobalKExpSweep::value(std::uint64_t k) const {
    std::optional<Cost> best;
    for (const auto& pool : pools_)
        for (const auto& c : pool.frontier)
            if (c.w2 <= k && (!best || c.w1 < *best)) best = c.w1;
    if (!best) throw std::logic_error("bicriteria sweep found no cut");
    return *best;
}

GlobalKExpResult global_min_cut_k_exp(const WeightedMultigraph& g, std::uint64_t k, Cost W,
                                      const BicriteriaOptions& options) {
    const GlobalKExpSweep sweep(g, options);
    const auto answer = sweep.decide(k, W);
    return {answer.yes, answer.witness, sweep.path()};
}

}  // namespace discut
