#include "discut/oracle.hpp"

#include <algorithm>
#include <bit>

namespace discut {

bool SupportSet::contains(Cost c) const { return std::binary_search(costs.begin(), costs.end(), c); }

namespace {

// Multiset of cut edges keyed by their rank in cost order; supports the sum of
// the j smallest members in O(log m).
class RankedCosts {
public:
    explicit RankedCosts(std::vector<Cost> cost_of_rank)
        : cost_(std::move(cost_of_rank)), count_(cost_.size() + 1, 0), sum_(cost_.size() + 1, 0) {
        while ((std::size_t{1} << log_) <= cost_.size()) ++log_;
    }

    void insert(std::size_t rank) { update(rank, 1); }
    void erase(std::size_t rank) { update(rank, -1); }
    std::size_t size() const { return size_; }
    Cost total() const { return total_; }

    Cost sum_smallest(std::size_t j) const {
        std::size_t pos = 0;
        Cost acc = 0;
        for (std::size_t step = std::size_t{1} << log_; step; step >>= 1) {
            const auto next = pos + step;
            if (next < count_.size() && static_cast<std::size_t>(count_[next]) <= j) {
                pos = next;
                j -= static_cast<std::size_t>(count_[pos]);
                acc += sum_[pos];
            }
        }
        return acc;
    }

private:
    void update(std::size_t rank, int delta) {
        const Cost c = cost_[rank];
        size_ = static_cast<std::size_t>(static_cast<long long>(size_) + delta);
        total_ = delta > 0 ? total_ + c : total_ - c;
        for (auto i = rank + 1; i < count_.size(); i += i & (~i + 1)) {
            count_[i] += delta;
            sum_[i] = delta > 0 ? sum_[i] + c : sum_[i] - c;
        }
    }

    std::vector<Cost> cost_;
    std::vector<int> count_;
    std::vector<Cost> sum_;
    std::size_t log_ = 0;
    std::size_t size_ = 0;
    Cost total_ = 0;
};

void check_size(const WeightedMultigraph& g) {
    if (g.vertex_count() > kOracleMaxVertices)
        throw InstanceTooLarge("enumeration limited to " + std::to_string(kOracleMaxVertices) + " vertices");
    (void)g.total_cost();  // overflow guard
}

}  // namespace

OracleResult oracle_opt(const WeightedMultigraph& g, const DiscountSpec& spec) {
    check_size(g);
    spec.validate(g);
    const auto n = g.vertex_count();
    const auto m = g.edge_count();

    std::vector<EdgeId> by_cost(m);
    for (EdgeId e = 0; e < m; ++e) by_cost[e] = e;
    std::sort(by_cost.begin(), by_cost.end(), [&](EdgeId a, EdgeId b) {
        return g.edge(a).cost != g.edge(b).cost ? g.edge(a).cost < g.edge(b).cost : a < b;
    });
    std::vector<std::size_t> rank(m);
    std::vector<Cost> cost_of_rank(m);
    for (std::size_t r = 0; r < m; ++r) {
        rank[by_cost[r]] = r;
        cost_of_rank[r] = g.edge(by_cost[r]).cost;
    }
    RankedCosts cut(cost_of_rank);

    std::vector<VertexId> free_vertices;
    std::uint32_t mask = 0;  // bit v set iff v in A
    if (spec.terminals) {
        mask = 1u << spec.terminals->s;
        for (VertexId v = 0; v < n; ++v)
            if (v != spec.terminals->s && v != spec.terminals->t) free_vertices.push_back(v);
    } else {
        mask = 1u;
        for (VertexId v = 1; v < n; ++v) free_vertices.push_back(v);
    }
    for (const auto& e : g.edges())
        if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) cut.insert(rank[e.id]);

    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    const auto k = spec.k;
    auto value = [&]() -> Cost {
        if (cut.size() <= k) return 0;
        if (spec.mode == Mode::Expensive) return cut.sum_smallest(cut.size() - k);
        return cut.total() - cut.sum_smallest(k);
    };

    bool have = false;
    Cost best = 0;
    std::uint32_t best_mask = 0;
    auto consider = [&]() {
        if (mask == full) return;  // trivial global bipartition
        const Cost v = value();
        const bool better = !have || (spec.objective == Objective::Min ? v < best : v > best) ||
                            (v == best && mask < best_mask);
        if (better) {
            have = true;
            best = v;
            best_mask = mask;
        }
    };

    OracleResult result;
    const std::uint64_t states = std::uint64_t{1} << free_vertices.size();
    consider();
    for (std::uint64_t i = 1; i < states; ++i) {
        const auto v = free_vertices[static_cast<std::size_t>(std::countr_zero(i))];
        mask ^= 1u << v;
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            const bool crossing = ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
            if (crossing)
                cut.insert(rank[eid]);
            else
                cut.erase(rank[eid]);
        }
        consider();
    }
    result.enumerated = states;
    result.optimum = best;
    std::vector<VertexId> side;
    for (VertexId v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) side.push_back(v);
    result.witness = cut_from_side(g, side, spec);
    return result;
}

SupportSet oracle_support(const WeightedMultigraph& g) {
    check_size(g);
    SupportSet out;
    const auto n = g.vertex_count();
    if (n == 0) {
        out.costs = {0};
        return out;
    }
    const Cost total = g.total_cost();
    const bool dense = total <= (Cost{1} << 24);
    std::vector<std::uint8_t> seen(dense ? total + 1 : 0, 0);
    std::vector<Cost> sparse;

    std::uint32_t mask = 1u;
    Cost cost = 0;
    for (const auto& e : g.edges())
        if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) cost += e.cost;
    auto record = [&]() {
        if (dense)
            seen[cost] = 1;
        else
            sparse.push_back(cost);
    };
    record();
    const std::uint64_t states = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < states; ++i) {
        const auto v = static_cast<VertexId>(1 + std::countr_zero(i));
        mask ^= 1u << v;
        for (auto eid : g.incident(v)) {
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            const bool crossing = ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
            cost = crossing ? cost + e.cost : cost - e.cost;
        }
        record();
    }
    if (dense) {
        for (Cost c = 0; c <= total; ++c)
            if (seen[c]) out.costs.push_back(c);
    } else {
        sparse.push_back(0);
        std::sort(sparse.begin(), sparse.end());
        sparse.erase(std::unique(sparse.begin(), sparse.end()), sparse.end());
        out.costs = std::move(sparse);
    }
    return out;
}

}  // namespace discut
