#include "discut/bicriteria.hpp"

#include "discut/oracle.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace discut;
using namespace discut::testing;

namespace {

Cost oracle_value(const WeightedMultigraph& g, std::uint64_t k) {
    auto spec = parse_variant("min-global-exp");
    spec.k = k;
    return oracle_opt(g, spec).optimum;
}

}  // namespace

TEST_CASE("lambda grid and repetitions") {
    CHECK(lambda_grid(0) == std::vector<Cost>{0, 1});
    CHECK(lambda_grid(5) == std::vector<Cost>{0, 1, 2, 4, 6, 8});
    CHECK(default_repetitions(10) == static_cast<std::uint64_t>(std::ceil(100 * std::log(10.0))));
    CHECK(default_repetitions(2) >= 1);
}

TEST_CASE("exact bicriteria frontier is Pareto-minimal") {
    const auto g = figure_one().graph;
    const auto w1 = g.costs();
    const std::vector<Cost> w2(g.edge_count(), 1);
    BicriteriaOptions options;
    options.path = BicriteriaPath::Exact;
    const auto pool = bicriteria_candidates(g, w1, w2, options);
    CHECK(pool.path == BicriteriaPath::Exact);
    CHECK(pool.cuts_seen == 31);
    for (std::size_t i = 1; i < pool.frontier.size(); ++i) {
        CHECK(pool.frontier[i - 1].w1 < pool.frontier[i].w1);
        CHECK(pool.frontier[i - 1].w2 > pool.frontier[i].w2);
    }
    CHECK(pool.frontier.front().w1 == 6);
}

TEST_CASE("bicriteria decisions") {
    const auto g = figure_one().graph;
    BicriteriaInstance inst{g, g.costs(), std::vector<Cost>(g.edge_count(), 1), 6, 2};
    const auto yes = solve_bicriteria(inst, {BicriteriaPath::Exact, 0, {}});
    REQUIRE(yes.side);
    inst.b1 = 5;
    CHECK_FALSE(solve_bicriteria(inst, {BicriteriaPath::Exact, 0, {}}).side);
    inst.b1 = 7;
    inst.b2 = 3;
    const auto sampled = solve_bicriteria(inst, {BicriteriaPath::Randomized, 3, {}});
    CHECK(sampled.path == BicriteriaPath::Randomized);
    CHECK(sampled.side);
}

TEST_CASE("global k-exp sweep on the example network") {
    const auto g = figure_one().graph;
    const GlobalKExpSweep sweep(g, {});
    CHECK(sweep.path() == BicriteriaPath::Exact);
    CHECK(sweep.thresholds() == 10);
    CHECK(sweep.value(0) == 6);
    CHECK(sweep.value(1) == 2);
    CHECK(sweep.value(2) == 0);
    const auto yes = sweep.decide(1, 2);
    CHECK(yes.yes);
    REQUIRE(yes.witness);
    CHECK(yes.witness->discounted_cost <= 2);
    CHECK_FALSE(sweep.decide(1, 1).yes);
    const auto [w1, w2] = sweep.weights(0);
    CHECK(w1 == std::vector<Cost>(9, 0));
    CHECK(w2 == std::vector<Cost>(9, 1));
}

TEST_CASE("exact path matches the oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_connected(3 + seed % 8, seed % 9, 9, seed * 3 + 11);
        const GlobalKExpSweep sweep(g, {BicriteriaPath::Exact, 0, {}});
        for (std::uint64_t k = 0; k <= 3; ++k) {
            const Cost opt = oracle_value(g, k);
            CHECK(sweep.value(k) == opt);
            if (opt > 0) CHECK_FALSE(sweep.decide(k, opt - 1).yes);
        }
    }
}

TEST_CASE("randomized path never returns a wrong witness") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_connected(5 + seed % 5, seed % 6, 9, seed + 70);
        const GlobalKExpSweep sweep(g, {BicriteriaPath::Randomized, seed, {}});
        CHECK(sweep.path() == BicriteriaPath::Randomized);
        for (std::uint64_t k = 0; k <= 2; ++k) {
            const Cost opt = oracle_value(g, k);
            CHECK(sweep.value(k) >= opt);
            for (Cost W = 0; W <= opt + 2; ++W) {
                const auto a = sweep.decide(k, W);
                if (!a.yes) continue;
                REQUIRE(a.witness);
                auto spec = parse_variant("min-global-exp");
                spec.k = k;
                CHECK(cut_from_side(g, a.witness->side_a, spec).discounted_cost <= W);
            }
        }
    }
}

TEST_CASE("exact path size guard") {
    WeightedMultigraph g(kBicriteriaExactLimit + 1);
    for (VertexId v = 1; v < g.vertex_count(); ++v) g.add_edge(v - 1, v, 1);
    CHECK_THROWS_AS(GlobalKExpSweep(g, {BicriteriaPath::Exact, 0, {}}), InstanceTooLarge);
    const auto r = global_min_cut_k_exp(g, 1, 0, {BicriteriaPath::Auto, 1, 5});
    CHECK(r.path == BicriteriaPath::Randomized);
    CHECK(r.yes);
}
