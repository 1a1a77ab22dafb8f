#include "discut/oracle.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <map>

using namespace discut;
using namespace discut::testing;

namespace {

// optimum for k = 0..4, from an independent enumeration
const std::map<std::string, std::vector<Cost>> kExampleOptima = {
    {"min-st-exp", {6, 2, 0, 0, 0}},        {"min-st-cheap", {6, 3, 0, 0, 0}},
    {"min-global-exp", {6, 2, 0, 0, 0}},    {"min-global-cheap", {6, 3, 0, 0, 0}},
    {"max-st-exp", {20, 15, 11, 8, 5}},     {"max-st-cheap", {20, 19, 18, 15, 12}},
    {"max-global-exp", {20, 15, 11, 8, 5}}, {"max-global-cheap", {20, 19, 18, 15, 12}},
};

DiscountSpec example_spec(const std::string& name, std::uint64_t k) {
    auto spec = parse_variant(name);
    if (spec.is_st()) spec.terminals = Terminals{S, T};
    spec.k = k;
    return spec;
}

}  // namespace

TEST_CASE("example network optima for all eight variants") {
    const auto g = figure_one().graph;
    for (const auto& [name, optima] : kExampleOptima) {
        for (std::uint64_t k = 0; k < optima.size(); ++k) {
            CAPTURE(name);
            CAPTURE(k);
            const auto r = oracle_opt(g, example_spec(name, k));
            CHECK(r.optimum == optima[k]);
            CHECK(r.witness.discounted_cost == r.optimum);
        }
    }
}

TEST_CASE("example witnesses") {
    const auto g = figure_one().graph;
    const auto plain = oracle_opt(g, example_spec("min-st-exp", 0));
    CHECK(plain.witness.cut_edges == std::vector<EdgeId>{SA, SC});
    const auto one_free = oracle_opt(g, example_spec("min-st-exp", 1));
    CHECK(one_free.witness.cut_edges == std::vector<EdgeId>{AB, CD, AD});
    CHECK(one_free.witness.discount_set == std::vector<EdgeId>{CD});
    CHECK(one_free.enumerated == 16);
}

TEST_CASE("example support set") {
    const auto support = oracle_support(figure_one().graph);
    CHECK(support.costs == std::vector<Cost>{0, 6, 7, 8, 10, 12, 13, 14, 17, 18, 19, 20});
    CHECK_FALSE(support.one_sided);
}

TEST_CASE("oracle agrees with a direct scan on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_connected(3 + seed % 6, seed % 5, 9, seed);
        const std::size_t n = g.vertex_count();
        for (const char* name : {"min-global-exp", "max-st-cheap"}) {
            auto spec = parse_variant(name);
            if (spec.is_st()) spec.terminals = Terminals{0, static_cast<VertexId>(n - 1)};
            spec.k = seed % 3;
            std::optional<Cost> best;
            for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
                if (spec.is_st() && (!(bits & 1u) || (bits >> (n - 1) & 1u))) continue;
                std::vector<Cost> cut;
                for (const auto& e : g.edges())
                    if ((bits >> e.u & 1u) != (bits >> e.v & 1u)) cut.push_back(e.cost);
                const Cost v = discounted_reference(cut, spec.k, spec.mode == Mode::Expensive);
                if (!best || (spec.objective == Objective::Min ? v < *best : v > *best)) best = v;
            }
            CHECK(oracle_opt(g, spec).optimum == *best);
        }
    }
}

TEST_CASE("enumeration limit") {
    WeightedMultigraph g(kOracleMaxVertices + 1);
    for (VertexId v = 1; v < g.vertex_count(); ++v) g.add_edge(v - 1, v, 1);
    CHECK_THROWS_AS(oracle_opt(g, parse_variant("min-global-exp")), InstanceTooLarge);
    CHECK_THROWS_AS(oracle_support(g), InstanceTooLarge);
}

TEST_CASE("global scope on a disconnected graph has a free cut") {
    WeightedMultigraph g(4);
    g.add_edge(0, 1, 5);
    g.add_edge(2, 3, 5);
    const auto r = oracle_opt(g, parse_variant("min-global-cheap"));
    CHECK(r.optimum == 0);
    CHECK(r.witness.cut_edges.empty());
}
