#include "discut/gadget.hpp"

#include "discut/generators.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace discut;
using namespace discut::testing;

namespace {

WeightedMultigraph complete(std::size_t n) {
    WeightedMultigraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    return g;
}

WeightedMultigraph petersen() {
    WeightedMultigraph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5, 1);
        g.add_edge(i, i + 5, 1);
        g.add_edge(i + 5, (i + 2) % 5 + 5, 1);
    }
    return g;
}

WeightedMultigraph cycle(std::size_t n) {
    WeightedMultigraph g(n);
    for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n), 1);
    return g;
}

}  // namespace

TEST_CASE("parameters of the clique gadget") {
    const auto k4 = build_gadget(complete(4), 3, GadgetVariant::NP);
    CHECK(k4.p == 3);
    CHECK(k4.q == 8);
    CHECK(k4.k_prime == 24);
    CHECK(k4.beta == 15);
    CHECK(k4.graph.vertex_count() == 6);
    CHECK(k4.graph.edge_count() == 6 + 4 * 8 + 4 * 12);
    CHECK(k4.terminals.s == 4);
    CHECK(k4.terminals.t == 5);

    const auto pw = build_gadget(petersen(), 3, GadgetVariant::W1);
    CHECK(pw.p == 3);
    CHECK(pw.q == 8);
    CHECK(pw.k_prime == 3);
    CHECK(pw.beta == 87);
    CHECK(pw.graph.edge_count() == 15 + 10 + 10 * 12);
}

TEST_CASE("gadget preconditions") {
    CHECK_THROWS_AS(build_gadget(cycle(5), 3, GadgetVariant::NP), InvalidInput);
    CHECK_THROWS_AS(build_gadget(complete(4), 4, GadgetVariant::NP), InvalidInput);
    CHECK_THROWS_AS(build_gadget(complete(4), 1, GadgetVariant::NP), InvalidInput);
    WeightedMultigraph path(3);
    path.add_edge(0, 1, 1);
    path.add_edge(1, 2, 1);
    CHECK_THROWS_AS(build_gadget(path, 2, GadgetVariant::NP), InvalidInput);
}

TEST_CASE("planted cut costs exactly beta") {
    const auto src = complete(4);
    const std::vector<VertexId> k{0, 2, 3};
    for (auto variant : {GadgetVariant::NP, GadgetVariant::W1}) {
        const auto inst = build_gadget(src, 3, variant);
        CHECK(planted_cut(inst, src, k).discounted_cost == 15);
        const auto simple = build_gadget(src, 3, variant, true);
        CHECK(simple.graph.edge_count() == 2 * inst.graph.edge_count());
        CHECK(planted_cut(simple, src, k).discounted_cost == 15);
    }
    const auto inst = build_gadget(src, 3, GadgetVariant::NP);
    const std::vector<VertexId> wrong_size{0, 1};
    CHECK_THROWS_AS(planted_cut(inst, src, wrong_size), InvalidInput);
    const auto p = petersen();
    const auto pg = build_gadget(p, 3, GadgetVariant::NP);
    const std::vector<VertexId> not_clique{0, 1, 2};
    CHECK_THROWS_AS(planted_cut(pg, p, not_clique), InvalidInput);
}

TEST_CASE("canonical scans against an independent evaluation") {
    CHECK(canonical_family_scan(build_gadget(complete(4), 3, GadgetVariant::NP)) == 15);
    CHECK(canonical_family_scan(build_gadget(petersen(), 3, GadgetVariant::NP)) == 89);
    CHECK(canonical_family_scan(build_gadget(complete(5), 4, GadgetVariant::NP)) == 19);
    CHECK(canonical_family_scan(build_gadget(complete(4), 3, GadgetVariant::W1)) == 8);
    CHECK(canonical_family_scan(build_gadget(petersen(), 3, GadgetVariant::W1)) == 56);
}

TEST_CASE("clique helpers agree with brute force") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 6 + 2 * (seed % 4);
        const auto g = generate_regular(n, 3, seed);
        CHECK(regular_degree(g) == std::optional<std::size_t>{3});
        for (std::size_t k = 2; k <= 4; ++k) {
            const auto found = find_clique(g, k);
            CHECK(found.has_value() == has_clique_brute(g, k));
            if (found) CHECK(is_clique(g, *found));
        }
    }
    CHECK(regular_degree(cycle(4)) == std::optional<std::size_t>{2});
}

TEST_CASE("canonical side layout") {
    const auto inst = build_gadget(complete(4), 3, GadgetVariant::NP);
    const std::vector<std::uint8_t> x{1, 0, 1, 0};
    CHECK(canonical_side(inst, x) == SideMask{0, 1, 0, 1, 1, 0});
}

TEST_CASE("scan size guard") {
    WeightedMultigraph big = cycle(22);
    CHECK_THROWS_AS(canonical_family_scan(build_gadget(big, 2, GadgetVariant::NP)), InstanceTooLarge);
}
