#include "discut/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace discut;

TEST_CASE("grid shape and rotation") {
    const auto g = generate_grid(4, 9, 1);
    CHECK(g.graph.vertex_count() == 4);
    CHECK(g.graph.edge_count() == 4);
    REQUIRE(g.embedding);
    CHECK(g.embedding->is_planar());
    CHECK(g.embedding->face_count() == 2);
    const auto g12 = generate_grid(12, 9, 1);
    CHECK(g12.graph.edge_count() == 3 * 3 + 2 * 4);
    const auto prime = generate_grid(7, 9, 1);
    CHECK(prime.graph.edge_count() == 6);
}

TEST_CASE("random plane graphs keep Euler's formula") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomPlanarOptions options;
        options.diagonals = seed % 2;
        options.parallel_edges = seed % 4;
        const auto inst = generate_random_planar(2 + seed % 15, 20, seed, options);
        const auto& g = inst.graph;
        REQUIRE(inst.embedding);
        CHECK(is_connected(g));
        CHECK(static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                  static_cast<long>(inst.embedding->face_count()) ==
              2);
        for (const auto& e : g.edges()) {
            CHECK(e.cost >= 1);
            CHECK(e.cost <= 20);
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(instance_to_string(generate_random_planar(9, 7, seed)) ==
              instance_to_string(generate_random_planar(9, 7, seed)));
        CHECK(instance_to_string(generate_random(9, 7, seed)) == instance_to_string(generate_random(9, 7, seed)));
    }
    CHECK(instance_to_string(generate_random(9, 7, 1)) != instance_to_string(generate_random(9, 7, 2)));
}

TEST_CASE("random graphs are connected and simple") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = generate_random(3 + seed, 5, seed, 40);
        CHECK(is_connected(inst.graph));
        CHECK_FALSE(inst.embedding);
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& e : inst.graph.edges()) CHECK(seen.insert(std::minmax(e.u, e.v)).second);
    }
}

TEST_CASE("generated instances round trip") {
    const auto inst = generate_random_planar(10, 6, 3, {true, 2});
    const auto text = instance_to_string(inst);
    CHECK(instance_to_string(parse_instance_string(text)) == text);
}

TEST_CASE("regular graphs") {
    const auto g = generate_regular(10, 3, 4);
    for (VertexId v = 0; v < 10; ++v) CHECK(g.incident(v).size() == 3);
    CHECK_THROWS_AS(generate_regular(5, 3, 1), InvalidInput);
    CHECK_THROWS_AS(generate_grid(1, 3, 1), InvalidInput);
    CHECK_THROWS_AS(generate_random(4, 0, 1), InvalidInput);
}
