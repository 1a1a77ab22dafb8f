#pragma once

#include "discut/instance_io.hpp"

#include <cstdint>

namespace discut {

struct RandomPlanarOptions {
    bool diagonals = false;         // one random diagonal per grid cell
    std::size_t parallel_edges = 0; // extra copies of random edges, drawn beside them
    std::uint32_t removal_percent = 35;
};

/// r x c grid with r the largest divisor of n not above sqrt(n); straight-line
/// rotation system, terminals at opposite corners.
Instance generate_grid(std::size_t n, Cost max_cost, std::uint64_t seed);

/// Grid (optionally with diagonals and parallel edges) minus random non-bridge
/// edges; the rotation system follows every deletion.
Instance generate_random_planar(std::size_t n, Cost max_cost, std::uint64_t seed, RandomPlanarOptions options = {});

/// Random spanning tree plus independent extra edges (probability in
/// percent); no rotation system. Terminals are 1 and n.
Instance generate_random(std::size_t n, Cost max_cost, std::uint64_t seed, std::uint32_t edge_percent = 30);

/// Random connected d-regular simple graph (configuration model with retries).
WeightedMultigraph generate_regular(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace discut
